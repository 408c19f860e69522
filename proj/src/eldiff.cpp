#include "aromatic/eldiff.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace aromatic {

namespace {

struct Shape {
    int n, k, r;
    std::vector<std::vector<int>> parents;  // per vertex
    std::vector<int> roots;
};

Shape make_shape(const AromaticGraph& g, const PolyVectorField& f) {
    Shape s;
    s.n = f.dim();
    s.k = g.size();
    s.roots = g.roots();
    s.r = static_cast<int>(s.roots.size());
    if (s.r > 2)
        throw std::invalid_argument("elementary differentials with more than 2 roots "
                                    "are not materialized");
    s.parents.resize(s.k);
    for (int v = 0; v < s.k; ++v) s.parents[v] = g.parents(v);
    return s;
}

// Memoized mixed partial derivatives of the field components, keyed by
// (component, sorted index multiset).
class DerivCache {
public:
    explicit DerivCache(const PolyVectorField& f) : f_(&f) {}

    const Polynomial& get(int comp, std::vector<int> idx) {
        std::sort(idx.begin(), idx.end());
        auto key = std::make_pair(comp, std::move(idx));
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Polynomial p = (*f_)[comp];
        for (int i : key.second) p = p.derivative(i);
        return cache_.emplace(std::move(key), std::move(p)).first->second;
    }

private:
    const PolyVectorField* f_;
    std::map<std::pair<int, std::vector<int>>, Polynomial> cache_;
};

struct Accum {
    explicit Accum(const Shape& s)
        : root_count(s.r),
          scalar(s.n),
          vec(s.n),
          tensor(s.r == 2 ? s.n : 0,
                 std::vector<Polynomial>(s.r == 2 ? s.n : 0, Polynomial(s.n))) {}

    void add(const Shape& s, const std::vector<int>& nu, const Polynomial& term) {
        switch (s.r) {
            case 0:
                scalar += term;
                break;
            case 1:
                vec[nu[s.roots[0]]] += term;
                break;
            default: {
                int a = nu[s.roots[0]], b = nu[s.roots[1]];
                Polynomial half = term * Rat(1, 2);
                tensor[a][b] += half;
                tensor[b][a] += half;
            }
        }
    }

    void merge(const Accum& o) {
        scalar += o.scalar;
        vec = vec + o.vec;
        for (size_t a = 0; a < tensor.size(); ++a)
            for (size_t b = 0; b < tensor.size(); ++b) tensor[a][b] += o.tensor[a][b];
    }

    EldiffResult finish() && {
        return EldiffResult{root_count, std::move(scalar), std::move(vec),
                            std::move(tensor)};
    }

    int root_count;
    Polynomial scalar;
    PolyVectorField vec;
    std::vector<std::vector<Polynomial>> tensor;
};

// Product of the per-vertex derivative factors for one assignment;
// short-circuits on a zero factor.
bool assignment_term(const Shape& s, DerivCache& cache, const std::vector<int>& nu,
                     Polynomial& out) {
    out = Polynomial::constant(s.n, 1);
    for (int v = 0; v < s.k; ++v) {
        std::vector<int> idx;
        idx.reserve(s.parents[v].size());
        for (int p : s.parents[v]) idx.push_back(nu[p]);
        const Polynomial& factor = cache.get(nu[v], idx);
        if (factor.is_zero()) return false;
        out = out * factor;
    }
    return true;
}

void naive_range(const Shape& s, const PolyVectorField& f, int first, Accum& acc) {
    DerivCache cache(f);
    std::vector<int> nu(s.k, 0);
    nu[0] = first;
    Polynomial term(s.n);
    for (;;) {
        if (assignment_term(s, cache, nu, term)) acc.add(s, nu, term);
        int v = s.k - 1;
        while (v >= 1 && ++nu[v] == s.n) nu[v--] = 0;
        if (v < 1) break;  // nu[0] stays pinned to `first`
    }
}

// Backtracking over homomorphisms into dgr(f). Vertices are visited in an
// order where each one (after the first per component) touches an already
// assigned neighbour, so edge checks prune early.
struct HomSearch {
    const Shape& s;
    const PolyVectorField& f;
    DepGraph dgr;
    std::vector<int> order;                           // visit order
    std::vector<std::vector<std::pair<int, bool>>> checks;
    // checks[pos] = (earlier vertex u, true when edge is v->u in the graph)

    HomSearch(const Shape& s_, const AromaticGraph& g, const PolyVectorField& f_)
        : s(s_), f(f_), dgr(dependency_graph(f_)) {
        std::vector<std::vector<int>> adj(s.k);
        for (int v = 0; v < s.k; ++v)
            if (g.target(v) != AromaticGraph::kRoot) {
                adj[v].push_back(g.target(v));
                adj[g.target(v)].push_back(v);
            }
        std::vector<bool> seen(s.k, false);
        for (int start = 0; start < s.k; ++start) {
            if (seen[start]) continue;
            std::vector<int> queue{start};
            seen[start] = true;
            while (!queue.empty()) {
                int v = queue.front();
                queue.erase(queue.begin());
                order.push_back(v);
                for (int u : adj[v])
                    if (!seen[u]) {
                        seen[u] = true;
                        queue.push_back(u);
                    }
            }
        }
        std::vector<int> pos(s.k);
        for (int i = 0; i < s.k; ++i) pos[order[i]] = i;
        checks.resize(s.k);
        for (int v = 0; v < s.k; ++v) {
            int t = g.target(v);
            if (t == AromaticGraph::kRoot) continue;
            // edge v -> t; record the check at whichever endpoint comes later
            if (pos[v] > pos[t])
                checks[pos[v]].emplace_back(t, true);
            else
                checks[pos[t]].emplace_back(v, false);
        }
    }

    void run(int depth, std::vector<int>& nu, DerivCache& cache, Accum& acc,
             int pin_first) const {
        if (depth == s.k) {
            Polynomial term(s.n);
            if (assignment_term(s, cache, nu, term)) acc.add(s, nu, term);
            return;
        }
        int v = order[depth];
        int lo = 0, hi = s.n;
        if (depth == 0 && pin_first >= 0) {
            lo = pin_first;
            hi = pin_first + 1;
        }
        for (int c = lo; c < hi; ++c) {
            bool ok = true;
            for (auto& [u, outgoing] : checks[depth]) {
                // outgoing: edge v->u maps to (c, nu[u]); else u->v.
                // A self-loop (u == v) compares the candidate with itself.
                int other = u == v ? c : nu[u];
                if (outgoing ? !dgr.has(c, other) : !dgr.has(other, c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            nu[v] = c;
            run(depth + 1, nu, cache, acc, pin_first);
        }
    }
};

}  // namespace

EldiffResult eldiff_naive(const AromaticGraph& g, const PolyVectorField& f) {
    Shape s = make_shape(g, f);
    Accum acc(s);
    if (s.n == 0) return std::move(acc).finish();
    for (int first = 0; first < s.n; ++first) naive_range(s, f, first, acc);
    return std::move(acc).finish();
}

EldiffResult eldiff_hom(const AromaticGraph& g, const PolyVectorField& f, Exec exec) {
    Shape s = make_shape(g, f);
    HomSearch search(s, g, f);
    if (s.n == 0) return Accum(s).finish();

    if (exec == Exec::parallel) {
        std::vector<Accum> partial(s.n, Accum(s));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int first = 0; first < s.n; ++first) {
            DerivCache cache(f);
            std::vector<int> nu(s.k, 0);
            search.run(0, nu, cache, partial[first], first);
        }
        Accum acc(s);
        for (auto& p : partial) acc.merge(p);
        return std::move(acc).finish();
    }

    Accum acc(s);
    DerivCache cache(f);
    std::vector<int> nu(s.k, 0);
    search.run(0, nu, cache, acc, -1);
    return std::move(acc).finish();
}

PolyVectorField eldiff_series(const ForestSeries& s, const PolyVectorField& f, Exec exec) {
    PolyVectorField out(f.dim());
    for (auto& [key, c] : s.terms()) {
        AromaticGraph g = parse_graph(key);
        if (g.root_count() != 1)
            throw std::invalid_argument("eldiff_series requires one-root keys");
        out = out + eldiff_hom(g, f, exec).vec * c;
    }
    return out;
}

}  // namespace aromatic
