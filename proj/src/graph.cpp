#include "aromatic/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace aromatic {

AromaticGraph::AromaticGraph(std::vector<int> targets) : targets_(std::move(targets)) {
    if (targets_.empty()) throw std::invalid_argument("graph must have at least one vertex");
    const int n = size();
    for (int t : targets_)
        if (t != kRoot && (t < 0 || t >= n))
            throw std::invalid_argument("target index out of range");
}

std::vector<int> AromaticGraph::roots() const {
    std::vector<int> r;
    for (int v = 0; v < size(); ++v)
        if (targets_[v] == kRoot) r.push_back(v);
    return r;
}

int AromaticGraph::root_count() const { return static_cast<int>(roots().size()); }

std::vector<int> AromaticGraph::parents(int v) const {
    std::vector<int> p;
    for (int u = 0; u < size(); ++u)
        if (targets_[u] == v) p.push_back(u);
    return p;
}

std::vector<std::vector<int>> AromaticGraph::components() const {
    const int n = size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        // BFS over the underlying undirected graph
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int u) {
                if (u >= 0 && comp[u] == -1) {
                    comp[u] = nc;
                    stack.push_back(u);
                }
            };
            visit(targets_[v]);
            for (int u = 0; u < n; ++u)
                if (targets_[u] == v) visit(u);
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

bool AromaticGraph::is_tree() const {
    return components().size() == 1 && root_count() == 1;
}

bool AromaticGraph::is_molecule() const {
    return components().size() == 1 && root_count() == 0;
}

AromaticGraph AromaticGraph::induced(const std::vector<int>& vertices) const {
    std::vector<int> index(size(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
    std::vector<int> t(vertices.size());
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        int tv = targets_[vertices[i]];
        if (tv == kRoot) {
            t[i] = kRoot;
        } else {
            if (index[tv] == -1)
                throw std::invalid_argument("induced subgraph cuts an edge");
            t[i] = index[tv];
        }
    }
    return AromaticGraph(std::move(t));
}

AromaticGraph product(const AromaticGraph& a, const AromaticGraph& b) {
    std::vector<int> t = a.targets();
    const int off = a.size();
    for (int v = 0; v < b.size(); ++v) {
        int tv = b.target(v);
        t.push_back(tv == AromaticGraph::kRoot ? AromaticGraph::kRoot : tv + off);
    }
    return AromaticGraph(std::move(t));
}

namespace {

// Per-vertex tree structure used while canonicalizing: children restricted
// to non-cycle edges.
struct TreeView {
    const AromaticGraph* g;
    std::vector<std::vector<int>> children;  // children[v], indices into g
};

TreeView make_tree_view(const AromaticGraph& g) {
    TreeView tv{&g, std::vector<std::vector<int>>(g.size())};
    for (int v = 0; v < g.size(); ++v)
        if (g.target(v) != AromaticGraph::kRoot) tv.children[g.target(v)].push_back(v);
    return tv;
}

std::string tree_encode(const TreeView& tv, int v) {
    std::vector<std::string> cs;
    for (int c : tv.children[v]) cs.push_back(tree_encode(tv, c));
    std::sort(cs.begin(), cs.end());
    std::string s = "(";
    for (auto& c : cs) s += c;
    s += ")";
    return s;
}

// Preorder with children sorted by encoding; ties resolved by the first
// occurrence (equal encodings mean isomorphic subtrees).
void tree_order(const TreeView& tv, int v, std::vector<int>& out) {
    out.push_back(v);
    std::vector<std::pair<std::string, int>> cs;
    for (int c : tv.children[v]) cs.emplace_back(tree_encode(tv, c), c);
    std::stable_sort(cs.begin(), cs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [enc, c] : cs) tree_order(tv, c, out);
}

long tree_symmetry(const TreeView& tv, int v) {
    std::vector<std::string> cs;
    long s = 1;
    for (int c : tv.children[v]) {
        cs.push_back(tree_encode(tv, c));
        s *= tree_symmetry(tv, c);
    }
    std::sort(cs.begin(), cs.end());
    for (size_t i = 0; i < cs.size();) {
        size_t j = i;
        while (j < cs.size() && cs[j] == cs[i]) ++j;
        for (size_t m = 2; m <= j - i; ++m) s *= static_cast<long>(m);
        i = j;
    }
    return s;
}

// Directed cycle of a rootless connected component, in edge direction.
std::vector<int> find_cycle(const AromaticGraph& g, int start) {
    std::map<int, int> pos;
    std::vector<int> walk;
    int v = start;
    while (!pos.count(v)) {
        pos[v] = static_cast<int>(walk.size());
        walk.push_back(v);
        v = g.target(v);
    }
    return {walk.begin() + pos[v], walk.end()};
}

struct ComponentInfo {
    bool is_tree;
    std::string enc;
    std::vector<int> order;  // canonical vertex order, root first for trees
    long sigma;
};

ComponentInfo analyze_tree_component(const AromaticGraph& g, int root) {
    TreeView tv = make_tree_view(g);
    ComponentInfo ci;
    ci.is_tree = true;
    ci.enc = "T" + tree_encode(tv, root);
    tree_order(tv, root, ci.order);
    ci.sigma = tree_symmetry(tv, root);
    return ci;
}

ComponentInfo analyze_molecule_component(const AromaticGraph& g) {
    std::vector<int> cycle = find_cycle(g, 0);
    const int L = static_cast<int>(cycle.size());
    std::vector<bool> on_cycle(g.size(), false);
    for (int c : cycle) on_cycle[c] = true;

    TreeView tv = make_tree_view(g);
    for (int i = 0; i < L; ++i) {
        // drop the cycle predecessor from the hanging-tree children
        int succ = cycle[(i + 1) % L];
        auto& ch = tv.children[succ];
        ch.erase(std::remove(ch.begin(), ch.end(), cycle[i]), ch.end());
    }

    std::vector<std::string> encs(L);
    for (int i = 0; i < L; ++i) encs[i] = tree_encode(tv, cycle[i]);

    int best = 0;
    for (int r = 1; r < L; ++r) {
        for (int i = 0; i < L; ++i) {
            const std::string& a = encs[(r + i) % L];
            const std::string& b = encs[(best + i) % L];
            if (a < b) { best = r; break; }
            if (a > b) break;
        }
    }

    ComponentInfo ci;
    ci.is_tree = false;
    ci.enc = "C{";
    for (int i = 0; i < L; ++i) ci.enc += encs[(best + i) % L] + ",";
    ci.enc += "}";
    for (int i = 0; i < L; ++i) tree_order(tv, cycle[(best + i) % L], ci.order);

    int period = L;
    for (int p = 1; p < L; ++p) {
        if (L % p != 0) continue;
        bool ok = true;
        for (int i = 0; i < L && ok; ++i) ok = encs[i] == encs[(i + p) % L];
        if (ok) { period = p; break; }
    }
    ci.sigma = L / period;
    for (int i = 0; i < L; ++i) ci.sigma *= tree_symmetry(tv, cycle[i]);
    return ci;
}

std::vector<ComponentInfo> analyze(const AromaticGraph& g,
                                   std::vector<std::vector<int>>& comps) {
    comps = g.components();
    std::vector<ComponentInfo> infos;
    for (auto& cv : comps) {
        AromaticGraph sub = g.induced(cv);
        auto rs = sub.roots();
        ComponentInfo ci = rs.empty() ? analyze_molecule_component(sub)
                                      : analyze_tree_component(sub, rs[0]);
        for (int& v : ci.order) v = cv[v];  // back to parent-graph indices
        infos.push_back(std::move(ci));
    }
    return infos;
}

}  // namespace

CanonicalForm canonicalize(const AromaticGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<ComponentInfo> infos = analyze(g, comps);

    std::vector<int> idx(infos.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (infos[a].is_tree != infos[b].is_tree) return infos[a].is_tree;
        return infos[a].enc < infos[b].enc;
    });

    // Roots first (in sorted component order), then remaining vertices.
    std::vector<int> label(g.size(), -1);
    int next = 0;
    for (int i : idx)
        if (infos[i].is_tree) label[infos[i].order[0]] = next++;
    for (int i : idx) {
        size_t skip = infos[i].is_tree ? 1 : 0;
        for (size_t j = skip; j < infos[i].order.size(); ++j)
            label[infos[i].order[j]] = next++;
    }

    std::vector<int> t(g.size());
    for (int v = 0; v < g.size(); ++v) {
        int tv = g.target(v);
        t[label[v]] = tv == AromaticGraph::kRoot ? AromaticGraph::kRoot : label[tv];
    }
    CanonicalForm cf;
    cf.graph = AromaticGraph(std::move(t));
    cf.labeling = std::move(label);
    cf.key = encode_targets(cf.graph);
    return cf;
}

CanonicalKey canonical_key(const AromaticGraph& g) { return canonicalize(g).key; }

std::string encode_targets(const AromaticGraph& g) {
    std::string s = "[";
    for (int v = 0; v < g.size(); ++v) {
        if (v) s += ",";
        s += std::to_string(g.target(v) + 1);
    }
    s += "]";
    return s;
}

AromaticGraph parse_graph(const std::string& text) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("graph encoding must look like [0,1,1]");
    std::vector<int> t;
    size_t i = 1;
    while (i < text.size() - 1) {
        size_t j = text.find(',', i);
        if (j == std::string::npos || j > text.size() - 1) j = text.size() - 1;
        std::string tok = text.substr(i, j - i);
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad vertex index in graph encoding: " + tok);
        }
        if (used != tok.size() || v < 0)
            throw std::invalid_argument("bad vertex index in graph encoding: " + tok);
        t.push_back(v - 1);
        i = j + 1;
    }
    return AromaticGraph(std::move(t));
}

long symmetry(const AromaticGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<ComponentInfo> infos = analyze(g, comps);
    long s = 1;
    std::vector<std::string> encs;
    for (auto& ci : infos) {
        s *= ci.sigma;
        encs.push_back(ci.enc);
    }
    std::sort(encs.begin(), encs.end());
    for (size_t i = 0; i < encs.size();) {
        size_t j = i;
        while (j < encs.size() && encs[j] == encs[i]) ++j;
        for (size_t m = 2; m <= j - i; ++m) s *= static_cast<long>(m);
        i = j;
    }
    return s;
}

std::pair<std::vector<AromaticGraph>, AromaticGraph> decompose(const AromaticGraph& g) {
    if (g.root_count() != 1)
        throw std::invalid_argument("decompose requires exactly one root");
    std::vector<AromaticGraph> molecules;
    AromaticGraph tree;
    for (auto& cv : g.components()) {
        AromaticGraph sub = canonicalize(g.induced(cv)).graph;
        if (sub.root_count() == 1)
            tree = sub;
        else
            molecules.push_back(sub);
    }
    std::sort(molecules.begin(), molecules.end(),
              [](const AromaticGraph& a, const AromaticGraph& b) {
                  return encode_targets(a) < encode_targets(b);
              });
    return {molecules, tree};
}

namespace {

void check_order(int k, int max_order) {
    if (k < 1 || k > max_order)
        throw std::out_of_range("order must be between 1 and " + std::to_string(max_order));
}

// Append graph `sub` as child components of a new common structure is done
// at the call sites; this helper just collects unique canonical graphs.
struct KeyedSet {
    std::map<CanonicalKey, AromaticGraph> items;
    void insert(const AromaticGraph& g) {
        CanonicalForm cf = canonicalize(g);
        items.emplace(cf.key, cf.graph);
    }
    std::vector<AromaticGraph> sorted() const {
        std::vector<AromaticGraph> out;
        for (auto& [k, g] : items) out.push_back(g);
        return out;
    }
};

std::vector<AromaticGraph> trees_up_to(int k);

// Trees of order exactly k: a root plus a multiset of subtrees of total
// size k-1, chosen as a non-decreasing sequence over the global tree list.
std::vector<AromaticGraph> trees_of_order(int k) {
    if (k == 1) return {AromaticGraph({AromaticGraph::kRoot})};
    std::vector<AromaticGraph> pool = trees_up_to(k - 1);
    KeyedSet out;
    std::vector<const AromaticGraph*> chosen;
    auto rec = [&](auto&& self, size_t start, int remaining) -> void {
        if (remaining == 0) {
            std::vector<int> t{AromaticGraph::kRoot};
            for (const AromaticGraph* sub : chosen) {
                int off = static_cast<int>(t.size());
                for (int v = 0; v < sub->size(); ++v) {
                    int tv = sub->target(v);
                    t.push_back(tv == AromaticGraph::kRoot ? 0 : tv + off);
                }
            }
            out.insert(AromaticGraph(t));
            return;
        }
        for (size_t i = start; i < pool.size(); ++i) {
            if (pool[i].size() > remaining) continue;
            chosen.push_back(&pool[i]);
            self(self, i, remaining - pool[i].size());
            chosen.pop_back();
        }
    };
    rec(rec, 0, k - 1);
    return out.sorted();
}

std::vector<AromaticGraph> trees_up_to(int k) {
    std::vector<AromaticGraph> all;
    for (int j = 1; j <= k; ++j) {
        auto tj = trees_of_order(j);
        all.insert(all.end(), tj.begin(), tj.end());
    }
    return all;
}

}  // namespace

std::vector<AromaticGraph> enumerate_trees(int k, int max_order) {
    check_order(k, max_order);
    return trees_of_order(k);
}

std::vector<AromaticGraph> enumerate_molecules(int k, int max_order) {
    check_order(k, max_order);
    // Necklaces of rooted trees over cycle lengths 1..k; rotations collapse
    // under canonical dedupe.
    std::vector<AromaticGraph> pool = trees_up_to(k);
    KeyedSet out;
    std::vector<const AromaticGraph*> tuple;
    auto build = [&]() {
        std::vector<int> t;
        std::vector<int> tree_roots;
        for (const AromaticGraph* tr : tuple) {
            int off = static_cast<int>(t.size());
            tree_roots.push_back(off);  // canonical trees have the root at 0
            for (int v = 0; v < tr->size(); ++v) {
                int tv = tr->target(v);
                t.push_back(tv == AromaticGraph::kRoot ? AromaticGraph::kRoot : tv + off);
            }
        }
        const int L = static_cast<int>(tuple.size());
        for (int i = 0; i < L; ++i) t[tree_roots[i]] = tree_roots[(i + 1) % L];
        out.insert(AromaticGraph(t));
    };
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (!tuple.empty()) build();
            return;
        }
        for (const AromaticGraph& tr : pool) {
            if (tr.size() > remaining) continue;
            tuple.push_back(&tr);
            self(self, remaining - tr.size());
            tuple.pop_back();
        }
    };
    rec(rec, k);
    return out.sorted();
}

std::vector<AromaticGraph> enumerate_aromatic_trees(int k, int max_order) {
    check_order(k, max_order);
    std::vector<std::vector<AromaticGraph>> mols(k);
    std::vector<AromaticGraph> mol_pool;
    for (int j = 1; j < k; ++j) {
        auto mj = enumerate_molecules(j, max_order);
        mol_pool.insert(mol_pool.end(), mj.begin(), mj.end());
    }
    KeyedSet out;
    std::vector<const AromaticGraph*> chosen;
    auto rec = [&](auto&& self, size_t start, int remaining, const AromaticGraph& tree) -> void {
        if (remaining == 0) {
            AromaticGraph g = tree;
            for (const AromaticGraph* m : chosen) g = product(g, *m);
            out.insert(g);
            return;
        }
        for (size_t i = start; i < mol_pool.size(); ++i) {
            if (mol_pool[i].size() > remaining) continue;
            chosen.push_back(&mol_pool[i]);
            self(self, i, remaining - mol_pool[i].size(), tree);
            chosen.pop_back();
        }
    };
    for (int j = 1; j <= k; ++j)
        for (const AromaticGraph& tr : enumerate_trees(j, max_order)) rec(rec, 0, k - j, tr);
    return out.sorted();
}

}  // namespace aromatic
