#include "aromatic/polyfields.hpp"

#include <random>
#include <stdexcept>

namespace aromatic {

std::vector<std::pair<int, int>> DepGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (edge[j][i]) e.emplace_back(j, i);
    return e;
}

PolyVectorField connection(const PolyVectorField& f, const PolyVectorField& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
    const int n = f.dim();
    PolyVectorField r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += g[i].derivative(j) * f[j];
    return r;
}

DepGraph dependency_graph(const PolyVectorField& f) {
    const int n = f.dim();
    DepGraph d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.edge[j][i] = !f[i].derivative(j).is_zero();
    return d;
}

namespace {

// Re-express a polynomial of dim d in dim total variables at block offset.
Polynomial embed(const Polynomial& p, int total, int offset) {
    Polynomial r(total);
    for (auto& [e, c] : p.terms()) {
        Polynomial::Exps ne(total, 0);
        for (int i = 0; i < p.dim(); ++i) ne[offset + i] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

}  // namespace

PolyVectorField direct_sum(const PolyVectorField& f, const PolyVectorField& g) {
    const int n = f.dim(), m = g.dim();
    PolyVectorField r(n + m);
    for (int i = 0; i < n; ++i) r[i] = embed(f[i], n + m, 0);
    for (int i = 0; i < m; ++i) r[n + i] = embed(g[i], n + m, n);
    return r;
}

PolyVectorField pad_with_zero(const PolyVectorField& f, int total_dim) {
    if (total_dim < f.dim()) throw std::invalid_argument("padding cannot shrink the field");
    if (total_dim == f.dim()) return f;
    return direct_sum(f, PolyVectorField::zero(total_dim - f.dim()));
}

bool intertwines(const AffineMap& a, const PolyVectorField& f, const PolyVectorField& g) {
    if (a.cols() != f.dim() || a.rows() != g.dim())
        throw std::invalid_argument("affine map shape does not match the fields");
    std::vector<Polynomial> subs = a.as_substitution();
    for (int i = 0; i < g.dim(); ++i) {
        Polynomial lhs = g[i].substitute(subs);  // g_i(Ax+b), in source vars
        Polynomial rhs(f.dim());
        for (int j = 0; j < f.dim(); ++j) rhs += f[j] * a.a(i, j);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

PolyVectorField dual_field(const AromaticGraph& g) {
    const int n = g.size();
    PolyVectorField f(n);
    for (int j = 0; j < n; ++j) {
        Polynomial::Exps e(n, 0);
        for (int i : g.parents(j)) e[i] += 1;
        f[j] = Polynomial::monomial(n, e, 1);
    }
    return f;
}

PolyVectorField random_field(int dim, int max_degree, int term_count, std::uint64_t seed) {
    if (dim < 1 || max_degree < 0 || term_count < 1)
        throw std::invalid_argument("random_field bounds must be positive");
    std::mt19937_64 rng(seed);
    PolyVectorField f(dim);
    for (int i = 0; i < dim; ++i) {
        for (int t = 0; t < term_count; ++t) {
            int deg = static_cast<int>(rng() % (max_degree + 1));
            Polynomial::Exps e(dim, 0);
            for (int d = 0; d < deg; ++d) e[rng() % dim] += 1;
            long raw = static_cast<long>(rng() % 6);  // {-3..3} minus 0
            Rat c = raw < 3 ? Rat(raw - 3) : Rat(raw - 2);
            f[i].add_term(e, c);
        }
    }
    return f;
}

}  // namespace aromatic
