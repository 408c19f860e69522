#include "aromatic/integrators.hpp"

#include <algorithm>
#include <stdexcept>

namespace aromatic {

namespace {

// Truncated formal power series in h whose coefficients are polynomials
// in the state variables.
struct ScalarJet {
    int dim;
    std::vector<Polynomial> c;  // c[j] = h^j coefficient, size K+1

    ScalarJet(int dim_, int K) : dim(dim_), c(K + 1, Polynomial(dim_)) {}

    int order() const { return static_cast<int>(c.size()) - 1; }

    ScalarJet operator+(const ScalarJet& o) const {
        ScalarJet r = *this;
        for (size_t j = 0; j < c.size(); ++j) r.c[j] += o.c[j];
        return r;
    }
    ScalarJet operator*(const ScalarJet& o) const {
        ScalarJet r(dim, order());
        for (int i = 0; i <= order(); ++i) {
            if (c[i].is_zero()) continue;
            for (int j = 0; i + j <= order(); ++j) r.c[i + j] += c[i] * o.c[j];
        }
        return r;
    }
    ScalarJet scaled(const Rat& k) const {
        ScalarJet r(dim, order());
        for (size_t j = 0; j < c.size(); ++j) r.c[j] = c[j] * k;
        return r;
    }
    ScalarJet shifted() const {  // multiply by h
        ScalarJet r(dim, order());
        for (int j = order(); j >= 1; --j) r.c[j] = c[j - 1];
        return r;
    }
};

using JetVec = std::vector<ScalarJet>;

JetVec identity_jet(int n, int K) {
    JetVec y(n, ScalarJet(n, K));
    for (int i = 0; i < n; ++i) y[i].c[0] = Polynomial::variable(n, i);
    return y;
}

JetVec zero_jet(int n, int K) { return JetVec(n, ScalarJet(n, K)); }

JetVec jet_add(const JetVec& a, const JetVec& b) {
    JetVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

JetVec jet_scale(const JetVec& a, const Rat& k) {
    JetVec r = a;
    for (auto& s : r) s = s.scaled(k);
    return r;
}

JetVec jet_shift(const JetVec& a) {
    JetVec r = a;
    for (auto& s : r) s = s.shifted();
    return r;
}

// f(Y) for a jet-valued point Y; per-variable power cache keeps the
// truncated products cheap.
JetVec compose(const PolyVectorField& f, const JetVec& y) {
    const int n = f.dim();
    const int K = y[0].order();
    std::vector<std::vector<ScalarJet>> powers(n);  // powers[i][e] = y_i^e
    for (int i = 0; i < n; ++i) {
        ScalarJet one(n, K);
        one.c[0] = Polynomial::constant(n, 1);
        powers[i].push_back(one);
    }
    auto power = [&](int i, int e) -> const ScalarJet& {
        while (static_cast<int>(powers[i].size()) <= e)
            powers[i].push_back(powers[i].back() * y[i]);
        return powers[i][e];
    };
    JetVec out = zero_jet(n, K);
    for (int j = 0; j < n; ++j) {
        for (auto& [exps, coeff] : f[j].terms()) {
            ScalarJet t(n, K);
            t.c[0] = Polynomial::constant(n, coeff);
            for (int i = 0; i < n; ++i)
                if (exps[i] > 0) t = t * power(i, exps[i]);
            out[j] = out[j] + t;
        }
    }
    return out;
}

JetExpansion finish(const JetVec& phi, int n, int K) {
    JetExpansion jx;
    jx.dim = n;
    for (int k = 1; k <= K; ++k) {
        PolyVectorField term(n);
        for (int i = 0; i < n; ++i) term[i] = phi[i].c[k];
        jx.terms.push_back(std::move(term));
    }
    return jx;
}

JetExpansion expand_rk(const ButcherTableau& t, const PolyVectorField& f, int K) {
    const int n = f.dim();
    const int s = t.stages();
    JetVec x = identity_jet(n, K);
    std::vector<JetVec> stages(s, x);
    std::vector<JetVec> fs(s, zero_jet(n, K));
    for (int it = 0; it < K; ++it) {
        for (int j = 0; j < s; ++j) fs[j] = jet_shift(compose(f, stages[j]));
        for (int i = 0; i < s; ++i) {
            JetVec y = x;
            for (int j = 0; j < s; ++j)
                if (t.a[i][j] != 0) y = jet_add(y, jet_scale(fs[j], t.a[i][j]));
            stages[i] = y;
        }
    }
    JetVec phi = x;
    for (int i = 0; i < s; ++i) {
        JetVec fi = jet_shift(compose(f, stages[i]));
        if (t.b[i] != 0) phi = jet_add(phi, jet_scale(fi, t.b[i]));
    }
    for (int i = 0; i < n; ++i) phi[i].c[0] = Polynomial(n);  // Phi - x
    return finish(phi, n, K);
}

JetExpansion expand_avf(const PolyVectorField& f, int K) {
    const int n = f.dim();
    JetVec x = identity_jet(n, K);
    JetVec y = x;
    int deg = 0;
    for (int i = 0; i < n; ++i) deg = std::max(deg, f[i].degree());

    // multi-indices alpha with |alpha| <= min(K, deg f)
    std::vector<std::vector<int>> alphas;
    std::vector<int> cur(n, 0);
    auto gen = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            alphas.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    gen(gen, 0, std::min(K, std::max(deg, 0)));

    for (int it = 0; it < K; ++it) {
        JetVec d = y;  // y - x, the O(h) displacement
        for (int i = 0; i < n; ++i) d[i].c[0] = Polynomial(n);
        JetVec g = zero_jet(n, K);
        for (auto& alpha : alphas) {
            int total = 0;
            mpz_class alpha_fact = 1;
            for (int i = 0; i < n; ++i) {
                total += alpha[i];
                alpha_fact *= factorial(alpha[i]);
            }
            Rat w(1);
            w /= Rat(alpha_fact * (total + 1));
            ScalarJet dpow(n, K);
            dpow.c[0] = Polynomial::constant(n, 1);
            for (int i = 0; i < n; ++i)
                for (int e = 0; e < alpha[i]; ++e) dpow = dpow * d[i];
            for (int j = 0; j < n; ++j) {
                Polynomial df = f[j];
                for (int i = 0; i < n && !df.is_zero(); ++i)
                    for (int e = 0; e < alpha[i]; ++e) df = df.derivative(i);
                if (df.is_zero()) continue;
                ScalarJet dfj(n, K);
                dfj.c[0] = df;
                g[j] = g[j] + (dpow * dfj).scaled(w);
            }
        }
        y = jet_add(x, jet_shift(g));
    }
    for (int i = 0; i < f.dim(); ++i) y[i].c[0] = Polynomial(f.dim());
    return finish(y, n, K);
}

JetExpansion expand_two_term(const PolyVectorField& f, int K, bool divergence) {
    const int n = f.dim();
    JetExpansion jx;
    jx.dim = n;
    jx.terms.assign(K, PolyVectorField::zero(n));
    if (K >= 1) jx.terms[0] = f;
    if (K >= 2) {
        PolyVectorField t2(n);
        if (divergence) {
            Polynomial div(n);
            for (int i = 0; i < n; ++i) div += f[i].derivative(i);
            for (int i = 0; i < n; ++i) t2[i] = div * f[i];
        } else {
            for (int i = 0; i < n; ++i) t2[i] = f[i] * f[i];
        }
        jx.terms[1] = t2;
    }
    return jx;
}

}  // namespace

bool ButcherTableau::is_explicit() const {
    for (int i = 0; i < stages(); ++i)
        for (int j = i; j < stages(); ++j)
            if (a[i][j] != 0) return false;
    return true;
}

void ButcherTableau::validate(bool strict_c) const {
    const int s = stages();
    if (s == 0) throw std::invalid_argument("tableau must have at least one stage");
    if (static_cast<int>(a.size()) != s || static_cast<int>(c.size()) != s)
        throw std::invalid_argument("tableau shape mismatch");
    for (auto& row : a)
        if (static_cast<int>(row.size()) != s)
            throw std::invalid_argument("tableau shape mismatch");
    if (strict_c)
        for (int i = 0; i < s; ++i) {
            Rat sum = 0;
            for (int j = 0; j < s; ++j) sum += a[i][j];
            if (sum != c[i])
                throw std::invalid_argument("row sum of a does not match c");
        }
}

ButcherTableau ButcherTableau::explicit_euler() {
    return {{{Rat(0)}}, {Rat(1)}, {Rat(0)}};
}

ButcherTableau ButcherTableau::implicit_midpoint() {
    return {{{Rat(1, 2)}}, {Rat(1)}, {Rat(1, 2)}};
}

ButcherTableau ButcherTableau::trapezoidal() {
    return {{{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1, 2)}},
            {Rat(1, 2), Rat(1, 2)},
            {Rat(0), Rat(1)}};
}

ButcherTableau ButcherTableau::classical_rk4() {
    return {{{Rat(0), Rat(0), Rat(0), Rat(0)},
             {Rat(1, 2), Rat(0), Rat(0), Rat(0)},
             {Rat(0), Rat(1, 2), Rat(0), Rat(0)},
             {Rat(0), Rat(0), Rat(1), Rat(0)}},
            {Rat(1, 6), Rat(1, 3), Rat(1, 3), Rat(1, 6)},
            {Rat(0), Rat(1, 2), Rat(1, 2), Rat(1)}};
}

IntegratorSpec IntegratorSpec::rk(ButcherTableau t) {
    t.validate();
    MethodKind k = t.is_explicit() ? MethodKind::explicit_rk : MethodKind::implicit_rk;
    return IntegratorSpec{k, std::move(t)};
}

IntegratorSpec IntegratorSpec::by_name(const std::string& name) {
    if (name == "euler") return rk(ButcherTableau::explicit_euler());
    if (name == "implicit-midpoint") return rk(ButcherTableau::implicit_midpoint());
    if (name == "trapezoidal") return rk(ButcherTableau::trapezoidal());
    if (name == "rk4") return rk(ButcherTableau::classical_rk4());
    if (name == "avf") return IntegratorSpec{MethodKind::avf, {}};
    if (name == "exact-flow") return IntegratorSpec{MethodKind::exact_flow, {}};
    if (name == "divergence-euler") return IntegratorSpec{MethodKind::divergence_euler, {}};
    if (name == "hadamard-euler") return IntegratorSpec{MethodKind::hadamard_euler, {}};
    throw std::invalid_argument("unknown method name: " + name);
}

JetExpansion expand(const IntegratorSpec& method, const PolyVectorField& f, int K) {
    if (K < 1 || K > kMaxJetOrder)
        throw std::out_of_range("jet order must be between 1 and " +
                                std::to_string(kMaxJetOrder));
    switch (method.kind) {
        case MethodKind::explicit_rk:
        case MethodKind::implicit_rk:
            method.tableau.validate();
            return expand_rk(method.tableau, f, K);
        case MethodKind::avf:
            return expand_avf(f, K);
        case MethodKind::exact_flow:
            return exact_flow_expansion(f, K);
        case MethodKind::divergence_euler:
            return expand_two_term(f, K, true);
        case MethodKind::hadamard_euler:
            return expand_two_term(f, K, false);
    }
    throw std::logic_error("unreachable");
}

JetExpansion exact_flow_expansion(const PolyVectorField& f, int K) {
    if (K < 1 || K > kMaxJetOrder)
        throw std::out_of_range("jet order must be between 1 and " +
                                std::to_string(kMaxJetOrder));
    const int n = f.dim();
    JetVec x = identity_jet(n, K);
    JetVec y = x;
    for (int it = 0; it < K; ++it) {
        JetVec fy = compose(f, y);
        // y <- x + integral of f(y) dh
        JetVec integ = zero_jet(n, K);
        for (int i = 0; i < n; ++i)
            for (int k = 1; k <= K; ++k) integ[i].c[k] = fy[i].c[k - 1] * Rat(1, k);
        y = jet_add(x, integ);
    }
    for (int i = 0; i < n; ++i) y[i].c[0] = Polynomial(n);
    return finish(y, n, K);
}

namespace {

// Stage weights: w_i(v) = prod over children u of (a w(u))_i.
std::vector<Rat> stage_weights(const ButcherTableau& t, const AromaticGraph& tree,
                               const std::vector<std::vector<int>>& children, int v) {
    const int s = t.stages();
    std::vector<Rat> w(s, Rat(1));
    for (int u : children[v]) {
        std::vector<Rat> wu = stage_weights(t, tree, children, u);
        for (int i = 0; i < s; ++i) {
            Rat acc = 0;
            for (int j = 0; j < s; ++j) acc += t.a[i][j] * wu[j];
            w[i] *= acc;
        }
    }
    return w;
}

}  // namespace

Rat elementary_weights(const ButcherTableau& t, const AromaticGraph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("elementary weights need a rooted tree");
    t.validate();
    std::vector<std::vector<int>> children(tree.size());
    for (int v = 0; v < tree.size(); ++v)
        if (tree.target(v) != AromaticGraph::kRoot) children[tree.target(v)].push_back(v);
    int root = tree.roots()[0];
    std::vector<Rat> w = stage_weights(t, tree, children, root);
    Rat alpha = 0;
    for (int i = 0; i < t.stages(); ++i) alpha += t.b[i] * w[i];
    return alpha / Rat(symmetry(tree));
}

std::vector<TreeSeries> bseries_of_rk(const ButcherTableau& t, int K) {
    if (K < 1 || K > kMaxJetOrder)
        throw std::out_of_range("jet order must be between 1 and " +
                                std::to_string(kMaxJetOrder));
    std::vector<TreeSeries> out;
    for (int k = 1; k <= K; ++k) {
        TreeSeries s;
        for (const AromaticGraph& tree : enumerate_trees(k, kMaxJetOrder))
            s.add(tree, elementary_weights(t, tree));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace aromatic
