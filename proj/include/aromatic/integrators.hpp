#pragma once

#include <string>
#include <vector>

#include "aromatic/graph.hpp"
#include "aromatic/polyfields.hpp"
#include "aromatic/rational.hpp"
#include "aromatic/series.hpp"

namespace aromatic {

inline constexpr int kMaxJetOrder = 8;

struct ButcherTableau {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    std::vector<Rat> c;

    int stages() const { return static_cast<int>(b.size()); }
    bool is_explicit() const;  // strictly lower triangular a

    /// Shape consistency always enforced; when strict, c_i must equal the
    /// i-th row sum of a.
    void validate(bool strict_c = false) const;

    static ButcherTableau explicit_euler();
    static ButcherTableau implicit_midpoint();
    static ButcherTableau trapezoidal();  // 2-stage Lobatto IIIA
    static ButcherTableau classical_rk4();
};

enum class MethodKind {
    explicit_rk,
    implicit_rk,
    avf,
    exact_flow,
    divergence_euler,
    hadamard_euler,
};

struct IntegratorSpec {
    MethodKind kind;
    ButcherTableau tableau;  // RK kinds only

    static IntegratorSpec rk(ButcherTableau t);
    /// Built-in names: euler, implicit-midpoint, trapezoidal, rk4, avf,
    /// exact-flow, divergence-euler, hadamard-euler. Throws on unknown
    /// names.
    static IntegratorSpec by_name(const std::string& name);
    bool has_tableau() const {
        return kind == MethodKind::explicit_rk || kind == MethodKind::implicit_rk;
    }
};

/// Exact coefficients of h^1..h^K in Phi(hf)(x) - x. terms[k-1] is the
/// h^k coefficient and is homogeneous of degree k in the coefficients of f.
struct JetExpansion {
    int dim = 0;
    std::vector<PolyVectorField> terms;

    const PolyVectorField& term(int k) const { return terms.at(k - 1); }
    int order() const { return static_cast<int>(terms.size()); }
};

/// Implicit stages are resolved by K rounds of formal Picard iteration;
/// each round gains one h-order, so K rounds fix orders 1..K.
JetExpansion expand(const IntegratorSpec& method, const PolyVectorField& f, int K);

/// Taylor coefficients of the true solution of y' = f(y).
JetExpansion exact_flow_expansion(const PolyVectorField& f, int K);

/// Coefficient alpha(tau) such that the order-|tau| jet term of the RK
/// method is sum over trees of alpha(tau) * eldiff(tau)[f]. Uses the stage
/// weight recursion with a 1/sigma(tau) normalization; the convention is
/// locked by tests against the jet oracle.
Rat elementary_weights(const ButcherTableau& t, const AromaticGraph& tree);

/// One TreeSeries per order 1..K; order k uses only k-vertex trees.
std::vector<TreeSeries> bseries_of_rk(const ButcherTableau& t, int K);

}  // namespace aromatic
