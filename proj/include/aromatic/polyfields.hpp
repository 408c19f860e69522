#pragma once

#include <cstdint>
#include <vector>

#include "aromatic/graph.hpp"
#include "aromatic/polynomial.hpp"

namespace aromatic {

/// Dependency graph of a vector field: edge (j,i) present iff component i
/// genuinely depends on variable x_j. Unlike AromaticGraph, out-degrees
/// are unrestricted.
struct DepGraph {
    int n = 0;
    std::vector<std::vector<bool>> edge;  // edge[j][i]

    explicit DepGraph(int n_ = 0) : n(n_), edge(n_, std::vector<bool>(n_, false)) {}
    bool has(int j, int i) const { return edge[j][i]; }
    std::vector<std::pair<int, int>> edges() const;
    bool operator==(const DepGraph& o) const { return n == o.n && edge == o.edge; }
};

/// (f |> g)(x) = d/dt g(x + t f(x)) at t = 0, i.e. the Jacobian of g
/// applied to f. Polynomial fields with this product form a pre-Lie
/// algebra.
PolyVectorField connection(const PolyVectorField& f, const PolyVectorField& g);

DepGraph dependency_graph(const PolyVectorField& f);

/// Block field in dimension dim(f)+dim(g): first block is f in the first
/// variables, second block is g in the remaining variables.
PolyVectorField direct_sum(const PolyVectorField& f, const PolyVectorField& g);

/// Decides g(Ax+b) = A f(x) as an exact polynomial identity.
bool intertwines(const AffineMap& a, const PolyVectorField& f, const PolyVectorField& g);

/// Unscaled dual field of a graph under its current vertex numbering
/// (which acts as the labeling): component j is the product of x_i over
/// in-neighbours i of j, an empty product being 1. By construction the
/// dependency graph of the result equals the input graph.
PolyVectorField dual_field(const AromaticGraph& labeled_graph);

/// Deterministic sparse random field; same seed gives bit-identical output
/// on every platform (std::mt19937_64 with raw modular draws, no
/// distribution objects). Coefficients lie in {-3..3}\{0}.
PolyVectorField random_field(int dim, int max_degree, int term_count, std::uint64_t seed);

/// f with its first-block image under the projection to dim m; used by
/// tests exercising g (+) 0 constructions.
PolyVectorField pad_with_zero(const PolyVectorField& f, int total_dim);

}  // namespace aromatic
