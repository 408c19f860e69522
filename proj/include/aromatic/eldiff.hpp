#pragma once

#include "aromatic/graph.hpp"
#include "aromatic/polyfields.hpp"
#include "aromatic/series.hpp"

namespace aromatic {

enum class Exec { serial, parallel };

/// Elementary differential of a graph applied to a field. The root count
/// of the graph selects the variant: a scalar polynomial for 0 roots, a
/// vector field for 1 root, a symmetric matrix of polynomials for 2 roots.
/// Graphs with more than 2 roots are rejected.
struct EldiffResult {
    int root_count = 0;
    Polynomial scalar;
    PolyVectorField vec;
    std::vector<std::vector<Polynomial>> tensor;  // symmetric, root_count == 2

    bool operator==(const EldiffResult& o) const {
        return root_count == o.root_count && scalar == o.scalar && vec == o.vec &&
               tensor == o.tensor;
    }
};

/// Reference algorithm: the full assignment sum over all n^k maps from
/// vertices to coordinate indices. Trusted oracle, always serial.
EldiffResult eldiff_naive(const AromaticGraph& g, const PolyVectorField& f);

/// Fast path: restricts the assignment sum to graph homomorphisms into the
/// dependency graph of f via backtracking. Identical value to
/// eldiff_naive; Exec::parallel splits the search over the first vertex
/// with a deterministic merge.
EldiffResult eldiff_hom(const AromaticGraph& g, const PolyVectorField& f,
                        Exec exec = Exec::serial);

/// Linear extension over a one-root series.
PolyVectorField eldiff_series(const ForestSeries& s, const PolyVectorField& f,
                              Exec exec = Exec::serial);

}  // namespace aromatic
