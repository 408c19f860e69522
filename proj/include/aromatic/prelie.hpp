#pragma once

#include "aromatic/graph.hpp"
#include "aromatic/series.hpp"

namespace aromatic {

/// Free pre-Lie product on rooted trees: attach the root of t1 to each
/// vertex of t2 in turn and sum, with coefficients counting coinciding
/// isomorphism classes. The coefficient mass of the result is |t2|.
TreeSeries graft(const AromaticGraph& t1, const AromaticGraph& t2);

/// Bilinear extension of graft to tree series.
TreeSeries graft_series(const TreeSeries& s1, const TreeSeries& s2);

}  // namespace aromatic
