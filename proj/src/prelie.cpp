#include "aromatic/prelie.hpp"

#include <stdexcept>

namespace aromatic {

TreeSeries graft(const AromaticGraph& t1, const AromaticGraph& t2) {
    if (!t1.is_tree() || !t2.is_tree())
        throw std::invalid_argument("graft expects rooted trees");
    const int r1 = t1.roots()[0];
    TreeSeries out;
    for (int v = 0; v < t2.size(); ++v) {
        // t2 vertices first so t2's root stays the root of the result
        AromaticGraph g = product(t2, t1);
        std::vector<int> t = g.targets();
        t[t2.size() + r1] = v;
        out.add(AromaticGraph(std::move(t)), 1);
    }
    return out;
}

TreeSeries graft_series(const TreeSeries& s1, const TreeSeries& s2) {
    TreeSeries out;
    for (auto& [k1, c1] : s1.terms()) {
        AromaticGraph g1 = parse_graph(k1);
        for (auto& [k2, c2] : s2.terms()) {
            AromaticGraph g2 = parse_graph(k2);
            TreeSeries piece = graft(g1, g2);
            out = out + piece * (c1 * c2);
        }
    }
    return out;
}

}  // namespace aromatic
