#pragma once

#include <string>
#include <utility>
#include <vector>

namespace aromatic {

/// Directed graph where every vertex has at most one outgoing edge.
/// Vertices are 0-based; targets[v] is the head of v's outgoing edge,
/// or kRoot when v has none. This representation makes multi-edges
/// impossible and allows self-loops.
class AromaticGraph {
public:
    static constexpr int kRoot = -1;

    AromaticGraph() = default;
    explicit AromaticGraph(std::vector<int> targets);

    int size() const { return static_cast<int>(targets_.size()); }
    int target(int v) const { return targets_[v]; }
    const std::vector<int>& targets() const { return targets_; }

    std::vector<int> roots() const;
    int root_count() const;

    /// In-neighbours of v (vertices whose outgoing edge points at v).
    std::vector<int> parents(int v) const;

    /// Partition of the vertex set into weakly connected components.
    std::vector<std::vector<int>> components() const;

    bool is_tree() const;      // connected, one root, acyclic
    bool is_molecule() const;  // connected, no roots

    /// Induced subgraph on the given vertex subset; every edge must stay
    /// inside the subset (true for unions of components).
    AromaticGraph induced(const std::vector<int>& vertices) const;

    /// Disjoint union; commutative up to isomorphism.
    friend AromaticGraph product(const AromaticGraph& a, const AromaticGraph& b);

    bool operator==(const AromaticGraph& o) const { return targets_ == o.targets_; }

private:
    std::vector<int> targets_;
};

/// Unique string per isomorphism class: the targets array of the graph
/// under its canonical labeling, rendered 1-based with 0 for roots,
/// e.g. "[0,1,1]".
using CanonicalKey = std::string;

struct CanonicalForm {
    AromaticGraph graph;         // relabeled so that targets are canonical
    std::vector<int> labeling;   // labeling[old_vertex] = new_vertex
    CanonicalKey key;
};

/// Deterministic canonical form. Roots receive the smallest labels; for a
/// tree the root is vertex 0. Isomorphic graphs yield identical keys.
CanonicalForm canonicalize(const AromaticGraph& g);

CanonicalKey canonical_key(const AromaticGraph& g);

/// Render the targets array as "[t1,...,tk]" (1-based, 0 = root) without
/// relabeling. canonical_key(g) == encode_targets(canonicalize(g).graph).
std::string encode_targets(const AromaticGraph& g);

/// Parse the encoding produced by encode_targets. Throws
/// std::invalid_argument on malformed input.
AromaticGraph parse_graph(const std::string& text);

inline constexpr int kDefaultMaxOrder = 7;

/// One representative per isomorphism class, sorted by canonical key.
/// Throws std::out_of_range when k < 1 or k > max_order.
std::vector<AromaticGraph> enumerate_trees(int k, int max_order = kDefaultMaxOrder);
std::vector<AromaticGraph> enumerate_molecules(int k, int max_order = kDefaultMaxOrder);
std::vector<AromaticGraph> enumerate_aromatic_trees(int k, int max_order = kDefaultMaxOrder);

/// Size of the automorphism group, computed structurally (component
/// multiplicities, subtree multiplicities, cycle periods).
long symmetry(const AromaticGraph& g);

/// Split a one-root graph into its molecule components and the tree
/// holding the root. Throws std::invalid_argument unless root_count == 1.
std::pair<std::vector<AromaticGraph>, AromaticGraph> decompose(const AromaticGraph& g);

}  // namespace aromatic
