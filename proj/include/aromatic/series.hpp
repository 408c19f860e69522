#pragma once

#include <map>

#include "aromatic/graph.hpp"
#include "aromatic/rational.hpp"

namespace aromatic {

/// Finite linear combination of canonical one-root aromatic graphs with
/// exact rational coefficients. Zero coefficients are pruned eagerly, so
/// equality is structural.
class ForestSeries {
public:
    ForestSeries() = default;

    /// Canonicalizes g and accumulates; g must have exactly one root.
    void add(const AromaticGraph& g, const Rat& c);
    /// key must already be canonical ("[0,...]" form).
    void add_key(const CanonicalKey& key, const Rat& c);

    const std::map<CanonicalKey, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const CanonicalKey& key) const;

    ForestSeries operator+(const ForestSeries& o) const;
    ForestSeries operator-(const ForestSeries& o) const;
    ForestSeries operator*(const Rat& c) const;
    bool operator==(const ForestSeries& o) const { return terms_ == o.terms_; }

    /// True when every key is a rooted tree (no molecule factors).
    bool tree_only() const;

    /// Sum of all coefficients.
    Rat mass() const;

private:
    std::map<CanonicalKey, Rat> terms_;
};

/// Series whose keys are rooted trees; same representation, the tree
/// constraint is enforced at the operations that require it.
using TreeSeries = ForestSeries;

}  // namespace aromatic
