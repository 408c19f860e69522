#include "aromatic/series.hpp"

#include <stdexcept>

namespace aromatic {

void ForestSeries::add(const AromaticGraph& g, const Rat& c) {
    if (g.root_count() != 1)
        throw std::invalid_argument("series keys must have exactly one root");
    add_key(canonical_key(g), c);
}

void ForestSeries::add_key(const CanonicalKey& key, const Rat& c) {
    if (c == 0) return;
    if (terms_.find(key) == terms_.end()) {
        AromaticGraph g = parse_graph(key);
        if (g.root_count() != 1 || canonical_key(g) != key)
            throw std::invalid_argument("not a canonical one-root key: " + key);
    }
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat ForestSeries::coeff(const CanonicalKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rat(0) : it->second;
}

ForestSeries ForestSeries::operator+(const ForestSeries& o) const {
    ForestSeries r = *this;
    for (auto& [k, c] : o.terms_) r.add_key(k, c);
    return r;
}

ForestSeries ForestSeries::operator-(const ForestSeries& o) const {
    ForestSeries r = *this;
    for (auto& [k, c] : o.terms_) r.add_key(k, -c);
    return r;
}

ForestSeries ForestSeries::operator*(const Rat& c) const {
    ForestSeries r;
    if (c == 0) return r;
    for (auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool ForestSeries::tree_only() const {
    for (auto& [k, c] : terms_)
        if (!parse_graph(k).is_tree()) return false;
    return true;
}

Rat ForestSeries::mass() const {
    Rat s = 0;
    for (auto& [k, c] : terms_) s += c;
    return s;
}

}  // namespace aromatic
