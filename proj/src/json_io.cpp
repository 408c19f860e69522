#include "aromatic/json_io.hpp"

#include <stdexcept>

namespace aromatic {

namespace {

Rat rat_field(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("rationals must be \"p/q\" strings or integers");
}

std::vector<Rat> rat_vector(const json& j) {
    std::vector<Rat> v;
    for (auto& e : j) v.push_back(rat_field(e));
    return v;
}

std::vector<std::vector<Rat>> rat_matrix(const json& j) {
    std::vector<std::vector<Rat>> m;
    for (auto& row : j) m.push_back(rat_vector(row));
    return m;
}

json rat_vector_json(const std::vector<Rat>& v) {
    json j = json::array();
    for (auto& x : v) j.push_back(rat_to_string(x));
    return j;
}

}  // namespace

json field_to_json(const PolyVectorField& f) {
    json comps = json::array();
    for (int i = 0; i < f.dim(); ++i) {
        json terms = json::array();
        for (auto& [e, c] : f[i].terms())
            terms.push_back({{"coeff", rat_to_string(c)}, {"exps", e}});
        comps.push_back(std::move(terms));
    }
    return {{"dim", f.dim()}, {"components", std::move(comps)}};
}

PolyVectorField field_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("components"))
        throw std::invalid_argument("field JSON needs \"dim\" and \"components\"");
    const int n = j.at("dim").get<int>();
    if (n < 1) throw std::invalid_argument("field dimension must be positive");
    const json& comps = j.at("components");
    if (static_cast<int>(comps.size()) != n)
        throw std::invalid_argument("component count must equal dim");
    PolyVectorField f(n);
    for (int i = 0; i < n; ++i)
        for (auto& term : comps[i]) {
            auto e = term.at("exps").get<std::vector<int>>();
            f[i].add_term(e, rat_field(term.at("coeff")));
        }
    return f;
}

json tableau_to_json(const ButcherTableau& t) {
    json a = json::array();
    for (auto& row : t.a) a.push_back(rat_vector_json(row));
    return {{"a", std::move(a)}, {"b", rat_vector_json(t.b)}, {"c", rat_vector_json(t.c)}};
}

ButcherTableau tableau_from_json(const json& j) {
    ButcherTableau t;
    t.a = rat_matrix(j.at("a"));
    t.b = rat_vector(j.at("b"));
    t.c = rat_vector(j.at("c"));
    t.validate();
    return t;
}

json series_to_json(const ForestSeries& s) {
    json out = json::array();
    for (auto& [key, c] : s.terms())
        out.push_back({{"graph", key}, {"coeff", rat_to_string(c)}});
    return out;
}

ForestSeries series_from_json(const json& j) {
    ForestSeries s;
    for (auto& term : j)
        s.add(parse_graph(term.at("graph").get<std::string>()),
              rat_field(term.at("coeff")));
    return s;
}

json affine_to_json(const AffineMap& a) {
    json m = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int jx = 0; jx < a.cols(); ++jx) row.push_back(rat_to_string(a.a(i, jx)));
        m.push_back(std::move(row));
    }
    json b = json::array();
    for (int i = 0; i < a.rows(); ++i) b.push_back(rat_to_string(a.b(i)));
    return {{"a", std::move(m)}, {"b", std::move(b)}};
}

AffineMap affine_from_json(const json& j) {
    return AffineMap(rat_matrix(j.at("a")), rat_vector(j.at("b")));
}

json verdict_to_json(const ClassificationVerdict& v) {
    json orders = json::array();
    for (auto& o : v.orders) {
        json jo = {{"order", o.order}, {"status", to_string(o.status)}};
        if (o.status != OrderStatus::not_equivariant)
            jo["series"] = series_to_json(o.series);
        if (!o.offending.empty()) jo["offending"] = o.offending;
        if (!o.witness.empty()) jo["witness"] = o.witness;
        orders.push_back(std::move(jo));
    }
    return {{"overall", to_string(v.overall())}, {"orders", std::move(orders)}};
}

}  // namespace aromatic
