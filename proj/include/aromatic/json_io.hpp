#pragma once

#include <nlohmann/json.hpp>

#include "aromatic/classifier.hpp"
#include "aromatic/integrators.hpp"
#include "aromatic/polyfields.hpp"
#include "aromatic/series.hpp"

namespace aromatic {

using json = nlohmann::json;

// Field: {"dim": n, "components": [[{"coeff": "p/q", "exps": [e1..en]}]]}
json field_to_json(const PolyVectorField& f);
PolyVectorField field_from_json(const json& j);

// Tableau: {"a": [["p/q", ...]], "b": [...], "c": [...]}
json tableau_to_json(const ButcherTableau& t);
ButcherTableau tableau_from_json(const json& j);

// Series: [{"graph": "[0,1,1]", "coeff": "p/q"}]
json series_to_json(const ForestSeries& s);
ForestSeries series_from_json(const json& j);

// Affine map: {"a": [["p/q", ...]], "b": [...]}
json affine_to_json(const AffineMap& a);
AffineMap affine_from_json(const json& j);

json verdict_to_json(const ClassificationVerdict& v);

}  // namespace aromatic
