#pragma once

#include <json.hpp>

#include "koorn/exact_matrix.hpp"
#include "koorn/koornwinder.hpp"

namespace koorn {

// JSON conventions shared by the CLI and the cache: rationals are strings
// "p/q", weights are integer arrays, a polynomial is
//   { "lambda": [...], "params": { "q": "p/q", ... },
//     "coeffs": [ { "mu": [...], "c": "p/q" }, ... ] }
// with coefficients listed in graded-lex ascending order.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DominantWeight& w);
DominantWeight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParamSet& p);
ParamSet params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KoornwinderPoly& P);
KoornwinderPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace koorn
