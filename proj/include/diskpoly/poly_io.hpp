#pragma once

#include "diskpoly/bipoly.hpp"
#include "diskpoly/unipoly.hpp"

#include <json.hpp>

namespace diskpoly {

// Polynomial JSON schema:
//   {"mode": "rational"|"float",
//    "terms": [{"a": int, "b": int, "re": "p/q"|number, "im": "p/q"|number}, ...]}
// Rational scalars are "p/q" strings so round-trips are bit-exact; the "im"
// field is omitted when zero. Terms are emitted in graded (a+b, a) order.
// A univariate polynomial uses the same schema with b = 0 meaning t^a.

nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const UniPoly& p);

BiPoly bipoly_from_json(const nlohmann::json& j);
UniPoly unipoly_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j, Mode mode);

}  // namespace diskpoly
