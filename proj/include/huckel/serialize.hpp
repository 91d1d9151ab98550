#pragma once

#include <json.hpp>

#include "huckel/matrix.hpp"

namespace huckel {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exponent vectors follow precedence order: x_{v-1}..x_0, y_{v-1}..y_0, z
/// with v = varcount.
Json poly_terms_json(const MultiPoly& p);
/// {"text": ..., "varcount": v, "terms": [{"exp": [...], "coef": "..."}]}
Json poly_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json matrix_json(const PolyMatrix& m);
Json cyc_json(const CycInt& v);
Json gauss_json(const GaussInt& v);

}  // namespace huckel
