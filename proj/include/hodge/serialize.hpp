#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hodge/e3.hpp"
#include "hodge/poly.hpp"
#include "hodge/polygon.hpp"
#include "hodge/pr.hpp"
#include "hodge/tmodule.hpp"

namespace hodge {

using Json = nlohmann::ordered_json;

/// {"h":2,"d":[2,1]}
Json to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

/// {"e":3,"h":2,"parts":[3,1]}
Json to_json(const JordanType& j);
JordanType jordan_type_from_json(const Json& j);

/// {"delta":[...],"alpha":[...],"beta":[...]}
Json to_json(const StrataPoint& y);

/// Matrix as an array of rows.
Json to_json(const Matrix& m);
/// {"p":..,"e":..,"T":[[..]],"flag":[[[..]],..]}: one basis matrix per member, one row per basis vector.
Json to_json(const PRDatum& d);
Matrix matrix_from_json(const Json& j, std::size_t cols);
PRDatum pr_datum_from_json(const Json& j);

/// Entry (r, c) becomes the coefficient list [a_0, a_1, ...] of the polynomial.
Json to_json(const PolyMatrix& m);

/// CSV rows h,mu1,mu2,mu3,delta1,...,beta2 with a header line.
std::string to_csv(const std::vector<StrataPoint>& points);

/// Parses "2,1,0" into integers; throws std::invalid_argument on junk.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace hodge
