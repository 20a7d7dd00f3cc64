// Byte-stable JSON formats for polynomials, patterns, operators, matrices and
// solution files, plus a small polynomial expression parser for text round-trips.
#pragma once

#include "brauer/qkz.hpp"

#include <json.hpp>

namespace brauer {

using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, VarTablePtr table = nullptr);

Json pattern_to_json(BoundaryType t, const LinkPattern& p);
LinkPattern pattern_from_json(const Json& j, BoundaryType* type_out = nullptr);

Json linfrac_to_json(const LinFrac& f);
Json operator_to_json(const LoopOperator& op);

Json solution_to_json(const QkzSolution& s, const std::vector<std::string>& checks_passed = {});
QkzSolution solution_from_json(const Json& j);

// expression text -> Poly over the given table; accepts + - * ^ ( ), integer and
// rational literals, implicit multiplication by juxtaposition
Poly parse_poly(const std::string& src, const VarTablePtr& table);

// re-express a polynomial over another table containing (at least) its active names
Poly change_table(const Poly& p, const VarTablePtr& dst);

} // namespace brauer
