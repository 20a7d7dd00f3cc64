// Known small-size solution tables used by the reproduction harness. The
// expressions are stored in (z_i, A, s) form; `solution` substitutes the shift
// for the requested boundary type and returns components in canonical pattern
// order over the standard table.
#pragma once

#include "brauer/qkz.hpp"

#include <map>

namespace brauer::reference {

bool available(BoundaryType type, int L);
const std::map<std::string, std::string>& strings(BoundaryType type, int L);
std::vector<Poly> solution(BoundaryType type, int L);

} // namespace brauer::reference
