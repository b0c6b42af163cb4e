#pragma once

#include "k3audit/cyclo.hpp"

#include <string>

namespace k3 {

// Parses the textual scalar syntax shared by all catalogue files:
// integers, fractions p/q, z<n>^<k> for zeta_n^k, combined with + - * and
// parentheses.  Result is in canonical form.
Cyclo parse_scalar(const std::string& text);

} // namespace k3
