#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "csa/poly.hpp"

namespace csa {

/// Ascending coefficient strings, e.g. t^2 + t/2 + 1 <-> {"1", "1/2", "1"}.
std::vector<std::string> to_coeff_strings(const RatPoly& p);
RatPoly from_coeff_strings(const std::vector<std::string>& coeffs);

/// Parses infix text in the variable t: sums, products, integer powers,
/// parentheses and rational constants, e.g. "(t^2+1)^2*(t - 1/2)".
/// Parse errors carry the byte offset and the expected token.
RatPoly parse_poly(std::string_view text);

/// Renders as infix text that parse_poly reads back, e.g. "t^2 - 2*t + 1".
std::string format_poly(const RatPoly& p);

}  // namespace csa
