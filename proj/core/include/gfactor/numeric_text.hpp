#pragma once

#include <string>
#include <string_view>

namespace gfactor {

/// Shortest decimal form that parses back to exactly the same bits.
std::string format_double(double value);

/// Strict full-token parse of a decimal number; throws ParseError otherwise.
double parse_double(std::string_view text);

}  // namespace gfactor
