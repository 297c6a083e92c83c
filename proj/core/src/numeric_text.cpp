#include "gfactor/numeric_text.hpp"

#include <array>
#include <charconv>
#include <system_error>

#include "gfactor/errors.hpp"

namespace gfactor {

std::string format_double(double value) {
  std::array<char, 40> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view text) {
  double value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ParseError("invalid number '" + std::string(text) + "'");
  return value;
}

}  // namespace gfactor
