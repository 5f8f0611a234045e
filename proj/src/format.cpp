#include "frim/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace frim {

double canonical_number(double value) {
  if (!std::isfinite(value)) return value;
  double rounded = std::round(value * 1e9) / 1e9;
  return rounded == 0.0 ? 0.0 : rounded;  // no "-0"
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), canonical_number(value));
  return std::string(buf.data(), end);
}

}  // namespace frim
