#include "rootpipe/format.h"

#include <charconv>
#include <cmath>

namespace rootpipe {

std::string FormatDouble(double value, int precision) {
  char buf[64];
  const auto result =
      precision < 0
          ? std::to_chars(buf, buf + sizeof buf, value)
          : std::to_chars(buf, buf + sizeof buf, value,
                          std::chars_format::fixed, precision);
  return std::string(buf, result.ptr);
}

std::string FormatPercent(double numerator, double denominator,
                          int decimals) {
  const double percent = denominator == 0 ? 0.0 : 100.0 * numerator / denominator;
  return FormatDouble(percent, decimals) + "%";
}

}  // namespace rootpipe
