#ifndef ROOTPIPE_FORMAT_H_
#define ROOTPIPE_FORMAT_H_

#include <string>

namespace rootpipe {

// Locale-independent number formatting (always '.' as decimal separator).
// precision < 0 gives the shortest representation that round-trips.
std::string FormatDouble(double value, int precision = -1);

// 100 * numerator / denominator with `decimals` places, rounded to nearest,
// followed by '%'.
std::string FormatPercent(double numerator, double denominator,
                          int decimals = 1);

}  // namespace rootpipe

#endif  // ROOTPIPE_FORMAT_H_
