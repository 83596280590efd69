#ifndef HHV_UTIL_HPP
#define HHV_UTIL_HPP

#include <cstdio>
#include <cstdlib>
#include <string>

namespace hhv {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string shortest_double(double v) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Fixed 17-significant-digit form (lossless, stable column widths for CSV).
inline std::string double17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace hhv

#endif
