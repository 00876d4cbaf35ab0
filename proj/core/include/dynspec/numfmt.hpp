#pragma once

#include <cstdio>
#include <string>

namespace dynspec {

/// Formats a double with 17 significant digits ("%.17g"), enough to
/// round-trip any IEEE-754 binary64 value. All CSV output goes through this
/// so repeated runs are byte-identical.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace dynspec
