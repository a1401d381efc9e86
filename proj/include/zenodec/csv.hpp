#pragma once

#include <cstdio>
#include <ostream>
#include <string>

namespace zenodec::csv {

// All numeric CSV fields are printed with 17 significant digits so that
// doubles survive a round trip and identical inputs give byte-identical
// output.
inline std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline void write_row(std::ostream& out, const std::string& line) {
  out << line << '\n';
}

}  // namespace zenodec::csv
