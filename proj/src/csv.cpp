#include "ftstab/csv.hpp"

#include <cstdio>

namespace ftstab {

std::string fmt_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace ftstab
