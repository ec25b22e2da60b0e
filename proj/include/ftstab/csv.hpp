#pragma once

#include <string>

namespace ftstab {

/// Shortest round-trippable decimal form (17 significant digits). All CSV
/// output goes through this so repeated runs are byte-identical.
std::string fmt_full(double v);

}  // namespace ftstab
