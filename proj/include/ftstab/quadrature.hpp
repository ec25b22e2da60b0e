#pragma once

#include <vector>

namespace ftstab {

/// Weights for integrating uniform-grid samples over [x_0, x_i].
///
/// Composite Simpson for even interval counts, Simpson plus a 3/8 tail for
/// odd ones, plain trapezoid for a single interval. Fourth-order accurate
/// for i >= 2, which the transform and gain-row accuracy targets need;
/// plain trapezoid tops out at second order and misses them.
std::vector<double> volterra_weights(int intervals, double h);

}  // namespace ftstab
