#pragma once

#include <vector>

namespace ftstab {

/// Uniform mesh on [0,1] with trapezoid quadrature weights.
///
/// The weights sum to one (up to round-off) and back every L2-type
/// quadrature in the library. Volterra integrals use the higher-order
/// weights from quadrature.hpp instead.
class Grid {
 public:
  explicit Grid(int n_points);

  int size() const { return static_cast<int>(x_.size()); }
  double spacing() const { return h_; }
  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& trapezoid_weights() const { return w_; }

  bool operator==(const Grid& other) const { return size() == other.size(); }

 private:
  double h_;
  std::vector<double> x_;
  std::vector<double> w_;
};

/// A sampled profile at a fixed time.
struct Field {
  std::vector<double> values;
  double time = 0.0;
};

}  // namespace ftstab
