#include "ftstab/grid.hpp"

#include <stdexcept>

namespace ftstab {

Grid::Grid(int n_points) {
  if (n_points < 3) {
    throw std::invalid_argument("Grid: need at least 3 points, got " +
                                std::to_string(n_points));
  }
  const int n = n_points;
  h_ = 1.0 / static_cast<double>(n - 1);
  x_.resize(n);
  w_.resize(n);
  for (int i = 0; i < n; ++i) {
    x_[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    w_[i] = h_;
  }
  x_.front() = 0.0;
  x_.back() = 1.0;
  w_.front() = 0.5 * h_;
  w_.back() = 0.5 * h_;
}

}  // namespace ftstab
