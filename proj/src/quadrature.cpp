#include "ftstab/quadrature.hpp"

#include <stdexcept>

namespace ftstab {

std::vector<double> volterra_weights(int intervals, double h) {
  if (intervals < 0 || h <= 0.0) {
    throw std::invalid_argument("volterra_weights: bad interval count or spacing");
  }
  const int i = intervals;
  if (i == 0) {
    return {0.0};
  }
  if (i == 1) {
    return {h / 2.0, h / 2.0};
  }
  std::vector<double> w(i + 1, 0.0);
  if (i % 2 == 0) {
    w[0] = w[i] = h / 3.0;
    for (int j = 1; j < i; j += 2) w[j] = 4.0 * h / 3.0;
    for (int j = 2; j < i; j += 2) w[j] = 2.0 * h / 3.0;
    return w;
  }
  if (i == 3) {
    w = {3.0 * h / 8.0, 9.0 * h / 8.0, 9.0 * h / 8.0, 3.0 * h / 8.0};
    return w;
  }
  // Simpson over the first i-3 intervals, 3/8 rule over the last three.
  const int m = i - 3;
  w[0] = h / 3.0;
  for (int j = 1; j < m; j += 2) w[j] = 4.0 * h / 3.0;
  for (int j = 2; j < m; j += 2) w[j] = 2.0 * h / 3.0;
  w[m] = h / 3.0 + 3.0 * h / 8.0;
  w[m + 1] = 9.0 * h / 8.0;
  w[m + 2] = 9.0 * h / 8.0;
  w[i] = 3.0 * h / 8.0;
  return w;
}

}  // namespace ftstab
