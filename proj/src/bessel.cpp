#include "ftstab/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace ftstab {

namespace {

// Both series share the recurrence term_{m+1} = sign * term_m * (z^2/4) /
// ((m+1)(m+2)); only the sign differs.
double bessel1_series(double z, double sign) {
  if (!std::isfinite(z) || z < 0.0) {
    throw std::domain_error("bessel: argument must be finite and >= 0");
  }
  if (z == 0.0) {
    return 0.0;
  }
  const double q = sign * z * z / 4.0;
  double term = z / 2.0;
  double sum = term;
  for (int m = 1;; ++m) {
    term *= q / (static_cast<double>(m) * static_cast<double>(m + 1));
    sum += term;
    if (std::abs(term) <= 1e-15 * std::abs(sum) + 1e-300) {
      break;
    }
  }
  return sum;
}

}  // namespace

double bessel_i1(double z) { return bessel1_series(z, +1.0); }

double bessel_j1(double z) { return bessel1_series(z, -1.0); }

double i1_over_z(double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw std::domain_error("bessel: argument must be finite and >= 0");
  }
  return z < 1e-6 ? 0.5 : bessel_i1(z) / z;
}

double j1_over_z(double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw std::domain_error("bessel: argument must be finite and >= 0");
  }
  return z < 1e-6 ? 0.5 : bessel_j1(z) / z;
}

}  // namespace ftstab
