#pragma once

namespace ftstab {

/// First-order modified Bessel function I1, evaluated by its power series.
/// Terms are accumulated until the next one drops below 1e-15 relative to
/// the partial sum (with a 1e-300 absolute floor). Requires z >= 0 finite.
double bessel_i1(double z);

/// First-order Bessel function J1 via the alternating power series, same
/// truncation rule and domain as bessel_i1.
double bessel_j1(double z);

/// I1(z)/z with the removable singularity at z = 0 handled by the series
/// limit 1/2 (used for z < 1e-6).
double i1_over_z(double z);

/// J1(z)/z, same limit handling.
double j1_over_z(double z);

}  // namespace ftstab
