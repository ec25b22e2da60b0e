#pragma once

#include <functional>
#include <span>

#include "ftstab/grid.hpp"
#include "ftstab/trace.hpp"

namespace ftstab {

/// Constant coefficients of u_t = (a u_x)_x + c u. The diffusion bound cap
/// declares the admissible range [1/cap, cap] for a.
struct Coefficients {
  double a = 1.0;
  double c = 0.0;
  double diffusion_cap = 100.0;
  bool spatially_varying = false;  // reserved; only constants are supported

  void validate() const;
};

/// In-domain and boundary disturbances with running sup-norm trackers.
/// Every evaluation updates the corresponding tracker, so after a run the
/// trackers hold the sup over everything the simulation actually sampled.
class DisturbanceSpec {
 public:
  using SpaceTimeFn = std::function<double(double, double)>;
  using TimeFn = std::function<double(double)>;

  DisturbanceSpec();  // all-zero disturbances
  DisturbanceSpec(SpaceTimeFn in_domain, TimeFn left, TimeFn right);

  static DisturbanceSpec zero() { return DisturbanceSpec(); }
  /// d1(t) = amplitude * sin(omega t), no in-domain or left disturbance.
  static DisturbanceSpec boundary_sine(double amplitude, double omega);

  double in_domain(double x, double t) const;
  double left(double t) const;
  double right(double t) const;

  double sup_in_domain() const { return sup_f_; }
  double sup_left() const { return sup_d0_; }
  double sup_right() const { return sup_d1_; }

 private:
  SpaceTimeFn f_;
  TimeFn d0_;
  TimeFn d1_;
  mutable double sup_f_ = 0.0;
  mutable double sup_d0_ = 0.0;
  mutable double sup_d1_ = 0.0;
};

/// One backward-Euler step of u_t = (a u_x)_x + c u + forcing with the
/// boundary values imposed strongly at the new time level. The forcing is
/// expected to be sampled at the new time level as well.
Field step(const Field& state, const Grid& grid, const Coefficients& co,
           double dt, double bc_left, double bc_right,
           std::span<const double> forcing);

/// sqrt of the trapezoid quadrature of f^2.
double l2_norm(std::span<const double> values, const Grid& grid);

/// max |f|.
double linf_norm(std::span<const double> values);

struct OpenLoopOptions {
  double t_end = 0.5;
  double dt = 1e-4;
  double left_offset = 0.0;   ///< constant added to d0(t)
  double right_offset = 0.0;  ///< constant added to d1(t)
  int stride = 50;            ///< sampling stride in steps
  std::vector<double> snapshot_times;
};

/// Uncontrolled run: boundary values are the disturbances alone (plus the
/// configured constant offsets).
Trace simulate_open_loop(const Grid& grid, const Coefficients& co,
                         const DisturbanceSpec& dist, const Field& u0,
                         const OpenLoopOptions& opts);

}  // namespace ftstab
