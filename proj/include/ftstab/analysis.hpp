#pragma once

#include <span>

#include "ftstab/grid.hpp"
#include "ftstab/trace.hpp"

namespace ftstab {

/// Truncation function g(s) = ln(1 + s^2) for s > 0, zero otherwise.
double stampacchia_g(double s);

/// G(s) = integral of g from 0 to s; closed form
/// s ln(1+s^2) - 2s + 2 atan(s) on s > 0, zero on s <= 0.
double stampacchia_G(double s);

/// Trapezoid quadrature of G(field - omega). Vanishes whenever the field
/// stays below omega, which is exactly what the boundedness argument needs.
double lyapunov_functional(std::span<const double> field, double omega,
                           const Grid& grid);

struct LinfBoundReport {
  bool pass = false;
  double bound = 0.0;         ///< sup_forcing/sigma + sup_left + sup_right
  double tolerance = 0.0;     ///< absolute slack, tol_rel * bound
  double worst_margin = 0.0;  ///< min over samples of bound + tol - |state|_inf
  double worst_time = 0.0;
};

/// Checks the sup-norm of a target-w trace against the disturbance-driven
/// bound at every sample. tol_rel covers discretization error.
LinfBoundReport check_linf_bound(const Trace& target_w, double sup_forcing,
                                 double sup_left, double sup_right,
                                 double sigma, double tol_rel = 0.05);

struct LyapunovReport {
  bool pass = false;
  double omega = 0.0;
  double max_value = 0.0;  ///< max over samples of the functional
  double tolerance = 0.0;
};

/// The truncated energy functional starts at zero and cannot grow; this
/// evaluates it on every recorded snapshot of a target-w run.
LyapunovReport check_lyapunov_monotone(const Trace& target_w,
                                       const Grid& grid, double omega,
                                       double tolerance = 1e-6);

struct FtsReport {
  double initial_norm = 0.0;
  double terminal_norm = 0.0;  ///< L2 norm at horizon - epsilon
  double decay_ratio = 0.0;    ///< terminal / initial (0 when initial is 0)
  double epsilon = 0.0;
};

/// Fixed-time decay measured at horizon - epsilon; the trace must reach
/// that time.
FtsReport fts_metric(const Trace& trace, double epsilon);

struct IssReport {
  double sup_norm_window = 0.0;
  double sup_forcing = 0.0;
  double sup_left = 0.0;
  double sup_right = 0.0;
  double fitted_gain = 0.0;  ///< response sup / disturbance sup (0 when undisturbed)
  double window_begin = 0.0;
  double window_end = 0.0;
};

/// Sup of the response over a late window, ratioed against the summed
/// disturbance sups. The window must contain at least one sample.
IssReport iss_metric(const Trace& trace, double window_begin,
                     double window_end, double sup_forcing, double sup_left,
                     double sup_right);

/// Max over time-matched snapshots of ||a - b||_2 / ||a||_2. Used to compare
/// the reconstructed split state against the monolithic replay.
double max_relative_field_gap(const Trace& a, const Trace& b,
                              const Grid& grid);

}  // namespace ftstab
