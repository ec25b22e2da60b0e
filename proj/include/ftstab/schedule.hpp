#pragma once

#include <vector>

namespace ftstab {

enum class ScheduleCase {
  zeta,        ///< gaps 1/(n+1)^p, horizon fixed by the zeta value
  prescribed,  ///< t_n = T0 - T0/(n+1), horizon chosen freely
};

/// Segment times and gains for the switched disturbance-free controller.
///
/// `t` holds n_max + 2 entries: the first n_max + 1 follow the case formula
/// and the last one is the horizon itself (the final segment is extended so
/// that a finite schedule still covers all of [0, T0)). `lambda[n]` is the
/// gain active on [t[n], t[n+1]), and `s[n]` the running sum of
/// lambda_j * (t_{j+1} - t_j).
struct Schedule {
  ScheduleCase kind = ScheduleCase::zeta;
  double p = 0.0;  ///< exponent, zeta case only
  double horizon = 0.0;
  double lambda0 = 0.0;
  std::vector<double> t;
  std::vector<double> lambda;
  std::vector<double> s;
  int n_max = 0;
  bool final_segment_extended = true;

  /// Index n with t[n] <= time < t[n+1]; the new gain activates exactly at
  /// its segment start. Throws std::out_of_range outside [0, horizon).
  int segment_of(double time) const;
};

/// Riemann zeta for p > 1: direct summation plus a midpoint tail estimate,
/// with the truncation point chosen so the tail error stays below tol.
double zeta(double p, double tol);

/// Gaps 1/(n+1)^p, gains n^{2(p+1)} + lambda0, horizon zeta(p).
Schedule schedule_case1(double p, double lambda0, int n_max);

/// t_n = T0 - T0/(n+1), gains n^6 + lambda0.
Schedule schedule_case2(double T0, double lambda0, int n_max);

/// Diagnostics for the gain-growth conditions behind the fixed-time decay:
/// ratio[n] = (t_{n+1}-t_n) lambda_n / sqrt(lambda_{n+1}) and
/// growth[n] = s_n / (n + sqrt(lambda_{n+1})), both over n = 0..n_max-1.
struct RapidConvergenceReport {
  double gamma0 = 1.0;
  std::vector<double> ratio;
  std::vector<double> growth;
  int first_satisfied = -1;  ///< first n with ratio[n] >= gamma0, -1 if none
  bool growth_increasing = false;
};

RapidConvergenceReport check_rapid_convergence(const Schedule& sched,
                                               double gamma0);

}  // namespace ftstab
