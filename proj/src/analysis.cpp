#include "ftstab/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "ftstab/pde.hpp"

namespace ftstab {

double stampacchia_g(double s) {
  return s > 0.0 ? std::log1p(s * s) : 0.0;
}

double stampacchia_G(double s) {
  if (s <= 0.0) return 0.0;
  return s * std::log1p(s * s) - 2.0 * s + 2.0 * std::atan(s);
}

double lyapunov_functional(std::span<const double> field, double omega,
                           const Grid& grid) {
  if (!(omega >= 0.0)) {
    throw std::invalid_argument("lyapunov_functional: omega must be >= 0");
  }
  if (static_cast<int>(field.size()) != grid.size()) {
    throw std::invalid_argument("lyapunov_functional: field does not match grid");
  }
  double acc = 0.0;
  const auto& w = grid.trapezoid_weights();
  for (int i = 0; i < grid.size(); ++i) {
    acc += w[i] * stampacchia_G(field[i] - omega);
  }
  return acc;
}

LinfBoundReport check_linf_bound(const Trace& target_w, double sup_forcing,
                                 double sup_left, double sup_right,
                                 double sigma, double tol_rel) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("check_linf_bound: sigma must be > 0");
  }
  LinfBoundReport rep;
  rep.bound = sup_forcing / sigma + sup_left + sup_right;
  rep.tolerance = tol_rel * rep.bound;
  rep.worst_margin = rep.bound + rep.tolerance;
  rep.pass = true;
  for (std::size_t i = 0; i < target_w.times.size(); ++i) {
    const double margin = rep.bound + rep.tolerance - target_w.linf_u[i];
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_time = target_w.times[i];
    }
  }
  rep.pass = rep.worst_margin >= 0.0;
  return rep;
}

LyapunovReport check_lyapunov_monotone(const Trace& target_w,
                                       const Grid& grid, double omega,
                                       double tolerance) {
  if (target_w.snapshots.empty()) {
    throw std::invalid_argument(
        "check_lyapunov_monotone: trace carries no state snapshots");
  }
  LyapunovReport rep;
  rep.omega = omega;
  rep.tolerance = tolerance;
  for (const auto& [t, field] : target_w.snapshots) {
    rep.max_value =
        std::max(rep.max_value, lyapunov_functional(field.values, omega, grid));
  }
  rep.pass = rep.max_value <= tolerance;
  return rep;
}

FtsReport fts_metric(const Trace& trace, double epsilon) {
  if (trace.times.empty()) {
    throw std::invalid_argument("fts_metric: empty trace");
  }
  if (!(epsilon > 0.0) || trace.horizon <= 0.0) {
    throw std::invalid_argument("fts_metric: need epsilon > 0 and a horizon");
  }
  const double t_eval = trace.horizon - epsilon;
  if (trace.times.back() < t_eval - 1e-9) {
    throw std::invalid_argument("fts_metric: trace does not reach horizon - epsilon");
  }
  // Last sample at or before the evaluation time.
  std::size_t idx = 0;
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    if (trace.times[i] <= t_eval + 1e-9) idx = i;
  }
  FtsReport rep;
  rep.epsilon = epsilon;
  rep.initial_norm = trace.l2_u.front();
  rep.terminal_norm = trace.l2_u[idx];
  rep.decay_ratio =
      rep.initial_norm > 0.0 ? rep.terminal_norm / rep.initial_norm : 0.0;
  return rep;
}

IssReport iss_metric(const Trace& trace, double window_begin,
                     double window_end, double sup_forcing, double sup_left,
                     double sup_right) {
  IssReport rep;
  rep.window_begin = window_begin;
  rep.window_end = window_end;
  rep.sup_forcing = sup_forcing;
  rep.sup_left = sup_left;
  rep.sup_right = sup_right;
  bool any = false;
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    if (trace.times[i] >= window_begin && trace.times[i] <= window_end) {
      rep.sup_norm_window = std::max(rep.sup_norm_window, trace.l2_u[i]);
      any = true;
    }
  }
  if (!any) {
    throw std::invalid_argument("iss_metric: window contains no samples");
  }
  const double dist = sup_forcing + sup_left + sup_right;
  rep.fitted_gain = dist > 0.0 ? rep.sup_norm_window / dist : 0.0;
  return rep;
}

double max_relative_field_gap(const Trace& a, const Trace& b,
                              const Grid& grid) {
  if (a.snapshots.empty() || a.snapshots.size() != b.snapshots.size()) {
    throw std::invalid_argument(
        "max_relative_field_gap: traces need matching snapshot sets");
  }
  double worst = 0.0;
  std::vector<double> diff(grid.size());
  for (std::size_t s = 0; s < a.snapshots.size(); ++s) {
    if (std::abs(a.snapshots[s].first - b.snapshots[s].first) > 1e-9) {
      throw std::invalid_argument(
          "max_relative_field_gap: snapshot times do not line up");
    }
    const auto& fa = a.snapshots[s].second.values;
    const auto& fb = b.snapshots[s].second.values;
    for (int i = 0; i < grid.size(); ++i) diff[i] = fa[i] - fb[i];
    const double ref = l2_norm(fa, grid);
    if (ref > 0.0) {
      worst = std::max(worst, l2_norm(diff, grid) / ref);
    }
  }
  return worst;
}

}  // namespace ftstab
