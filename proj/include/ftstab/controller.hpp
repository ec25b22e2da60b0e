#pragma once

#include <vector>

#include "ftstab/kernels.hpp"
#include "ftstab/pde.hpp"
#include "ftstab/schedule.hpp"
#include "ftstab/trace.hpp"

namespace ftstab {

/// Everything a closed-loop run needs: the segment schedule, one
/// precomputed gain row per segment for the disturbance-free subsystem,
/// and the time-invariant sigma gain row for the disturbed one.
struct ControllerConfig {
  Grid grid;
  Coefficients coefficients;
  Schedule schedule;
  double sigma = 1.0;
  std::vector<GainRow> gains_v;
  GainRow gain_w;
  double dt_base = 1e-4;
  int stride = 50;
  double end_fraction = 0.99;  ///< simulate up to end_fraction * horizon
  bool record_fields = false;  ///< keep the full state at every sample
  std::vector<double> snapshot_times;

  static ControllerConfig make(Grid grid, Coefficients co, Schedule sched,
                               double sigma, double dt_base = 1e-4,
                               int stride = 50);

  /// Step size on segment n: min(dt_base, 0.1 / lambda_n) capped further by
  /// a / (lambda_n + c)^2 and a / (sigma + c)^2. The caps keep the one-step
  /// feedback delay stable; the measured stability boundary sits near
  /// 4 a / (rate + c)^2, so they carry a 4x margin.
  double segment_dt(int segment) const;
};

/// The two halves of the split plant state at a common time.
struct SplitState {
  Field v;  ///< disturbance-free part, carries the initial datum
  Field w;  ///< disturbed part, zero initial datum
  double time = 0.0;

  /// Nodewise reconstruction u = v + w.
  Field reconstruct() const;
};

/// Feedback for the disturbance-free subsystem at the given time (selects
/// the active segment's gain row).
double control_V(const Field& v, const ControllerConfig& cfg, double time);

/// Feedback for the disturbed subsystem; the gain is time-invariant.
double control_W(const Field& w, const ControllerConfig& cfg);

/// Runs the split closed loop: v carries the initial datum under V(t) with
/// homogeneous left boundary, w carries the disturbances under W(t) with
/// zero initial datum, and the plant state is reconstructed as u = v + w.
/// Feedback is computed from the state at the start of each step and
/// imposed as the new-time-level boundary value.
Trace closed_loop_simulate(const ControllerConfig& cfg,
                           const DisturbanceSpec& dist, const Field& u0);

/// Target dynamics of one segment: the start-of-segment v profile is pushed
/// through the direct transform with that segment's kernel and evolved with
/// damping lambda_n and homogeneous boundary values.
Trace simulate_target_v(const ControllerConfig& cfg,
                        const Field& v_at_segment_start, int segment);

struct TargetWOptions {
  bool record_fields = true;  ///< keep state snapshots at every sample
};

/// Target dynamics of the disturbed subsystem: damping sigma, transformed
/// forcing, boundary values equal to the raw disturbances, zero initial
/// datum. Snapshots of the state are recorded for the Lyapunov checks.
Trace simulate_target_w(const ControllerConfig& cfg,
                        const DisturbanceSpec& dist,
                        const TargetWOptions& opts = {});

/// Re-runs the monolithic plant with the boundary control recorded by a
/// closed-loop trace, using the identical step sequence. By linearity the
/// result should match v + w up to round-off.
Trace replay_monolithic(const ControllerConfig& cfg,
                        const DisturbanceSpec& dist, const Field& u0,
                        const Trace& closed_loop);

}  // namespace ftstab
