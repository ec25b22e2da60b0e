#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "ftstab/grid.hpp"

namespace ftstab {

/// Time series recorded by a simulation. All per-sample vectors share one
/// length; the split-state columns (l2_v, l2_w) stay empty for runs that do
/// not decompose the state.
struct Trace {
  std::vector<double> times;
  std::vector<double> l2_u;
  std::vector<double> linf_u;
  std::vector<double> l2_v;
  std::vector<double> l2_w;
  std::vector<double> U;
  std::vector<double> V;
  std::vector<double> W;
  std::vector<double> d1;

  /// Per-step record for replaying the monolithic plant against the split
  /// simulation: new-time-level times, step sizes, the control U = V + W and
  /// the exact right-boundary value v(1) + w(1) the split run imposed.
  std::vector<double> step_times;
  std::vector<double> step_dt;
  std::vector<double> step_U;
  std::vector<double> step_bc_right;

  /// v profile at the start of each segment (closed-loop runs only).
  std::vector<Field> segment_initial_v;

  /// Full state snapshots, keyed by time.
  std::vector<std::pair<double, Field>> snapshots;

  /// Sup-norms of the inputs observed during the run. For target runs the
  /// forcing entry tracks the transformed forcing.
  double sup_forcing = 0.0;
  double sup_left = 0.0;
  double sup_right = 0.0;

  double horizon = 0.0;  ///< end of the simulated window
};

/// CSV with header `t,l2_u,linf_u,U,V,W,d1`, extended by `l2_v,l2_w` when
/// the trace carries split-state columns. Full (17 significant digit)
/// precision throughout.
void write_trace_csv(const Trace& trace, std::ostream& out);

/// Two-column snapshot CSV `x,u`.
void write_snapshot_csv(const Grid& grid, const Field& field,
                        std::ostream& out);

}  // namespace ftstab
