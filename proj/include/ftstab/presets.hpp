#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ftstab/analysis.hpp"
#include "ftstab/config.hpp"
#include "ftstab/controller.hpp"

namespace ftstab {

/// A full experiment run plus the standard analysis over it.
struct ExperimentResult {
  ExperimentConfig config;
  Schedule schedule;  // closed-loop kinds only
  Trace trace;        // plant trace (u = v + w, or the open-loop state)
  Trace target_w;     // closed-loop kinds only

  FtsReport fts;
  IssReport iss;
  LinfBoundReport linf_bound;
  LyapunovReport lyapunov;
  std::vector<double> segment_decay_margin;  // max ratio to the decay bound
  double superposition_max_rel = 0.0;
  double open_loop_growth = 0.0;  // ||u(t_end)|| / ||u0||, open loop only
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes trace.csv, target_w.csv, report.csv, report.txt, plot.gp and any
/// requested snapshot CSVs under out_dir (created if missing). Output is
/// byte-stable across repeated runs of the same configuration.
void write_artifacts(const ExperimentResult& result,
                     const std::string& out_dir);

const std::vector<std::string>& preset_names();
ExperimentConfig preset_config(const std::string& name);
ExperimentResult run_preset(const std::string& name,
                            const std::string& out_dir);

/// One sweep point. Failed runs carry the error text in `status` and leave
/// the metrics at zero; the sweep itself keeps going.
struct SweepRow {
  double value = 0.0;
  std::string status = "ok";
  double initial_l2 = 0.0;
  double terminal_l2 = 0.0;
  double fts_ratio = 0.0;
  double iss_window_sup = 0.0;
  double fitted_gain = 0.0;
};

/// Runs the base configuration once per value of the given axis
/// (A, N, dt_base, sigma or n_max). Runs execute concurrently; rows come
/// back in input order.
std::vector<SweepRow> run_sweep(const ExperimentConfig& base,
                                const std::string& axis,
                                const std::vector<double>& values);

void write_sweep_csv(const std::string& axis,
                     const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace ftstab
