#include "ftstab/presets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ftstab/csv.hpp"

namespace ftstab {

namespace {

Field benchmark_initial(const Grid& grid, double scale) {
  Field u0;
  u0.values.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    u0.values[i] = scale * (-4.0 * std::sin(15.0 * (grid.nodes()[i] - 0.5)));
  }
  return u0;
}

DisturbanceSpec benchmark_disturbance(const ExperimentConfig& cfg) {
  return DisturbanceSpec::boundary_sine(cfg.amplitude, 30.0);
}

ControllerConfig build_controller(const ExperimentConfig& cfg,
                                  const Grid& grid) {
  Coefficients co;
  co.a = cfg.a;
  co.c = cfg.c;
  Schedule sched = cfg.kind == ExperimentKind::zeta_horizon
                       ? schedule_case1(cfg.p, cfg.lambda0, cfg.n_max)
                       : schedule_case2(cfg.horizon, cfg.lambda0, cfg.n_max);
  ControllerConfig ctrl = ControllerConfig::make(grid, co, std::move(sched),
                                                 cfg.sigma, cfg.dt_base,
                                                 cfg.stride);
  ctrl.snapshot_times = cfg.snapshot_times;
  ctrl.record_fields = true;
  return ctrl;
}

std::vector<double> segment_decay_margins(const ControllerConfig& ctrl,
                                          const Trace& trace) {
  std::vector<double> margins;
  for (int n = 0; n < static_cast<int>(trace.segment_initial_v.size()); ++n) {
    const Trace tv = simulate_target_v(ctrl, trace.segment_initial_v[n], n);
    const double lambda_n = ctrl.schedule.lambda[n];
    const double t_begin = tv.times.front();
    const double init = tv.l2_u.front();
    double worst = 0.0;
    for (std::size_t i = 1; i < tv.times.size(); ++i) {
      if (tv.l2_u[i] == 0.0) continue;
      const double bound = std::exp(-lambda_n * (tv.times[i] - t_begin)) * init;
      worst = bound > 0.0 ? std::max(worst, tv.l2_u[i] / bound)
                          : std::numeric_limits<double>::infinity();
    }
    margins.push_back(worst);
  }
  return margins;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.config = cfg;
  const Grid grid(cfg.grid_n);
  const Field u0 = benchmark_initial(grid, cfg.init_scale);

  if (cfg.kind == ExperimentKind::open_loop) {
    Coefficients co;
    co.a = cfg.a;
    co.c = cfg.c;
    const DisturbanceSpec dist = benchmark_disturbance(cfg);
    OpenLoopOptions opts;
    opts.t_end = cfg.t_end;
    opts.dt = cfg.dt_base;
    opts.stride = cfg.stride;
    opts.snapshot_times = cfg.snapshot_times;
    result.trace = simulate_open_loop(grid, co, dist, u0, opts);
    if (result.trace.l2_u.front() > 0.0) {
      result.open_loop_growth =
          result.trace.l2_u.back() / result.trace.l2_u.front();
    }
    return result;
  }

  ControllerConfig ctrl = build_controller(cfg, grid);
  result.schedule = ctrl.schedule;
  {
    const DisturbanceSpec dist = benchmark_disturbance(cfg);
    result.trace = closed_loop_simulate(ctrl, dist, u0);
  }
  {
    const DisturbanceSpec dist = benchmark_disturbance(cfg);
    result.target_w = simulate_target_w(ctrl, dist, TargetWOptions{true});
  }

  const double horizon = ctrl.schedule.horizon;
  result.fts = fts_metric(result.trace, 0.01 * horizon);
  result.iss = iss_metric(result.trace, 0.75 * horizon, horizon,
                          result.trace.sup_forcing, result.trace.sup_left,
                          result.trace.sup_right);
  result.linf_bound = check_linf_bound(
      result.target_w, result.target_w.sup_forcing, result.target_w.sup_left,
      result.target_w.sup_right, cfg.sigma);
  const double omega =
      std::max({result.target_w.sup_forcing / cfg.sigma,
                result.target_w.sup_left, result.target_w.sup_right});
  result.lyapunov = check_lyapunov_monotone(result.target_w, grid, omega);
  result.segment_decay_margin = segment_decay_margins(ctrl, result.trace);
  {
    const DisturbanceSpec dist = benchmark_disturbance(cfg);
    const Trace mono = replay_monolithic(ctrl, dist, u0, result.trace);
    result.superposition_max_rel =
        max_relative_field_gap(result.trace, mono, grid);
  }
  return result;
}

namespace {

const char* kind_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::zeta_horizon: return "I";
    case ExperimentKind::prescribed_horizon: return "II";
    case ExperimentKind::open_loop: return "open_loop";
  }
  return "?";
}

void write_report_csv(const ExperimentResult& r, std::ostream& out) {
  out << "case,N,dt_base,A,init_scale,horizon,initial_l2,terminal_l2,"
         "fts_ratio,fts_epsilon,iss_window_sup,iss_fitted_gain,linf_bound,"
         "linf_worst_margin,lyap_omega,lyap_max,superposition_max_rel,"
         "segment_decay_margins,open_loop_growth\n";
  const bool closed = r.config.kind != ExperimentKind::open_loop;
  std::string margins;
  for (std::size_t i = 0; i < r.segment_decay_margin.size(); ++i) {
    if (i) margins += ';';
    margins += fmt_full(r.segment_decay_margin[i]);
  }
  out << kind_name(r.config.kind) << ',' << r.config.grid_n << ','
      << fmt_full(r.config.dt_base) << ',' << fmt_full(r.config.amplitude)
      << ',' << fmt_full(r.config.init_scale) << ','
      << fmt_full(closed ? r.schedule.horizon : r.config.t_end) << ','
      << fmt_full(r.trace.l2_u.front()) << ',' << fmt_full(r.trace.l2_u.back())
      << ',' << fmt_full(r.fts.decay_ratio) << ',' << fmt_full(r.fts.epsilon)
      << ',' << fmt_full(r.iss.sup_norm_window) << ','
      << fmt_full(r.iss.fitted_gain) << ',' << fmt_full(r.linf_bound.bound)
      << ',' << fmt_full(r.linf_bound.worst_margin) << ','
      << fmt_full(r.lyapunov.omega) << ',' << fmt_full(r.lyapunov.max_value)
      << ',' << fmt_full(r.superposition_max_rel) << ',' << margins << ','
      << fmt_full(r.open_loop_growth) << '\n';
}

void write_report_text(const ExperimentResult& r, std::ostream& out) {
  const auto& cfg = r.config;
  out << "experiment: case " << kind_name(cfg.kind) << ", N=" << cfg.grid_n
      << ", dt_base=" << cfg.dt_base << ", A=" << cfg.amplitude
      << ", init_scale=" << cfg.init_scale << "\n";
  if (cfg.kind == ExperimentKind::open_loop) {
    out << "open-loop growth ||u(t_end)|| / ||u0|| = " << r.open_loop_growth
        << " over [0, " << cfg.t_end << "]\n";
    return;
  }
  out << "horizon T0 = " << r.schedule.horizon << " with "
      << r.schedule.lambda.size() << " segments, gains";
  for (double l : r.schedule.lambda) out << ' ' << l;
  out << "\n";
  out << "fixed-time decay: ||u|| " << r.fts.initial_norm << " -> "
      << r.fts.terminal_norm << " at T0 - " << r.fts.epsilon
      << "  (ratio " << r.fts.decay_ratio << ")\n";
  out << "iss window [" << r.iss.window_begin << ", " << r.iss.window_end
      << "]: sup ||u|| = " << r.iss.sup_norm_window << ", fitted gain = "
      << r.iss.fitted_gain << "\n";
  out << "target-w sup bound " << r.linf_bound.bound << " (+"
      << r.linf_bound.tolerance << " slack): worst margin "
      << r.linf_bound.worst_margin << " -> "
      << (r.linf_bound.pass ? "pass" : "FAIL") << "\n";
  out << "truncated energy functional (omega=" << r.lyapunov.omega
      << "): max " << r.lyapunov.max_value << " -> "
      << (r.lyapunov.pass ? "pass" : "FAIL") << "\n";
  out << "per-segment decay margins (<= 1.01 expected):";
  for (double m : r.segment_decay_margin) out << ' ' << m;
  out << "\n";
  out << "superposition check max rel L2 gap = " << r.superposition_max_rel
      << "\n";
}

void write_plot_script(const ExperimentResult& r, std::ostream& out) {
  const bool closed = r.config.kind != ExperimentKind::open_loop;
  out << "# gnuplot script; run from this directory\n"
         "set datafile separator \",\"\n"
         "set key autotitle columnhead\n"
         "set xlabel \"t\"\n"
         "set ylabel \"L2 norm\"\n"
         "set terminal pngcairo size 900,600\n"
         "set output \"norms.png\"\n";
  if (closed) {
    out << "plot \"trace.csv\" using 1:2 with lines title \"||u||\", \\\n"
           "     \"trace.csv\" using 1:8 with lines title \"||v||\", \\\n"
           "     \"trace.csv\" using 1:9 with lines title \"||w||\"\n";
    out << "set output \"control.png\"\n"
           "set ylabel \"boundary control\"\n"
           "plot \"trace.csv\" using 1:4 with lines title \"U\"\n";
  } else {
    out << "plot \"trace.csv\" using 1:2 with lines title \"||u||\"\n";
  }
}

std::string snapshot_filename(double requested) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "snapshot_t%g.csv", requested);
  return buf;
}

}  // namespace

void write_artifacts(const ExperimentResult& result,
                     const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  const Grid grid(result.config.grid_n);

  {
    std::ofstream f(dir / "trace.csv");
    write_trace_csv(result.trace, f);
  }
  if (result.config.kind != ExperimentKind::open_loop) {
    std::ofstream f(dir / "target_w.csv");
    write_trace_csv(result.target_w, f);
  }
  {
    std::ofstream f(dir / "report.csv");
    write_report_csv(result, f);
  }
  {
    std::ofstream f(dir / "report.txt");
    write_report_text(result, f);
  }
  {
    std::ofstream f(dir / "plot.gp");
    write_plot_script(result, f);
  }
  for (double ts : result.config.snapshot_times) {
    // first recorded state at or after the requested time
    for (const auto& [t, field] : result.trace.snapshots) {
      if (t >= ts - 1e-12) {
        std::ofstream f(dir / snapshot_filename(ts));
        write_snapshot_csv(grid, field, f);
        break;
      }
    }
  }
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "open-loop",      "fts-case1",      "fts-case1-x10",
      "ftiss-case1-a1", "ftiss-case1-a2", "fts-case2",
      "fts-case2-x10",  "ftiss-case2-a1", "ftiss-case2-a2",
  };
  return names;
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;  // benchmark defaults: a=1, c=24, lambda0=3.5, sigma=1
  if (name == "open-loop") {
    cfg.kind = ExperimentKind::open_loop;
    cfg.t_end = 0.5;
  } else if (name == "fts-case1") {
    cfg.kind = ExperimentKind::zeta_horizon;
  } else if (name == "fts-case1-x10") {
    cfg.kind = ExperimentKind::zeta_horizon;
    cfg.init_scale = 10.0;
  } else if (name == "ftiss-case1-a1") {
    cfg.kind = ExperimentKind::zeta_horizon;
    cfg.amplitude = 1.0;
  } else if (name == "ftiss-case1-a2") {
    cfg.kind = ExperimentKind::zeta_horizon;
    cfg.amplitude = 2.0;
  } else if (name == "fts-case2") {
    cfg.kind = ExperimentKind::prescribed_horizon;
  } else if (name == "fts-case2-x10") {
    cfg.kind = ExperimentKind::prescribed_horizon;
    cfg.init_scale = 10.0;
  } else if (name == "ftiss-case2-a1") {
    cfg.kind = ExperimentKind::prescribed_horizon;
    cfg.amplitude = 1.0;
  } else if (name == "ftiss-case2-a2") {
    cfg.kind = ExperimentKind::prescribed_horizon;
    cfg.amplitude = 2.0;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return cfg;
}

ExperimentResult run_preset(const std::string& name,
                            const std::string& out_dir) {
  ExperimentResult result = run_experiment(preset_config(name));
  write_artifacts(result, out_dir);
  return result;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& base,
                                const std::string& axis,
                                const std::vector<double>& values) {
  if (axis != "A" && axis != "N" && axis != "dt_base" && axis != "sigma" &&
      axis != "n_max") {
    throw std::invalid_argument("sweep: unknown axis '" + axis +
                                "' (expected A, N, dt_base, sigma or n_max)");
  }
  auto apply = [&axis](ExperimentConfig cfg, double v) {
    if (axis == "A") {
      cfg.amplitude = v;
    } else if (axis == "N") {
      cfg.grid_n = static_cast<int>(v);
      if (static_cast<double>(cfg.grid_n) != v) {
        throw std::invalid_argument("sweep: N values must be integers");
      }
    } else if (axis == "dt_base") {
      cfg.dt_base = v;
    } else if (axis == "sigma") {
      cfg.sigma = v;
    } else {  // n_max
      cfg.n_max = static_cast<int>(v);
      if (static_cast<double>(cfg.n_max) != v) {
        throw std::invalid_argument("sweep: n_max values must be integers");
      }
    }
    return cfg;
  };

  std::vector<std::future<SweepRow>> futures;
  futures.reserve(values.size());
  for (double v : values) {
    futures.push_back(std::async(std::launch::async, [&apply, &base, v]() {
      SweepRow row;
      row.value = v;
      try {
        const ExperimentResult r = run_experiment(apply(base, v));
        row.initial_l2 = r.trace.l2_u.front();
        row.terminal_l2 = r.trace.l2_u.back();
        row.fts_ratio = r.config.kind == ExperimentKind::open_loop
                            ? r.open_loop_growth
                            : r.fts.decay_ratio;
        row.iss_window_sup = r.iss.sup_norm_window;
        row.fitted_gain = r.iss.fitted_gain;
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (auto& f : futures) {
    rows.push_back(f.get());
  }
  return rows;
}

void write_sweep_csv(const std::string& axis,
                     const std::vector<SweepRow>& rows, std::ostream& out) {
  out << axis
      << ",status,initial_l2,terminal_l2,fts_ratio,iss_window_sup,"
         "fitted_gain\n";
  for (const auto& r : rows) {
    out << fmt_full(r.value) << ',' << r.status << ','
        << fmt_full(r.initial_l2) << ',' << fmt_full(r.terminal_l2) << ','
        << fmt_full(r.fts_ratio) << ',' << fmt_full(r.iss_window_sup) << ','
        << fmt_full(r.fitted_gain) << '\n';
  }
}

}  // namespace ftstab
