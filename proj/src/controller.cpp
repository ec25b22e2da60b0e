#include "ftstab/controller.hpp"

#include <cmath>
#include <stdexcept>

#include "ftstab/errors.hpp"

namespace ftstab {

namespace {

constexpr double kTimeEps = 1e-12;

void check_field(const Field& f, const Grid& grid, const char* what) {
  if (static_cast<int>(f.values.size()) != grid.size()) {
    throw std::invalid_argument(std::string(what) +
                                ": field length does not match grid");
  }
  for (double v : f.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(what) + ": field must be finite");
    }
  }
}

}  // namespace

ControllerConfig ControllerConfig::make(Grid grid, Coefficients co,
                                        Schedule sched, double sigma,
                                        double dt_base, int stride) {
  co.validate();
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("ControllerConfig: sigma must be > 0");
  }
  if (!(dt_base > 0.0) || stride < 1) {
    throw std::invalid_argument("ControllerConfig: bad dt_base or stride");
  }
  if (sched.lambda.empty() || sched.t.size() != sched.lambda.size() + 1) {
    throw std::invalid_argument("ControllerConfig: malformed schedule");
  }
  std::vector<GainRow> gains_v;
  gains_v.reserve(sched.lambda.size());
  for (double lambda_n : sched.lambda) {
    gains_v.push_back(gain_row(KernelParams(lambda_n, co.a, co.c), grid));
  }
  GainRow gain_w = gain_row(KernelParams(sigma, co.a, co.c), grid);
  return ControllerConfig{.grid = std::move(grid),
                          .coefficients = co,
                          .schedule = std::move(sched),
                          .sigma = sigma,
                          .gains_v = std::move(gains_v),
                          .gain_w = std::move(gain_w),
                          .dt_base = dt_base,
                          .stride = stride,
                          .end_fraction = 0.99,
                          .record_fields = false,
                          .snapshot_times = {}};
}

double ControllerConfig::segment_dt(int segment) const {
  const double lambda_n = schedule.lambda.at(segment);
  const double a = coefficients.a;
  const double c = coefficients.c;
  double dt = std::min(dt_base, 0.1 / lambda_n);
  dt = std::min(dt, a / ((lambda_n + c) * (lambda_n + c)));
  dt = std::min(dt, a / ((sigma + c) * (sigma + c)));
  return dt;
}

Field SplitState::reconstruct() const {
  Field u;
  u.time = time;
  u.values.resize(v.values.size());
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    u.values[i] = v.values[i] + w.values[i];
  }
  return u;
}

double control_V(const Field& v, const ControllerConfig& cfg, double time) {
  const int n = cfg.schedule.segment_of(time);
  return cfg.gains_v[n].apply(v.values);
}

double control_W(const Field& w, const ControllerConfig& cfg) {
  return cfg.gain_w.apply(w.values);
}

namespace {

// Shared sampling/snapshot machinery for the loop drivers below.
struct Recorder {
  Trace& trace;
  const ControllerConfig& cfg;
  std::vector<bool> snapshot_done;

  explicit Recorder(Trace& tr, const ControllerConfig& config)
      : trace(tr), cfg(config),
        snapshot_done(config.snapshot_times.size(), false) {}

  void maybe_snapshot(double t, const std::vector<double>& state) {
    bool want = cfg.record_fields;
    for (std::size_t k = 0; k < cfg.snapshot_times.size(); ++k) {
      if (!snapshot_done[k] && t >= cfg.snapshot_times[k] - kTimeEps) {
        snapshot_done[k] = true;
        want = true;
      }
    }
    if (want) {
      if (trace.snapshots.empty() || trace.snapshots.back().first != t) {
        trace.snapshots.push_back({t, Field{state, t}});
      }
    }
  }
};

}  // namespace

Trace closed_loop_simulate(const ControllerConfig& cfg,
                           const DisturbanceSpec& dist, const Field& u0) {
  check_field(u0, cfg.grid, "closed_loop_simulate");
  const Grid& grid = cfg.grid;
  const int n_pts = grid.size();
  const Schedule& sched = cfg.schedule;
  const double end_time = cfg.end_fraction * sched.horizon;

  Trace trace;
  trace.horizon = sched.horizon;
  Recorder rec(trace, cfg);

  SplitState st;
  st.v = u0;
  st.v.time = 0.0;
  st.w.values.assign(n_pts, 0.0);
  std::vector<double> zero(n_pts, 0.0);
  std::vector<double> forcing(n_pts, 0.0);

  auto sample = [&](double t, int segment, double d1_now) {
    if (!trace.times.empty() && trace.times.back() == t) return;
    const double V = cfg.gains_v[segment].apply(st.v.values);
    const double W = cfg.gain_w.apply(st.w.values);
    const Field u = st.reconstruct();
    trace.times.push_back(t);
    trace.l2_u.push_back(l2_norm(u.values, grid));
    trace.linf_u.push_back(linf_norm(u.values));
    trace.l2_v.push_back(l2_norm(st.v.values, grid));
    trace.l2_w.push_back(l2_norm(st.w.values, grid));
    trace.V.push_back(V);
    trace.W.push_back(W);
    trace.U.push_back(V + W);
    trace.d1.push_back(d1_now);
    if (!std::isfinite(trace.l2_u.back()) || !std::isfinite(V) ||
        !std::isfinite(W)) {
      throw NumericalError("closed_loop_simulate: state non-finite at t=" +
                           std::to_string(t));
    }
    rec.maybe_snapshot(t, u.values);
  };

  sample(0.0, 0, dist.right(0.0));

  for (int n = 0; n <= sched.n_max && st.time < end_time - kTimeEps; ++n) {
    trace.segment_initial_v.push_back(st.v);
    const double seg_end = std::min(sched.t[n + 1], end_time);
    const double dt_n = cfg.segment_dt(n);
    long long steps = 0;
    while (st.time < seg_end - kTimeEps) {
      const double dt = std::min(dt_n, seg_end - st.time);
      const double V = cfg.gains_v[n].apply(st.v.values);
      const double W = cfg.gain_w.apply(st.w.values);
      const double t_new = st.time + dt;
      const double bl_w = dist.left(t_new);
      const double d1_now = dist.right(t_new);
      for (int i = 0; i < n_pts; ++i) {
        forcing[i] = dist.in_domain(grid.nodes()[i], t_new);
      }
      st.v = step(st.v, grid, cfg.coefficients, dt, 0.0, V, zero);
      st.w = step(st.w, grid, cfg.coefficients, dt, bl_w, W + d1_now, forcing);
      st.time = t_new;
      trace.step_times.push_back(t_new);
      trace.step_dt.push_back(dt);
      trace.step_U.push_back(V + W);
      // the boundary value the reconstructed state actually carries
      trace.step_bc_right.push_back(st.v.values[n_pts - 1] +
                                    st.w.values[n_pts - 1]);
      ++steps;
      if (steps % cfg.stride == 0 || st.time >= seg_end - kTimeEps) {
        // Gains are right-continuous: at a boundary the next segment's row
        // is already active.
        const int seg_now =
            st.time < end_time - kTimeEps ? sched.segment_of(st.time) : n;
        sample(st.time, std::min(seg_now, sched.n_max), d1_now);
      }
    }
  }

  trace.sup_forcing = dist.sup_in_domain();
  trace.sup_left = dist.sup_left();
  trace.sup_right = dist.sup_right();
  return trace;
}

Trace simulate_target_v(const ControllerConfig& cfg,
                        const Field& v_at_segment_start, int segment) {
  if (segment < 0 || segment > cfg.schedule.n_max) {
    throw std::invalid_argument("simulate_target_v: segment out of range");
  }
  check_field(v_at_segment_start, cfg.grid, "simulate_target_v");
  const Grid& grid = cfg.grid;
  const Schedule& sched = cfg.schedule;
  const double lambda_n = sched.lambda[segment];
  const double t_begin = sched.t[segment];
  const double t_end =
      std::min(sched.t[segment + 1], cfg.end_fraction * sched.horizon);

  const KernelField kf = KernelField::closed_form(
      grid, KernelParams(lambda_n, cfg.coefficients.a, cfg.coefficients.c));
  Field state;
  state.values = direct_transform(v_at_segment_start.values, kf);
  state.time = t_begin;

  Coefficients target = cfg.coefficients;
  target.c = -lambda_n;

  Trace trace;
  trace.horizon = sched.horizon;
  Recorder rec(trace, cfg);
  std::vector<double> zero(grid.size(), 0.0);

  auto sample = [&](double t) {
    if (!trace.times.empty() && trace.times.back() == t) return;
    trace.times.push_back(t);
    trace.l2_u.push_back(l2_norm(state.values, grid));
    trace.linf_u.push_back(linf_norm(state.values));
    trace.U.push_back(0.0);
    trace.V.push_back(0.0);
    trace.W.push_back(0.0);
    trace.d1.push_back(0.0);
    if (!std::isfinite(trace.l2_u.back())) {
      throw NumericalError("simulate_target_v: state non-finite at t=" +
                           std::to_string(t));
    }
    rec.maybe_snapshot(t, state.values);
  };

  double t = t_begin;
  sample(t);
  const double dt_n = cfg.segment_dt(segment);
  long long steps = 0;
  while (t < t_end - kTimeEps) {
    const double dt = std::min(dt_n, t_end - t);
    state = step(state, grid, target, dt, 0.0, 0.0, zero);
    t += dt;
    ++steps;
    if (steps % cfg.stride == 0 || t >= t_end - kTimeEps) {
      sample(t);
    }
  }
  return trace;
}

Trace simulate_target_w(const ControllerConfig& cfg,
                        const DisturbanceSpec& dist,
                        const TargetWOptions& opts) {
  const Grid& grid = cfg.grid;
  const int n_pts = grid.size();
  const double end_time = cfg.end_fraction * cfg.schedule.horizon;

  const KernelField kf = KernelField::closed_form(
      grid, KernelParams(cfg.sigma, cfg.coefficients.a, cfg.coefficients.c));

  Coefficients target = cfg.coefficients;
  target.c = -cfg.sigma;

  Trace trace;
  trace.horizon = cfg.schedule.horizon;
  ControllerConfig rec_cfg = cfg;  // recorder honours record_fields
  rec_cfg.record_fields = cfg.record_fields || opts.record_fields;
  Recorder rec(trace, rec_cfg);

  Field state;
  state.values.assign(n_pts, 0.0);
  state.time = 0.0;
  std::vector<double> forcing(n_pts, 0.0);
  double sup_forcing = 0.0;

  auto sample = [&](double t, double d1_now) {
    if (!trace.times.empty() && trace.times.back() == t) return;
    trace.times.push_back(t);
    trace.l2_u.push_back(l2_norm(state.values, grid));
    trace.linf_u.push_back(linf_norm(state.values));
    trace.U.push_back(0.0);
    trace.V.push_back(0.0);
    trace.W.push_back(0.0);
    trace.d1.push_back(d1_now);
    if (!std::isfinite(trace.l2_u.back())) {
      throw NumericalError("simulate_target_w: state non-finite at t=" +
                           std::to_string(t));
    }
    rec.maybe_snapshot(t, state.values);
  };

  // Step through the same per-segment dt sequence as the closed loop so the
  // sample times of the two runs line up exactly.
  double t = 0.0;
  sample(0.0, dist.right(0.0));
  for (int n = 0; n <= cfg.schedule.n_max && t < end_time - kTimeEps; ++n) {
    const double seg_end = std::min(cfg.schedule.t[n + 1], end_time);
    const double dt_n = cfg.segment_dt(n);
    long long steps = 0;
    while (t < seg_end - kTimeEps) {
      const double dt = std::min(dt_n, seg_end - t);
      const double t_new = t + dt;
      bool any_forcing = false;
      for (int i = 0; i < n_pts; ++i) {
        forcing[i] = dist.in_domain(grid.nodes()[i], t_new);
        any_forcing = any_forcing || forcing[i] != 0.0;
      }
      if (any_forcing) {
        forcing = direct_transform(forcing, kf);
        sup_forcing = std::max(sup_forcing, linf_norm(forcing));
      }
      const double bl = dist.left(t_new);
      const double br = dist.right(t_new);
      state = step(state, grid, target, dt, bl, br, forcing);
      t = t_new;
      ++steps;
      if (steps % cfg.stride == 0 || t >= seg_end - kTimeEps) {
        sample(t, br);
      }
    }
  }
  trace.sup_forcing = sup_forcing;  // sup of the transformed forcing
  trace.sup_left = dist.sup_left();
  trace.sup_right = dist.sup_right();
  return trace;
}

Trace replay_monolithic(const ControllerConfig& cfg,
                        const DisturbanceSpec& dist, const Field& u0,
                        const Trace& closed_loop) {
  check_field(u0, cfg.grid, "replay_monolithic");
  if (closed_loop.step_times.empty() ||
      closed_loop.step_dt.size() != closed_loop.step_times.size() ||
      closed_loop.step_bc_right.size() != closed_loop.step_times.size()) {
    throw std::invalid_argument("replay_monolithic: trace has no step record");
  }
  const Grid& grid = cfg.grid;
  const int n_pts = grid.size();

  Trace trace;
  trace.horizon = closed_loop.horizon;
  ControllerConfig rec_cfg = cfg;
  rec_cfg.record_fields = true;
  Recorder rec(trace, rec_cfg);

  Field state = u0;
  state.time = 0.0;
  std::vector<double> forcing(n_pts, 0.0);

  std::size_t sample_idx = 0;
  auto sample = [&](double t, double d1_now) {
    trace.times.push_back(t);
    trace.l2_u.push_back(l2_norm(state.values, grid));
    trace.linf_u.push_back(linf_norm(state.values));
    trace.U.push_back(0.0);
    trace.V.push_back(0.0);
    trace.W.push_back(0.0);
    trace.d1.push_back(d1_now);
    rec.maybe_snapshot(t, state.values);
  };
  if (sample_idx < closed_loop.times.size() &&
      closed_loop.times[sample_idx] == 0.0) {
    sample(0.0, dist.right(0.0));
    ++sample_idx;
  }

  for (std::size_t k = 0; k < closed_loop.step_times.size(); ++k) {
    const double t_new = closed_loop.step_times[k];
    const double dt = closed_loop.step_dt[k];
    for (int i = 0; i < n_pts; ++i) {
      forcing[i] = dist.in_domain(grid.nodes()[i], t_new);
    }
    const double bl = dist.left(t_new);
    // replay the exact boundary value the split run imposed
    const double br = closed_loop.step_bc_right[k];
    state = step(state, grid, cfg.coefficients, dt, bl, br, forcing);
    if (sample_idx < closed_loop.times.size() &&
        std::abs(closed_loop.times[sample_idx] - t_new) <= kTimeEps) {
      sample(t_new, dist.right(t_new));
      ++sample_idx;
    }
  }
  return trace;
}

}  // namespace ftstab
