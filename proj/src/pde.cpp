#include "ftstab/pde.hpp"

#include <cmath>
#include <stdexcept>

#include "ftstab/errors.hpp"

namespace ftstab {

void Coefficients::validate() const {
  if (!std::isfinite(a) || !std::isfinite(c)) {
    throw std::invalid_argument("Coefficients: a and c must be finite");
  }
  if (spatially_varying) {
    throw std::domain_error(
        "Coefficients: spatially varying coefficients are not supported");
  }
  if (!(diffusion_cap >= 1.0)) {
    throw std::invalid_argument("Coefficients: diffusion_cap must be >= 1");
  }
  if (!(a >= 1.0 / diffusion_cap && a <= diffusion_cap)) {
    throw std::invalid_argument(
        "Coefficients: a must lie in [1/diffusion_cap, diffusion_cap]");
  }
}

DisturbanceSpec::DisturbanceSpec()
    : f_([](double, double) { return 0.0; }),
      d0_([](double) { return 0.0; }),
      d1_([](double) { return 0.0; }) {}

DisturbanceSpec::DisturbanceSpec(SpaceTimeFn in_domain, TimeFn left,
                                 TimeFn right)
    : f_(std::move(in_domain)), d0_(std::move(left)), d1_(std::move(right)) {
  if (!f_ || !d0_ || !d1_) {
    throw std::invalid_argument("DisturbanceSpec: all functions must be set");
  }
}

DisturbanceSpec DisturbanceSpec::boundary_sine(double amplitude,
                                               double omega) {
  return DisturbanceSpec(
      [](double, double) { return 0.0; }, [](double) { return 0.0; },
      [amplitude, omega](double t) { return amplitude * std::sin(omega * t); });
}

double DisturbanceSpec::in_domain(double x, double t) const {
  const double v = f_(x, t);
  sup_f_ = std::max(sup_f_, std::abs(v));
  return v;
}

double DisturbanceSpec::left(double t) const {
  const double v = d0_(t);
  sup_d0_ = std::max(sup_d0_, std::abs(v));
  return v;
}

double DisturbanceSpec::right(double t) const {
  const double v = d1_(t);
  sup_d1_ = std::max(sup_d1_, std::abs(v));
  return v;
}

Field step(const Field& state, const Grid& grid, const Coefficients& co,
           double dt, double bc_left, double bc_right,
           std::span<const double> forcing) {
  const int n = grid.size();
  if (static_cast<int>(state.values.size()) != n ||
      static_cast<int>(forcing.size()) != n) {
    throw std::invalid_argument("step: field/forcing length does not match grid");
  }
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step: dt must be > 0");
  }

  // Interior system (I - dt L) u = u_old + dt f with Dirichlet rows
  // eliminated; Thomas forward sweep with pivot check.
  const double h = grid.spacing();
  const double gamma = co.a * dt / (h * h);
  const double diag = 1.0 + 2.0 * gamma - co.c * dt;
  const double off = -gamma;
  const int m = n - 2;

  Field out;
  out.values.assign(n, 0.0);
  out.time = state.time + dt;
  out.values[0] = bc_left;
  out.values[n - 1] = bc_right;

  auto rhs_at = [&](int i) {
    double rhs = state.values[i] + dt * forcing[i];
    if (i == 1) rhs += gamma * bc_left;
    if (i == m) rhs += gamma * bc_right;
    return rhs;
  };

  std::vector<double> scratch(m);  // normalized superdiagonal
  double pivot = diag;
  if (std::abs(pivot) < 1e-300) {
    throw NumericalError("step: singular tridiagonal system (dt*c pathological)");
  }
  std::vector<double>& u = out.values;
  u[1] = rhs_at(1) / pivot;
  scratch[0] = off / pivot;
  for (int i = 2; i <= m; ++i) {
    pivot = diag - off * scratch[i - 2];
    if (std::abs(pivot) < 1e-300) {
      throw NumericalError("step: singular tridiagonal system (dt*c pathological)");
    }
    u[i] = (rhs_at(i) - off * u[i - 1]) / pivot;
    scratch[i - 1] = off / pivot;
  }
  for (int i = m - 1; i >= 1; --i) {
    u[i] -= scratch[i - 1] * u[i + 1];
  }
  return out;
}

double l2_norm(std::span<const double> values, const Grid& grid) {
  if (static_cast<int>(values.size()) != grid.size()) {
    throw std::invalid_argument("l2_norm: field length does not match grid");
  }
  double acc = 0.0;
  const auto& w = grid.trapezoid_weights();
  for (int i = 0; i < grid.size(); ++i) {
    acc += w[i] * values[i] * values[i];
  }
  return std::sqrt(acc);
}

double linf_norm(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

Trace simulate_open_loop(const Grid& grid, const Coefficients& co,
                         const DisturbanceSpec& dist, const Field& u0,
                         const OpenLoopOptions& opts) {
  co.validate();
  if (!(opts.t_end > 0.0) || !(opts.dt > 0.0) || opts.stride < 1) {
    throw std::invalid_argument("simulate_open_loop: bad time options");
  }
  if (static_cast<int>(u0.values.size()) != grid.size()) {
    throw std::invalid_argument("simulate_open_loop: u0 does not match grid");
  }

  Trace trace;
  trace.horizon = opts.t_end;
  const int n = grid.size();
  Field state = u0;
  state.time = 0.0;
  std::vector<double> forcing(n, 0.0);
  std::vector<bool> snapshot_done(opts.snapshot_times.size(), false);

  auto sample = [&](double d1_now) {
    trace.times.push_back(state.time);
    trace.l2_u.push_back(l2_norm(state.values, grid));
    trace.linf_u.push_back(linf_norm(state.values));
    trace.U.push_back(0.0);
    trace.V.push_back(0.0);
    trace.W.push_back(0.0);
    trace.d1.push_back(d1_now);
    if (!std::isfinite(trace.l2_u.back())) {
      throw NumericalError("simulate_open_loop: state became non-finite at t=" +
                           std::to_string(state.time));
    }
    for (std::size_t k = 0; k < opts.snapshot_times.size(); ++k) {
      if (!snapshot_done[k] && state.time >= opts.snapshot_times[k] - 1e-12) {
        snapshot_done[k] = true;
        if (trace.snapshots.empty() ||
            trace.snapshots.back().first != state.time) {
          trace.snapshots.push_back({state.time, state});
        }
      }
    }
  };
  sample(dist.right(0.0) + opts.right_offset);

  long long steps = 0;
  double t = 0.0;
  while (t < opts.t_end - 1e-12) {
    const double dt = std::min(opts.dt, opts.t_end - t);
    const double t_new = t + dt;
    for (int i = 0; i < n; ++i) {
      forcing[i] = dist.in_domain(grid.nodes()[i], t_new);
    }
    const double bl = dist.left(t_new) + opts.left_offset;
    const double br = dist.right(t_new) + opts.right_offset;
    state = step(state, grid, co, dt, bl, br, forcing);
    t = t_new;
    ++steps;
    if (steps % opts.stride == 0 || t >= opts.t_end - 1e-12) {
      sample(br);
    }
  }
  trace.sup_forcing = dist.sup_in_domain();
  trace.sup_left = dist.sup_left();
  trace.sup_right = dist.sup_right();
  return trace;
}

}  // namespace ftstab
