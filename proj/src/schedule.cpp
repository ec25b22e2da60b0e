#include "ftstab/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftstab {

double zeta(double p, double tol) {
  if (!(p > 1.0)) {
    throw std::domain_error("zeta: series diverges for p <= 1");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("zeta: tolerance must be positive");
  }
  // Midpoint tail: sum_{i>N} i^-p ~ (N+1/2)^{1-p}/(p-1), with error below
  // p N^{-(p+1)} / 24. Pick N so that error bound <= tol.
  double n_est = std::pow(p / (24.0 * tol), 1.0 / (p + 1.0));
  const long long n = std::max<long long>(16, static_cast<long long>(std::ceil(n_est)));
  double sum = 0.0;
  for (long long i = n; i >= 1; --i) {  // small terms first
    sum += std::pow(static_cast<double>(i), -p);
  }
  sum += std::pow(static_cast<double>(n) + 0.5, 1.0 - p) / (p - 1.0);
  return sum;
}

namespace {

Schedule finish(Schedule sched) {
  // Partial sums of gain * segment length, including the extended tail.
  sched.s.assign(sched.t.size(), 0.0);
  for (std::size_t j = 0; j + 1 < sched.t.size(); ++j) {
    sched.s[j + 1] = sched.s[j] + sched.lambda[j] * (sched.t[j + 1] - sched.t[j]);
  }
  return sched;
}

void check_common(double lambda0, int n_max) {
  if (!(lambda0 > 0.0)) {
    throw std::invalid_argument("schedule: lambda0 must be > 0");
  }
  if (n_max < 1) {
    throw std::invalid_argument("schedule: n_max must be >= 1");
  }
}

}  // namespace

Schedule schedule_case1(double p, double lambda0, int n_max) {
  if (!(p > 1.0)) {
    throw std::domain_error("schedule: horizon zeta(p) diverges for p <= 1");
  }
  check_common(lambda0, n_max);
  Schedule sched;
  sched.kind = ScheduleCase::zeta;
  sched.p = p;
  sched.lambda0 = lambda0;
  sched.n_max = n_max;
  sched.horizon = zeta(p, 1e-10);
  sched.t.resize(n_max + 2);
  sched.lambda.resize(n_max + 1);
  sched.t[0] = 0.0;
  for (int n = 0; n < n_max; ++n) {
    sched.t[n + 1] = sched.t[n] + std::pow(static_cast<double>(n + 1), -p);
  }
  sched.t[n_max + 1] = sched.horizon;  // truncated tail folded into the last segment
  for (int n = 0; n <= n_max; ++n) {
    sched.lambda[n] = std::pow(static_cast<double>(n), 2.0 * (p + 1.0)) + lambda0;
  }
  return finish(std::move(sched));
}

Schedule schedule_case2(double T0, double lambda0, int n_max) {
  if (!(T0 > 0.0)) {
    throw std::invalid_argument("schedule: horizon must be > 0");
  }
  check_common(lambda0, n_max);
  Schedule sched;
  sched.kind = ScheduleCase::prescribed;
  sched.lambda0 = lambda0;
  sched.n_max = n_max;
  sched.horizon = T0;
  sched.t.resize(n_max + 2);
  sched.lambda.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    sched.t[n] = T0 - T0 / static_cast<double>(n + 1);
    sched.lambda[n] = std::pow(static_cast<double>(n), 6.0) + lambda0;
  }
  sched.t[n_max + 1] = T0;
  return finish(std::move(sched));
}

int Schedule::segment_of(double time) const {
  if (!(time >= 0.0) || !(time < horizon)) {
    throw std::out_of_range("segment_of: time outside [0, horizon)");
  }
  auto it = std::upper_bound(t.begin(), t.end(), time);
  int n = static_cast<int>(it - t.begin()) - 1;
  return std::min(n, n_max);
}

RapidConvergenceReport check_rapid_convergence(const Schedule& sched,
                                               double gamma0) {
  if (!(gamma0 > 0.0)) {
    throw std::invalid_argument("check_rapid_convergence: gamma0 must be > 0");
  }
  RapidConvergenceReport rep;
  rep.gamma0 = gamma0;
  const int count = static_cast<int>(sched.lambda.size()) - 1;
  rep.ratio.reserve(count);
  rep.growth.reserve(count);
  for (int n = 0; n < count; ++n) {
    const double gap = sched.t[n + 1] - sched.t[n];
    const double root_next = std::sqrt(sched.lambda[n + 1]);
    rep.ratio.push_back(gap * sched.lambda[n] / root_next);
    rep.growth.push_back(sched.s[n] / (static_cast<double>(n) + root_next));
    if (rep.first_satisfied < 0 && rep.ratio.back() >= gamma0) {
      rep.first_satisfied = n;
    }
  }
  rep.growth_increasing = true;
  for (std::size_t n = 1; n < rep.growth.size(); ++n) {
    if (rep.growth[n] < rep.growth[n - 1]) {
      rep.growth_increasing = false;
      break;
    }
  }
  return rep;
}

}  // namespace ftstab
