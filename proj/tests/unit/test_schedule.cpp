#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ftstab/schedule.hpp"

using namespace ftstab;

TEST_CASE("zeta at classical values and the benchmark exponent") {
  CHECK(zeta(2.0, 1e-8) == doctest::Approx(1.6449340668482264).epsilon(1e-6));
  CHECK(zeta(4.0, 1e-8) == doctest::Approx(1.0823232337111382).epsilon(1e-6));
  CHECK(std::abs(zeta(1.9, 1e-10) - 1.7497464351250608) <= 2e-10);
  CHECK(std::abs(zeta(1.9, 1e-6) - 1.7497) <= 1e-4);
  CHECK_THROWS_AS(zeta(1.0, 1e-8), std::domain_error);
  CHECK_THROWS_AS(zeta(0.5, 1e-8), std::domain_error);
  CHECK_THROWS_AS(zeta(2.0, 0.0), std::invalid_argument);
}

TEST_CASE("case-one schedule reproduces the benchmark segments") {
  const Schedule s = schedule_case1(1.9, 3.5, 2);
  REQUIRE(s.t.size() == 4);
  REQUIRE(s.lambda.size() == 3);
  CHECK(s.t[0] == 0.0);
  CHECK(s.t[1] == 1.0);
  CHECK(s.t[2] == doctest::Approx(1.2679433656340733).epsilon(1e-12));
  CHECK(s.t[3] == doctest::Approx(1.7497464351250608).epsilon(1e-9));
  CHECK(s.t[3] == s.horizon);
  CHECK(s.lambda[0] == 3.5);
  CHECK(s.lambda[1] == 4.5);  // 1^{2(p+1)} + 3.5, exact
  // direct arithmetic: 2^{5.8} + 3.5
  CHECK(s.lambda[2] == std::pow(2.0, 5.8) + 3.5);
  CHECK(s.lambda[2] == doctest::Approx(59.215236050951945).epsilon(1e-12));
  // formula gaps hold before the extension
  CHECK(s.t[2] - s.t[1] ==
        doctest::Approx(std::pow(2.0, -1.9)).epsilon(1e-14));
  CHECK(s.final_segment_extended);
  CHECK_THROWS_AS(schedule_case1(1.0, 3.5, 2), std::domain_error);
  CHECK_THROWS_AS(schedule_case1(1.9, 0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(schedule_case1(1.9, 3.5, 0), std::invalid_argument);
}

TEST_CASE("case-two schedule is exact") {
  const Schedule s = schedule_case2(1.5, 3.5, 2);
  REQUIRE(s.t.size() == 4);
  CHECK(s.t[0] == 0.0);
  CHECK(s.t[1] == 0.75);
  CHECK(s.t[2] == 1.0);
  CHECK(s.t[3] == 1.5);
  CHECK(s.lambda[0] == 3.5);
  CHECK(s.lambda[1] == 4.5);
  CHECK(s.lambda[2] == 67.5);
  // the horizon gap identity holds exactly at the formula nodes
  for (int n = 0; n <= s.n_max; ++n) {
    CHECK(s.horizon - s.t[n] == 1.5 / (n + 1));
  }

  const Schedule single = schedule_case2(1.5, 3.5, 1);
  REQUIRE(single.t.size() == 3);
  CHECK(single.t[1] == 0.75);
  CHECK(single.t[2] == 1.5);  // extension closes the horizon
}

TEST_CASE("case-one gaps sum to the zeta horizon") {
  // the formula times plus the midpoint tail estimate reproduce zeta(p)
  const double p = 1.9;
  const Schedule s = schedule_case1(p, 3.5, 50);
  const double tail = std::pow(50.5, 1.0 - p) / (p - 1.0);
  CHECK(std::abs(s.t[50] + tail - zeta(p, 1e-10)) <= 1e-6);
  CHECK(s.horizon > s.t[50]);
}

TEST_CASE("partial sums are a plain left fold and nondecreasing") {
  for (const Schedule& s :
       {schedule_case1(1.9, 3.5, 6), schedule_case2(1.5, 3.5, 6)}) {
    REQUIRE(s.s.size() == s.t.size());
    CHECK(s.s[0] == 0.0);
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < s.t.size(); ++j) {
      acc = acc + s.lambda[j] * (s.t[j + 1] - s.t[j]);
      CHECK(s.s[j + 1] == acc);  // bit-for-bit
      CHECK(s.s[j + 1] >= s.s[j]);
    }
  }
}

TEST_CASE("segment lookup is the inverse of construction") {
  const Schedule s = schedule_case1(1.9, 3.5, 2);
  CHECK(s.segment_of(0.0) == 0);
  CHECK(s.segment_of(1.1) == 1);  // inside (1, 1.2679)
  CHECK(s.segment_of(s.horizon - 1e-9) == s.n_max);
  // boundary times activate the new gain
  CHECK(s.segment_of(s.t[1]) == 1);
  CHECK(s.segment_of(s.t[2]) == 2);
  for (int n = 0; n <= s.n_max; ++n) {
    const double mid = 0.5 * (s.t[n] + s.t[n + 1]);
    CHECK(s.segment_of(mid) == n);
  }
  CHECK_THROWS_AS(s.segment_of(s.horizon), std::out_of_range);
  CHECK_THROWS_AS(s.segment_of(s.horizon + 1.0), std::out_of_range);
  CHECK_THROWS_AS(s.segment_of(-0.1), std::out_of_range);
}

TEST_CASE("rapid-convergence diagnostics match the analytic lower bounds") {
  const double p = 1.9;
  const Schedule s1 = schedule_case1(p, 3.5, 12);
  const RapidConvergenceReport r1 = check_rapid_convergence(s1, 1.0);
  REQUIRE(r1.growth.size() == 12);
  // growth[n] >= (n-1)^{2(p+1)} / (2 sqrt(2) (n+1)^{2p+1}) for n >= lambda0
  for (int n = 4; n < 12; ++n) {
    const double bound = std::pow(n - 1.0, 2.0 * (p + 1.0)) /
                         (2.0 * std::sqrt(2.0) * std::pow(n + 1.0, 2.0 * p + 1.0));
    CHECK(r1.growth[n] >= bound);
  }

  const Schedule s2 = schedule_case2(1.5, 3.5, 12);
  const RapidConvergenceReport r2 = check_rapid_convergence(s2, 1.0);
  for (int n = 4; n < 12; ++n) {
    const double bound = 1.5 * std::pow(n - 1.0, 6.0) /
                         (2.0 * std::sqrt(2.0) * std::pow(n + 1.0, 5.0));
    CHECK(r2.growth[n] >= bound);
  }
}

TEST_CASE("a slowly growing schedule is flagged") {
  // constant gains with quadratically shrinking gaps: the ratio criterion
  // collapses to zero and the growth sequence stalls
  Schedule s;
  s.kind = ScheduleCase::zeta;
  s.lambda0 = 3.5;
  s.n_max = 20;
  s.t.resize(22);
  s.lambda.assign(21, 3.5);
  s.t[0] = 0.0;
  for (int n = 0; n <= 20; ++n) {
    s.t[n + 1] = s.t[n] + 1.0 / ((n + 1.0) * (n + 1.0));
  }
  s.horizon = s.t.back();
  s.s.assign(22, 0.0);
  for (int j = 0; j < 21; ++j) {
    s.s[j + 1] = s.s[j] + s.lambda[j] * (s.t[j + 1] - s.t[j]);
  }
  const RapidConvergenceReport rep = check_rapid_convergence(s, 1.0);
  CHECK(rep.ratio.back() < 0.05);
  CHECK(rep.ratio.back() < rep.ratio.front());
  CHECK_FALSE(rep.growth_increasing);
}
