#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ftstab/presets.hpp"

using namespace ftstab;

TEST_CASE("preset catalogue") {
  CHECK(preset_names().size() == 9);
  for (const auto& name : preset_names()) {
    const ExperimentConfig cfg = preset_config(name);
    // shared benchmark parameters
    CHECK(cfg.a == 1.0);
    CHECK(cfg.c == 24.0);
    CHECK(cfg.lambda0 == 3.5);
    CHECK(cfg.sigma == 1.0);
    CHECK(cfg.grid_n == 201);
    CHECK(cfg.dt_base == 1e-4);
    cfg.validate();
  }
  CHECK(preset_config("fts-case1").kind == ExperimentKind::zeta_horizon);
  CHECK(preset_config("fts-case1").p == 1.9);
  CHECK(preset_config("fts-case1").n_max == 2);
  CHECK(preset_config("fts-case2").horizon == 1.5);
  CHECK(preset_config("fts-case1-x10").init_scale == 10.0);
  CHECK(preset_config("ftiss-case2-a2").amplitude == 2.0);
  CHECK(preset_config("open-loop").kind == ExperimentKind::open_loop);
  CHECK_THROWS_AS(preset_config("nope"), std::invalid_argument);
}

TEST_CASE("sweep: empty value list gives an empty summary") {
  ExperimentConfig base = preset_config("fts-case2");
  const auto rows = run_sweep(base, "A", {});
  CHECK(rows.empty());
  std::ostringstream out;
  write_sweep_csv("A", rows, out);
  CHECK(out.str() ==
        "A,status,initial_l2,terminal_l2,fts_ratio,iss_window_sup,"
        "fitted_gain\n");
}

TEST_CASE("sweep: unknown axis is rejected up front") {
  ExperimentConfig base = preset_config("fts-case2");
  CHECK_THROWS_AS(run_sweep(base, "bogus", {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("sweep: per-run failures land in the row, the sweep continues") {
  ExperimentConfig base = preset_config("fts-case2");
  base.grid_n = 51;
  base.dt_base = 1e-3;
  base.stride = 20;
  // N = 2 violates the grid precondition; the neighbouring runs still finish
  const auto rows = run_sweep(base, "N", {2.0, 51.0});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].status.find("error") != std::string::npos);
  CHECK(rows[1].status == "ok");
}

TEST_CASE("sweep over the mesh shows self-convergence of the response") {
  ExperimentConfig base = preset_config("ftiss-case2-a1");
  const auto rows = run_sweep(base, "N", {101.0, 201.0, 401.0});
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.status == "ok");
  // discretization error against the finest run shrinks under refinement
  const double e101 = std::abs(rows[0].iss_window_sup - rows[2].iss_window_sup);
  const double e201 = std::abs(rows[1].iss_window_sup - rows[2].iss_window_sup);
  CHECK(e201 < e101);
}

TEST_CASE("sweep over the amplitude of a small configuration") {
  ExperimentConfig base = preset_config("ftiss-case2-a1");
  base.grid_n = 101;     // keep this test quick
  base.dt_base = 1e-3;
  base.stride = 20;
  const auto rows = run_sweep(base, "A", {0.0, 1.0, 2.0});
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.status == "ok");
  // disturbance response scales monotonically
  CHECK(rows[0].iss_window_sup <= rows[1].iss_window_sup);
  CHECK(rows[1].iss_window_sup <= rows[2].iss_window_sup);
  CHECK(rows[2].iss_window_sup ==
        doctest::Approx(2.0 * rows[1].iss_window_sup).epsilon(0.1));
}

TEST_CASE("experiment artifacts land on disk, snapshots included") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = preset_config("ftiss-case2-a1");
  cfg.grid_n = 101;
  cfg.dt_base = 1e-3;
  cfg.stride = 20;
  cfg.snapshot_times = {0.4};
  const ExperimentResult result = run_experiment(cfg);
  const fs::path dir = fs::temp_directory_path() / "ftstab_artifacts_test";
  fs::remove_all(dir);
  write_artifacts(result, dir.string());
  for (const char* f : {"trace.csv", "target_w.csv", "report.csv",
                        "report.txt", "plot.gp", "snapshot_t0.4.csv"}) {
    CHECK(fs::exists(dir / f));
  }
  std::ifstream snap(dir / "snapshot_t0.4.csv");
  std::string header;
  std::getline(snap, header);
  CHECK(header == "x,u");
  int rows = 0;
  std::string line;
  while (std::getline(snap, line)) ++rows;
  CHECK(rows == cfg.grid_n);
  fs::remove_all(dir);
}

TEST_CASE("open-loop experiments honour snapshot times") {
  ExperimentConfig cfg = preset_config("open-loop");
  cfg.grid_n = 51;
  cfg.dt_base = 1e-3;
  cfg.t_end = 0.1;
  cfg.snapshot_times = {0.05};
  const ExperimentResult result = run_experiment(cfg);
  REQUIRE(result.trace.snapshots.size() == 1);
  CHECK(result.trace.snapshots[0].first >= 0.05);
  CHECK(std::isfinite(result.trace.snapshots[0].second.values[10]));
}
