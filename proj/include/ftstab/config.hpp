#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftstab {

enum class ExperimentKind {
  zeta_horizon,        ///< switched controller, horizon = zeta(p)
  prescribed_horizon,  ///< switched controller, horizon given directly
  open_loop,           ///< no control, boundary follows the disturbance
};

/// One experiment: the benchmark plant u_t = a u_xx + c u with initial
/// datum scale * (-4 sin(15(x - 1/2))) and boundary disturbance
/// d1(t) = A sin(30 t).
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::zeta_horizon;
  double p = 1.9;         ///< zeta case
  double horizon = 1.5;   ///< prescribed case T0
  double lambda0 = 3.5;
  double sigma = 1.0;
  int n_max = 2;
  double a = 1.0;
  double c = 24.0;
  int grid_n = 201;
  double dt_base = 1e-4;
  double amplitude = 0.0;   ///< disturbance amplitude A
  double init_scale = 1.0;  ///< 1 or 10
  double gamma0 = 1.0;
  int stride = 50;
  double t_end = 0.5;  ///< open-loop runs only
  std::string out_dir = "out";
  std::vector<double> snapshot_times;

  void validate() const;  // range checks; schedule/solver preconditions
                          // surface from the modules themselves
};

/// Parses a flat key=value document ('#' comments, optional [section]
/// headers that are skipped, keys unique). Unknown keys, malformed values
/// and out-of-range settings raise std::invalid_argument naming the key.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

}  // namespace ftstab
