#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ftstab/analysis.hpp"
#include "ftstab/config.hpp"
#include "ftstab/controller.hpp"
#include "ftstab/csv.hpp"
#include "ftstab/errors.hpp"
#include "ftstab/kernels.hpp"
#include "ftstab/presets.hpp"
#include "ftstab/schedule.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

void cmd_zeta(double p, double tol) {
  std::cout << ftstab::fmt_full(ftstab::zeta(p, tol)) << "\n";
}

void cmd_schedule(const std::string& case_name, double p, double T0,
                  double lambda0, int n_max, double gamma0) {
  using namespace ftstab;
  const Schedule sched = case_name == "I"
                             ? schedule_case1(p, lambda0, n_max)
                             : schedule_case2(T0, lambda0, n_max);
  const RapidConvergenceReport rep = check_rapid_convergence(sched, gamma0);
  std::cout << "n,t_n,lambda_n,s_n,r_n,q_n\n";
  for (std::size_t n = 0; n < sched.lambda.size(); ++n) {
    std::cout << n << ',' << fmt_full(sched.t[n]) << ','
              << fmt_full(sched.lambda[n]) << ',' << fmt_full(sched.s[n]);
    if (n < rep.ratio.size()) {
      std::cout << ',' << fmt_full(rep.ratio[n]) << ','
                << fmt_full(rep.growth[n]);
    } else {
      std::cout << ",,";
    }
    std::cout << '\n';
  }
}

void cmd_kernel(double lambda, double a, double c, int n_points,
                const std::string& out_path) {
  using namespace ftstab;
  const Grid grid(n_points);
  const GainRow row = gain_row(KernelParams(lambda, a, c), grid);
  std::ofstream out(out_path);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + out_path + "'");
  }
  write_gain_csv(row, grid, out);
}

void cmd_simulate(const std::string& config_path) {
  using namespace ftstab;
  const ExperimentConfig cfg = parse_config_file(config_path);
  const ExperimentResult result = run_experiment(cfg);
  write_artifacts(result, cfg.out_dir);
  std::cout << "wrote " << cfg.out_dir << "/trace.csv and reports\n";
}

void cmd_preset(const std::string& name, std::string out_dir) {
  using namespace ftstab;
  if (out_dir.empty()) out_dir = "out/" + name;
  run_preset(name, out_dir);
  std::cout << "wrote " << out_dir << "/trace.csv and reports\n";
}

void cmd_sweep(const std::string& config_path, const std::string& axis,
               const std::vector<double>& values, std::string out_path) {
  using namespace ftstab;
  const ExperimentConfig cfg = parse_config_file(config_path);
  const auto rows = run_sweep(cfg, axis, values);
  if (out_path.empty()) out_path = "sweep.csv";
  std::ofstream out(out_path);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + out_path + "'");
  }
  write_sweep_csv(axis, rows, out);
  std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary fixed-time / ISS stabilization toolkit for the 1-D "
               "reaction-diffusion benchmark"};
  app.require_subcommand(1);

  double p = 1.9, tol = 1e-10;
  auto* zeta_cmd = app.add_subcommand("zeta", "evaluate the zeta horizon");
  zeta_cmd->add_option("--p", p, "exponent (> 1)")->required();
  zeta_cmd->add_option("--tol", tol, "absolute tolerance");

  std::string case_name = "I";
  double T0 = 1.5, lambda0 = 3.5, gamma0 = 1.0;
  int n_max = 2;
  auto* sched_cmd =
      app.add_subcommand("schedule", "print a segment/gain schedule as CSV");
  sched_cmd->add_option("--case", case_name, "I or II")
      ->check(CLI::IsMember({"I", "II"}))
      ->required();
  sched_cmd->add_option("--p", p, "case I exponent");
  sched_cmd->add_option("--T0", T0, "case II horizon");
  sched_cmd->add_option("--lambda0", lambda0, "gain floor");
  sched_cmd->add_option("--n-max", n_max, "truncation index");
  sched_cmd->add_option("--gamma0", gamma0, "rapid-convergence threshold");

  double lambda = 4.5, a = 1.0, c = 24.0;
  int n_points = 201;
  std::string out_path;
  auto* kernel_cmd =
      app.add_subcommand("kernel", "export the gain row k(1,.) as CSV");
  kernel_cmd->add_option("--lambda", lambda, "kernel gain")->required();
  kernel_cmd->add_option("--c", c, "reaction coefficient")->required();
  kernel_cmd->add_option("--a", a, "diffusion coefficient");
  kernel_cmd->add_option("--N", n_points, "grid points");
  kernel_cmd->add_option("--out", out_path, "output CSV path")->required();

  std::string config_path;
  auto* sim_cmd =
      app.add_subcommand("simulate", "run an experiment from a config file");
  sim_cmd->add_option("--config", config_path, "key=value config file")
      ->required();

  std::string preset_name, preset_out;
  auto* preset_cmd =
      app.add_subcommand("preset", "run one of the benchmark presets");
  std::string preset_help = "one of:";
  for (const auto& n : ftstab::preset_names()) preset_help += " " + n;
  preset_cmd->add_option("--name", preset_name, preset_help)->required();
  preset_cmd->add_option("--out", preset_out, "output directory");

  std::string axis, sweep_out;
  std::vector<double> values;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "run a parameter sweep over a config");
  sweep_cmd->add_option("--config", config_path, "base config file")
      ->required();
  sweep_cmd->add_option("--axis", axis, "A, N, dt_base, sigma or n_max")
      ->required();
  sweep_cmd->add_option("--values", values, "comma-separated values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--out", sweep_out, "summary CSV path");

  try {
    app.parse(argc, argv);
    if (zeta_cmd->parsed()) {
      cmd_zeta(p, tol);
    } else if (sched_cmd->parsed()) {
      cmd_schedule(case_name, p, T0, lambda0, n_max, gamma0);
    } else if (kernel_cmd->parsed()) {
      cmd_kernel(lambda, a, c, n_points, out_path);
    } else if (sim_cmd->parsed()) {
      cmd_simulate(config_path);
    } else if (preset_cmd->parsed()) {
      cmd_preset(preset_name, preset_out);
    } else if (sweep_cmd->parsed()) {
      cmd_sweep(config_path, axis, values, sweep_out);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  } catch (const ftstab::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
