#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ftstab/analysis.hpp"
#include "ftstab/bessel.hpp"
#include "ftstab/config.hpp"
#include "ftstab/controller.hpp"
#include "ftstab/errors.hpp"
#include "ftstab/kernels.hpp"
#include "ftstab/pde.hpp"
#include "ftstab/presets.hpp"
#include "ftstab/schedule.hpp"

namespace py = pybind11;
using namespace ftstab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Boundary fixed-time / ISS stabilization toolkit for 1-D "
            "reaction-diffusion equations";

  py::register_exception<NumericalError>(m, "NumericalError");

  py::class_<Grid>(m, "Grid")
      .def(py::init<int>(), py::arg("n_points"))
      .def_property_readonly("size", &Grid::size)
      .def_property_readonly("spacing", &Grid::spacing)
      .def_property_readonly("nodes", &Grid::nodes)
      .def_property_readonly("trapezoid_weights", &Grid::trapezoid_weights);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::vector<double> values, double time) {
             return Field{std::move(values), time};
           }),
           py::arg("values"), py::arg("time") = 0.0)
      .def_readwrite("values", &Field::values)
      .def_readwrite("time", &Field::time);

  m.def("bessel_i1", &bessel_i1, py::arg("z"));
  m.def("bessel_j1", &bessel_j1, py::arg("z"));
  m.def("i1_over_z", &i1_over_z, py::arg("z"));
  m.def("j1_over_z", &j1_over_z, py::arg("z"));

  py::class_<KernelParams>(m, "KernelParams")
      .def(py::init<double, double, double>(), py::arg("lambda_"),
           py::arg("a"), py::arg("c"))
      .def_readonly("lambda_", &KernelParams::lambda)
      .def_readonly("a", &KernelParams::a)
      .def_readonly("c", &KernelParams::c)
      .def("ratio", &KernelParams::ratio);

  m.def("kernel_k_const", &kernel_k_const, py::arg("x"), py::arg("y"),
        py::arg("params"));
  m.def("kernel_l_const", &kernel_l_const, py::arg("x"), py::arg("y"),
        py::arg("params"));

  py::class_<KernelField>(m, "KernelField")
      .def_static("closed_form", &KernelField::closed_form, py::arg("grid"),
                  py::arg("params"))
      .def_static("zeros", &KernelField::zeros, py::arg("grid"))
      .def_property_readonly("grid", &KernelField::grid)
      .def_property_readonly("params", &KernelField::params)
      .def("k", &KernelField::k, py::arg("i"), py::arg("j"))
      .def("l", &KernelField::l, py::arg("i"), py::arg("j"));

  py::class_<GainRow>(m, "GainRow")
      .def_readonly("lambda_", &GainRow::lambda)
      .def_readonly("samples", &GainRow::samples)
      .def_readonly("quad_weights", &GainRow::quad_weights)
      .def("apply", [](const GainRow& row, const std::vector<double>& field) {
        return row.apply(field);
      });

  m.def("gain_row", &gain_row, py::arg("params"), py::arg("grid"));
  m.def("direct_transform",
        [](const std::vector<double>& h, const KernelField& kf) {
          return direct_transform(h, kf);
        });
  m.def("inverse_transform",
        [](const std::vector<double>& h_tilde, const KernelField& kf) {
          return inverse_transform(h_tilde, kf);
        });

  py::class_<KernelResiduals>(m, "KernelResiduals")
      .def_readonly("interior", &KernelResiduals::interior)
      .def_readonly("diagonal", &KernelResiduals::diagonal)
      .def_readonly("boundary", &KernelResiduals::boundary);
  m.def("kernel_residual", &kernel_residual, py::arg("kernel_field"));

  m.def("zeta", &zeta, py::arg("p"), py::arg("tol") = 1e-10);

  py::enum_<ScheduleCase>(m, "ScheduleCase")
      .value("zeta", ScheduleCase::zeta)
      .value("prescribed", ScheduleCase::prescribed);

  py::class_<Schedule>(m, "Schedule")
      .def_readonly("kind", &Schedule::kind)
      .def_readonly("p", &Schedule::p)
      .def_readonly("horizon", &Schedule::horizon)
      .def_readonly("lambda0", &Schedule::lambda0)
      .def_readonly("t", &Schedule::t)
      .def_readonly("lambda_", &Schedule::lambda)
      .def_readonly("s", &Schedule::s)
      .def_readonly("n_max", &Schedule::n_max)
      .def_readonly("final_segment_extended", &Schedule::final_segment_extended)
      .def("segment_of", &Schedule::segment_of, py::arg("time"));

  m.def("schedule_case1", &schedule_case1, py::arg("p"), py::arg("lambda0"),
        py::arg("n_max"));
  m.def("schedule_case2", &schedule_case2, py::arg("T0"), py::arg("lambda0"),
        py::arg("n_max"));

  py::class_<RapidConvergenceReport>(m, "RapidConvergenceReport")
      .def_readonly("gamma0", &RapidConvergenceReport::gamma0)
      .def_readonly("ratio", &RapidConvergenceReport::ratio)
      .def_readonly("growth", &RapidConvergenceReport::growth)
      .def_readonly("first_satisfied", &RapidConvergenceReport::first_satisfied)
      .def_readonly("growth_increasing",
                    &RapidConvergenceReport::growth_increasing);
  m.def("check_rapid_convergence", &check_rapid_convergence,
        py::arg("schedule"), py::arg("gamma0") = 1.0);

  py::class_<Coefficients>(m, "Coefficients")
      .def(py::init([](double a, double c, double cap) {
             Coefficients co;
             co.a = a;
             co.c = c;
             co.diffusion_cap = cap;
             co.validate();
             return co;
           }),
           py::arg("a") = 1.0, py::arg("c") = 0.0,
           py::arg("diffusion_cap") = 100.0)
      .def_readwrite("a", &Coefficients::a)
      .def_readwrite("c", &Coefficients::c)
      .def_readwrite("diffusion_cap", &Coefficients::diffusion_cap);

  py::class_<DisturbanceSpec>(m, "DisturbanceSpec")
      .def(py::init<>())
      .def(py::init<DisturbanceSpec::SpaceTimeFn, DisturbanceSpec::TimeFn,
                    DisturbanceSpec::TimeFn>(),
           py::arg("in_domain"), py::arg("left"), py::arg("right"))
      .def_static("zero", &DisturbanceSpec::zero)
      .def_static("boundary_sine", &DisturbanceSpec::boundary_sine,
                  py::arg("amplitude"), py::arg("omega"))
      .def("in_domain", &DisturbanceSpec::in_domain)
      .def("left", &DisturbanceSpec::left)
      .def("right", &DisturbanceSpec::right)
      .def_property_readonly("sup_in_domain", &DisturbanceSpec::sup_in_domain)
      .def_property_readonly("sup_left", &DisturbanceSpec::sup_left)
      .def_property_readonly("sup_right", &DisturbanceSpec::sup_right);

  m.def(
      "step",
      [](const Field& state, const Grid& grid, const Coefficients& co,
         double dt, double bc_left, double bc_right,
         const std::vector<double>& forcing) {
        return step(state, grid, co, dt, bc_left, bc_right, forcing);
      },
      py::arg("state"), py::arg("grid"), py::arg("coefficients"),
      py::arg("dt"), py::arg("bc_left"), py::arg("bc_right"),
      py::arg("forcing"));
  m.def("l2_norm",
        [](const std::vector<double>& values, const Grid& grid) {
          return l2_norm(values, grid);
        });
  m.def("linf_norm", [](const std::vector<double>& values) {
    return linf_norm(values);
  });

  py::class_<OpenLoopOptions>(m, "OpenLoopOptions")
      .def(py::init<>())
      .def_readwrite("t_end", &OpenLoopOptions::t_end)
      .def_readwrite("dt", &OpenLoopOptions::dt)
      .def_readwrite("left_offset", &OpenLoopOptions::left_offset)
      .def_readwrite("right_offset", &OpenLoopOptions::right_offset)
      .def_readwrite("stride", &OpenLoopOptions::stride)
      .def_readwrite("snapshot_times", &OpenLoopOptions::snapshot_times);
  m.def("simulate_open_loop", &simulate_open_loop, py::arg("grid"),
        py::arg("coefficients"), py::arg("disturbance"), py::arg("u0"),
        py::arg("options"));

  py::class_<Trace>(m, "Trace")
      .def_readonly("times", &Trace::times)
      .def_readonly("l2_u", &Trace::l2_u)
      .def_readonly("linf_u", &Trace::linf_u)
      .def_readonly("l2_v", &Trace::l2_v)
      .def_readonly("l2_w", &Trace::l2_w)
      .def_readonly("U", &Trace::U)
      .def_readonly("V", &Trace::V)
      .def_readonly("W", &Trace::W)
      .def_readonly("d1", &Trace::d1)
      .def_readonly("step_times", &Trace::step_times)
      .def_readonly("step_U", &Trace::step_U)
      .def_readonly("segment_initial_v", &Trace::segment_initial_v)
      .def_readonly("snapshots", &Trace::snapshots)
      .def_readonly("sup_forcing", &Trace::sup_forcing)
      .def_readonly("sup_left", &Trace::sup_left)
      .def_readonly("sup_right", &Trace::sup_right)
      .def_readonly("horizon", &Trace::horizon);

  py::class_<ControllerConfig>(m, "ControllerConfig")
      .def_static("make", &ControllerConfig::make, py::arg("grid"),
                  py::arg("coefficients"), py::arg("schedule"),
                  py::arg("sigma"), py::arg("dt_base") = 1e-4,
                  py::arg("stride") = 50)
      .def_readonly("grid", &ControllerConfig::grid)
      .def_readonly("schedule", &ControllerConfig::schedule)
      .def_readonly("sigma", &ControllerConfig::sigma)
      .def_readonly("gains_v", &ControllerConfig::gains_v)
      .def_readonly("gain_w", &ControllerConfig::gain_w)
      .def_readwrite("dt_base", &ControllerConfig::dt_base)
      .def_readwrite("stride", &ControllerConfig::stride)
      .def_readwrite("end_fraction", &ControllerConfig::end_fraction)
      .def_readwrite("record_fields", &ControllerConfig::record_fields)
      .def_readwrite("snapshot_times", &ControllerConfig::snapshot_times)
      .def("segment_dt", &ControllerConfig::segment_dt, py::arg("segment"));

  m.def("control_V", &control_V, py::arg("v"), py::arg("config"),
        py::arg("time"));
  m.def("control_W", &control_W, py::arg("w"), py::arg("config"));
  m.def("closed_loop_simulate", &closed_loop_simulate, py::arg("config"),
        py::arg("disturbance"), py::arg("u0"));
  m.def("simulate_target_v", &simulate_target_v, py::arg("config"),
        py::arg("v_at_segment_start"), py::arg("segment"));
  m.def(
      "simulate_target_w",
      [](const ControllerConfig& cfg, const DisturbanceSpec& dist,
         bool record_fields) {
        return simulate_target_w(cfg, dist, TargetWOptions{record_fields});
      },
      py::arg("config"), py::arg("disturbance"),
      py::arg("record_fields") = true);
  m.def("replay_monolithic", &replay_monolithic, py::arg("config"),
        py::arg("disturbance"), py::arg("u0"), py::arg("closed_loop"));

  m.def("stampacchia_g", &stampacchia_g, py::arg("s"));
  m.def("stampacchia_G", &stampacchia_G, py::arg("s"));
  m.def("lyapunov_functional",
        [](const std::vector<double>& field, double omega, const Grid& grid) {
          return lyapunov_functional(field, omega, grid);
        });

  py::class_<LinfBoundReport>(m, "LinfBoundReport")
      .def_readonly("pass_", &LinfBoundReport::pass)
      .def_readonly("bound", &LinfBoundReport::bound)
      .def_readonly("tolerance", &LinfBoundReport::tolerance)
      .def_readonly("worst_margin", &LinfBoundReport::worst_margin)
      .def_readonly("worst_time", &LinfBoundReport::worst_time);
  m.def("check_linf_bound", &check_linf_bound, py::arg("target_w"),
        py::arg("sup_forcing"), py::arg("sup_left"), py::arg("sup_right"),
        py::arg("sigma"), py::arg("tol_rel") = 0.05);

  py::class_<LyapunovReport>(m, "LyapunovReport")
      .def_readonly("pass_", &LyapunovReport::pass)
      .def_readonly("omega", &LyapunovReport::omega)
      .def_readonly("max_value", &LyapunovReport::max_value)
      .def_readonly("tolerance", &LyapunovReport::tolerance);
  m.def("check_lyapunov_monotone", &check_lyapunov_monotone,
        py::arg("target_w"), py::arg("grid"), py::arg("omega"),
        py::arg("tolerance") = 1e-6);

  py::class_<FtsReport>(m, "FtsReport")
      .def_readonly("initial_norm", &FtsReport::initial_norm)
      .def_readonly("terminal_norm", &FtsReport::terminal_norm)
      .def_readonly("decay_ratio", &FtsReport::decay_ratio)
      .def_readonly("epsilon", &FtsReport::epsilon);
  m.def("fts_metric", &fts_metric, py::arg("trace"), py::arg("epsilon"));

  py::class_<IssReport>(m, "IssReport")
      .def_readonly("sup_norm_window", &IssReport::sup_norm_window)
      .def_readonly("sup_forcing", &IssReport::sup_forcing)
      .def_readonly("sup_left", &IssReport::sup_left)
      .def_readonly("sup_right", &IssReport::sup_right)
      .def_readonly("fitted_gain", &IssReport::fitted_gain)
      .def_readonly("window_begin", &IssReport::window_begin)
      .def_readonly("window_end", &IssReport::window_end);
  m.def("iss_metric", &iss_metric, py::arg("trace"), py::arg("window_begin"),
        py::arg("window_end"), py::arg("sup_forcing"), py::arg("sup_left"),
        py::arg("sup_right"));
  m.def("max_relative_field_gap", &max_relative_field_gap, py::arg("a"),
        py::arg("b"), py::arg("grid"));

  py::enum_<ExperimentKind>(m, "ExperimentKind")
      .value("zeta_horizon", ExperimentKind::zeta_horizon)
      .value("prescribed_horizon", ExperimentKind::prescribed_horizon)
      .value("open_loop", ExperimentKind::open_loop);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("kind", &ExperimentConfig::kind)
      .def_readwrite("p", &ExperimentConfig::p)
      .def_readwrite("horizon", &ExperimentConfig::horizon)
      .def_readwrite("lambda0", &ExperimentConfig::lambda0)
      .def_readwrite("sigma", &ExperimentConfig::sigma)
      .def_readwrite("n_max", &ExperimentConfig::n_max)
      .def_readwrite("a", &ExperimentConfig::a)
      .def_readwrite("c", &ExperimentConfig::c)
      .def_readwrite("grid_n", &ExperimentConfig::grid_n)
      .def_readwrite("dt_base", &ExperimentConfig::dt_base)
      .def_readwrite("amplitude", &ExperimentConfig::amplitude)
      .def_readwrite("init_scale", &ExperimentConfig::init_scale)
      .def_readwrite("gamma0", &ExperimentConfig::gamma0)
      .def_readwrite("stride", &ExperimentConfig::stride)
      .def_readwrite("t_end", &ExperimentConfig::t_end)
      .def_readwrite("out_dir", &ExperimentConfig::out_dir)
      .def_readwrite("snapshot_times", &ExperimentConfig::snapshot_times)
      .def("validate", &ExperimentConfig::validate);

  m.def("parse_config_file", &parse_config_file, py::arg("path"));

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("config", &ExperimentResult::config)
      .def_readonly("schedule", &ExperimentResult::schedule)
      .def_readonly("trace", &ExperimentResult::trace)
      .def_readonly("target_w", &ExperimentResult::target_w)
      .def_readonly("fts", &ExperimentResult::fts)
      .def_readonly("iss", &ExperimentResult::iss)
      .def_readonly("linf_bound", &ExperimentResult::linf_bound)
      .def_readonly("lyapunov", &ExperimentResult::lyapunov)
      .def_readonly("segment_decay_margin",
                    &ExperimentResult::segment_decay_margin)
      .def_readonly("superposition_max_rel",
                    &ExperimentResult::superposition_max_rel)
      .def_readonly("open_loop_growth", &ExperimentResult::open_loop_growth);

  m.def("run_experiment", &run_experiment, py::arg("config"));
  m.def("write_artifacts", &write_artifacts, py::arg("result"),
        py::arg("out_dir"));
  m.def("preset_names", []() { return preset_names(); });
  m.def("preset_config", &preset_config, py::arg("name"));
  m.def("run_preset", &run_preset, py::arg("name"), py::arg("out_dir"));

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("value", &SweepRow::value)
      .def_readonly("status", &SweepRow::status)
      .def_readonly("initial_l2", &SweepRow::initial_l2)
      .def_readonly("terminal_l2", &SweepRow::terminal_l2)
      .def_readonly("fts_ratio", &SweepRow::fts_ratio)
      .def_readonly("iss_window_sup", &SweepRow::iss_window_sup)
      .def_readonly("fitted_gain", &SweepRow::fitted_gain);
  m.def("run_sweep", &run_sweep, py::arg("base"), py::arg("axis"),
        py::arg("values"));
}
