#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fjhawkes/config.hpp"
#include "fjhawkes/equilibrium.hpp"
#include "fjhawkes/errors.hpp"
#include "fjhawkes/experiment.hpp"
#include "fjhawkes/linalg.hpp"
#include "fjhawkes/model.hpp"
#include "fjhawkes/rng.hpp"
#include "fjhawkes/simulate.hpp"
#include "fjhawkes/stability.hpp"
#include "fjhawkes/svg.hpp"
#include "fjhawkes/topology.hpp"

namespace py = pybind11;
using namespace fjhawkes;

namespace {

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  return Matrix::from_rows(rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "coupled trust-event network dynamics";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "FjhawkesError");

  py::class_<Matrix>(m, "Matrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_static("identity", &Matrix::identity)
      .def_static("diagonal", &Matrix::diagonal)
      .def_property_readonly("shape",
                             [](const Matrix& a) { return py::make_tuple(a.rows(), a.cols()); })
      .def("to_rows", &Matrix::to_rows)
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; });

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def_readwrite("mu", &ModelParams::mu)
      .def_readwrite("alpha", &ModelParams::alpha)
      .def_readwrite("beta", &ModelParams::beta)
      .def_readwrite("gamma", &ModelParams::gamma);

  py::class_<Network>(m, "Network")
      .def(py::init<>())
      .def_readwrite("n", &Network::n)
      .def_readwrite("w", &Network::w)
      .def_readwrite("a", &Network::a)
      .def_readwrite("b", &Network::b);

  py::class_<SystemState>(m, "SystemState")
      .def(py::init<>())
      .def_readwrite("t", &SystemState::t)
      .def_readwrite("trust", &SystemState::trust)
      .def_readwrite("events", &SystemState::events)
      .def_readwrite("memory", &SystemState::memory);

  py::class_<InitialConditions>(m, "InitialConditions")
      .def(py::init<>())
      .def_static("make", &InitialConditions::make, py::arg("t1"), py::arg("s0"),
                  py::arg("t0") = std::vector<double>{}, py::arg("h0") = std::vector<double>{})
      .def_readwrite("t0", &InitialConditions::t0)
      .def_readwrite("t1", &InitialConditions::t1)
      .def_readwrite("s0", &InitialConditions::s0)
      .def_readwrite("h0", &InitialConditions::h0);

  py::class_<Diagnostic>(m, "Diagnostic")
      .def_readonly("where", &Diagnostic::where)
      .def_readonly("message", &Diagnostic::message);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("errors", &ValidationReport::errors)
      .def_readonly("warnings", &ValidationReport::warnings)
      .def("ok", &ValidationReport::ok)
      .def("__str__", &ValidationReport::to_string);

  py::enum_<Verdict>(m, "Verdict")
      .value("converged", Verdict::converged)
      .value("oscillating", Verdict::oscillating)
      .value("diverged", Verdict::diverged)
      .value("max_steps_reached", Verdict::max_steps_reached);

  py::class_<RunSettings>(m, "RunSettings")
      .def(py::init<>())
      .def_readwrite("max_steps", &RunSettings::max_steps)
      .def_readwrite("conv_tol", &RunSettings::conv_tol)
      .def_readwrite("div_threshold", &RunSettings::div_threshold);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("states", &Trajectory::states)
      .def_readonly("verdict", &Trajectory::verdict)
      .def_readonly("converged_at", &Trajectory::converged_at)
      .def_readonly("final_residual", &Trajectory::final_residual);

  py::class_<EquilibriumSolution>(m, "EquilibriumSolution")
      .def_readonly("t_star", &EquilibriumSolution::t_star)
      .def_readonly("s_star", &EquilibriumSolution::s_star)
      .def_readonly("x", &EquilibriumSolution::x)
      .def_readonly("y", &EquilibriumSolution::y)
      .def_readonly("u", &EquilibriumSolution::u)
      .def_readonly("v", &EquilibriumSolution::v)
      .def_readonly("cond_trust", &EquilibriumSolution::cond_trust)
      .def_readonly("cond_events", &EquilibriumSolution::cond_events)
      .def_readonly("fixed_point_residual", &EquilibriumSolution::fixed_point_residual)
      .def_readonly("valid", &EquilibriumSolution::valid);

  py::class_<ScalarEquilibrium>(m, "ScalarEquilibrium")
      .def_readonly("t_star", &ScalarEquilibrium::t_star)
      .def_readonly("s_star", &ScalarEquilibrium::s_star);

  py::class_<SpectrumReport>(m, "SpectrumReport")
      .def_readonly("eigenvalues", &SpectrumReport::eigenvalues)
      .def_readonly("rho", &SpectrumReport::rho)
      .def_readonly("stable", &SpectrumReport::stable)
      .def_readonly("critical", &SpectrumReport::critical)
      .def_readonly("margin", &SpectrumReport::margin)
      .def_readonly("mode_roots", &SpectrumReport::mode_roots);

  py::class_<BoundaryResult>(m, "BoundaryResult")
      .def_readonly("parameter", &BoundaryResult::parameter)
      .def_readonly("critical_value", &BoundaryResult::critical_value)
      .def_readonly("bracket", &BoundaryResult::bracket)
      .def_readonly("rho_at_critical", &BoundaryResult::rho_at_critical)
      .def_readonly("iterations", &BoundaryResult::iterations);

  py::enum_<TopologyKind>(m, "TopologyKind")
      .value("random", TopologyKind::random)
      .value("echo_chamber", TopologyKind::echo_chamber)
      .value("star", TopologyKind::star);

  py::enum_<StreamId>(m, "StreamId")
      .value("influence", StreamId::influence)
      .value("susceptibility", StreamId::susceptibility)
      .value("reactivity", StreamId::reactivity)
      .value("trust0", StreamId::trust0)
      .value("trust1", StreamId::trust1);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t, StreamId>(), py::arg("seed"), py::arg("stream"))
      .def("next_u64", &RngStream::next_u64)
      .def("next_unit", &RngStream::next_unit)
      .def("next_in", &RngStream::next_in)
      .def_static("algorithm", &RngStream::algorithm);

  py::class_<EchoOptions>(m, "EchoOptions")
      .def(py::init<>())
      .def_readwrite("clusters", &EchoOptions::clusters)
      .def_readwrite("intra", &EchoOptions::intra)
      .def_readwrite("inter", &EchoOptions::inter);

  py::class_<StarOptions>(m, "StarOptions")
      .def(py::init<>())
      .def_readwrite("hub", &StarOptions::hub)
      .def_readwrite("hub_weight", &StarOptions::hub_weight);

  py::class_<TopologySpec>(m, "TopologySpec")
      .def(py::init<>())
      .def_readwrite("kind", &TopologySpec::kind)
      .def_readwrite("n", &TopologySpec::n)
      .def_readwrite("seed", &TopologySpec::seed)
      .def_readwrite("echo", &TopologySpec::echo)
      .def_readwrite("star", &TopologySpec::star);

  py::class_<System>(m, "System")
      .def_readonly("params", &System::params)
      .def_readonly("net", &System::net)
      .def_readonly("init", &System::init)
      .def_readonly("topology", &System::topology);

  py::class_<ScalarOrVector>(m, "ScalarOrVector")
      .def(py::init([](double v) { return ScalarOrVector{v, {}}; }))
      .def(py::init([](std::vector<double> v) { return ScalarOrVector{0.0, std::move(v)}; }))
      .def_readwrite("value", &ScalarOrVector::value)
      .def_readwrite("values", &ScalarOrVector::values)
      .def("materialize", &ScalarOrVector::materialize);

  py::class_<RangeSpec>(m, "RangeSpec")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_readwrite("lo", &RangeSpec::lo)
      .def_readwrite("hi", &RangeSpec::hi);

  py::class_<ScanSpec>(m, "ScanSpec")
      .def(py::init<>())
      .def_readwrite("parameter", &ScanSpec::parameter)
      .def_readwrite("lo", &ScanSpec::lo)
      .def_readwrite("hi", &ScanSpec::hi)
      .def_readwrite("count", &ScanSpec::count);

  py::class_<OutputSpec>(m, "OutputSpec")
      .def(py::init<>())
      .def_readwrite("directory", &OutputSpec::directory)
      .def_readwrite("csv", &OutputSpec::csv)
      .def_readwrite("svg", &OutputSpec::svg);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("n", &ExperimentConfig::n)
      .def_readwrite("alpha", &ExperimentConfig::alpha)
      .def_readwrite("beta", &ExperimentConfig::beta)
      .def_readwrite("gamma", &ExperimentConfig::gamma)
      .def_readwrite("mu", &ExperimentConfig::mu)
      .def_readwrite("s0", &ExperimentConfig::s0)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("topology", &ExperimentConfig::topology)
      .def_readwrite("a_range", &ExperimentConfig::a_range)
      .def_readwrite("b_range", &ExperimentConfig::b_range)
      .def_readwrite("t0_range", &ExperimentConfig::t0_range)
      .def_readwrite("t1_range", &ExperimentConfig::t1_range)
      .def_readwrite("run", &ExperimentConfig::run)
      .def_readwrite("scan", &ExperimentConfig::scan)
      .def_readwrite("output", &ExperimentConfig::output);

  py::class_<ScanRow>(m, "ScanRow")
      .def_readonly("value", &ScanRow::value)
      .def_readonly("rho", &ScanRow::rho)
      .def_readonly("stable", &ScanRow::stable)
      .def_readonly("verdict", &ScanRow::verdict)
      .def_readonly("mean_trust_final", &ScanRow::mean_trust_final)
      .def_readonly("mean_events_final", &ScanRow::mean_events_final)
      .def_readonly("converged_at", &ScanRow::converged_at)
      .def_readonly("note", &ScanRow::note);

  py::class_<GroupSeries>(m, "GroupSeries")
      .def_readonly("name", &GroupSeries::name)
      .def_readonly("members", &GroupSeries::members)
      .def_readonly("mean_trust", &GroupSeries::mean_trust);

  py::class_<TopologyReport>(m, "TopologyReport")
      .def_readonly("kind", &TopologyReport::kind)
      .def_readonly("name", &TopologyReport::name)
      .def_readonly("rho", &TopologyReport::rho)
      .def_readonly("stable", &TopologyReport::stable)
      .def_readonly("verdict", &TopologyReport::verdict)
      .def_readonly("trust_initial", &TopologyReport::trust_initial)
      .def_readonly("trust_final", &TopologyReport::trust_final)
      .def_readonly("events_final", &TopologyReport::events_final)
      .def_readonly("groups", &TopologyReport::groups)
      .def_readonly("alpha_star", &TopologyReport::alpha_star)
      .def_readonly("beta_star", &TopologyReport::beta_star)
      .def_readonly("gamma_star", &TopologyReport::gamma_star);

  // dense kernels
  m.def("solve_linear", &solve_linear, py::arg("m"), py::arg("rhs"));
  m.def("invert", [](const Matrix& a) {
    const InverseResult r = invert(a);
    return py::make_tuple(r.inverse, r.condition, r.ill_conditioned);
  });
  m.def("eig_general", &eig_general, py::arg("m"));
  m.def("spectral_radius", &spectral_radius, py::arg("m"));
  m.def("row_normalize", &row_normalize, py::arg("m"), py::arg("nonneg") = true);

  // model
  m.def("validate", &validate, py::arg("net"), py::arg("params"), py::arg("init"));
  m.def("step", &step, py::arg("state"), py::arg("params"), py::arg("net"), py::arg("init"));
  m.def("event_intensity_direct", &event_intensity_direct, py::arg("trust_hist"),
        py::arg("event_hist"), py::arg("params"), py::arg("t"));
  m.def("run", &run, py::arg("init"), py::arg("params"), py::arg("net"),
        py::arg("settings") = RunSettings{});

  // equilibrium
  m.def("solve", &solve, py::arg("params"), py::arg("net"), py::arg("t1"));
  m.def("solve_scalar", &solve_scalar, py::arg("a"), py::arg("w"), py::arg("b"), py::arg("t1"),
        py::arg("params"));
  m.def("residual", &residual, py::arg("sol"), py::arg("params"), py::arg("net"),
        py::arg("init"));

  // stability
  m.def("jacobian", &jacobian, py::arg("params"), py::arg("net"));
  m.def("jacobian_redundant", &jacobian_redundant, py::arg("params"), py::arg("net"));
  m.def("spectrum", &spectrum, py::arg("params"), py::arg("net"));
  m.def("decoupled_roots", &decoupled_roots, py::arg("lambda_k"), py::arg("b_k"),
        py::arg("params"));
  m.def("nonlinear_residual", &nonlinear_residual, py::arg("z"), py::arg("params"),
        py::arg("net"));
  m.def("find_boundary", &find_boundary, py::arg("parameter"), py::arg("params"), py::arg("net"),
        py::arg("lo"), py::arg("hi"));

  // topology
  m.def("generate_w", py::overload_cast<const TopologySpec&>(&generate_w), py::arg("spec"));
  m.def("sample_uniform", &sample_uniform, py::arg("n"), py::arg("range"), py::arg("rng"));
  m.def("sample_a", &sample_a, py::arg("n"), py::arg("range"), py::arg("rng"));
  m.def("sample_b", &sample_b, py::arg("n"), py::arg("range"), py::arg("rng"));
  m.def("cluster_of", &cluster_of, py::arg("spec"));

  // experiments
  m.def("load_config", &load_config, py::arg("path"));
  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("config_to_json", &config_to_json, py::arg("cfg"));
  m.def("save_config", &save_config, py::arg("cfg"), py::arg("path"));
  m.def("materialize", &materialize, py::arg("cfg"));
  m.def("sensitivity_scan", &sensitivity_scan, py::arg("cfg"));
  m.def("topology_compare", &topology_compare, py::arg("cfg"));
}
