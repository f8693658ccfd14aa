#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "hhmc/bounds.hpp"
#include "hhmc/convexity.hpp"
#include "hhmc/errors.hpp"
#include "hhmc/fn1d.hpp"
#include "hhmc/json_io.hpp"
#include "hhmc/means.hpp"
#include "hhmc/quadrature.hpp"
#include "hhmc/sweep.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace hhmc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numerical checker for endpoint-weighted integral inequalities under "
              "m-convexity: deviation functional, identity residual, the three "
              "derivative bounds and their midpoint forms, a sampled m-convexity "
              "oracle, special means, and seeded sweeps.";

    py::enum_<FnKind>(m, "FnKind")
        .value("Power", FnKind::Power)
        .value("ScaledPower", FnKind::ScaledPower)
        .value("Polynomial", FnKind::Polynomial)
        .value("Exponential", FnKind::Exponential)
        .value("Constant", FnKind::Constant);

    py::class_<Fn1D>(m, "Fn1D")
        .def("__call__", &Fn1D::eval, py::arg("u"))
        .def("eval", &Fn1D::eval, py::arg("u"))
        .def("deriv", &Fn1D::deriv, py::arg("u"))
        .def_property_readonly("kind", &Fn1D::kind)
        .def_property_readonly("params", &Fn1D::params)
        .def_property_readonly("domain_hi", &Fn1D::domain_hi)
        .def_property_readonly("label", &Fn1D::label)
        .def("spec_json", [](const Fn1D& f) { return fn_spec_to_json(f).dump(); })
        .def("__repr__",
             [](const Fn1D& f) { return "<Fn1D " + f.label() + ">"; });

    m.def("make_function", &make_function, py::arg("kind"), py::arg("params"),
          py::arg("domain_hi"));
    m.def("fn_from_json",
          [](const std::string& spec) { return fn_from_json(nlohmann::json::parse(spec)); },
          py::arg("spec"), "Build a function from a JSON spec string, e.g. "
          "'{\"kind\":\"power\",\"n\":3,\"domain_hi\":4.0}'.");
    m.def("power_fn", &power_fn, py::arg("n"), py::arg("domain_hi"));
    m.def("scaled_power_fn", &scaled_power_fn, py::arg("c"), py::arg("n"), py::arg("domain_hi"));
    m.def("polynomial_fn", &polynomial_fn, py::arg("coeffs"), py::arg("domain_hi"));
    m.def("exponential_fn", &exponential_fn, py::arg("domain_hi"));
    m.def("constant_fn", &constant_fn, py::arg("c"), py::arg("domain_hi"));

    py::class_<QuadratureEstimate>(m, "QuadratureEstimate")
        .def_readonly("value", &QuadratureEstimate::value)
        .def_readonly("abs_error_estimate", &QuadratureEstimate::abs_error_estimate)
        .def_readonly("evaluations", &QuadratureEstimate::evaluations)
        .def_readonly("converged", &QuadratureEstimate::converged);

    m.def("integrate", &integrate, py::arg("g"), py::arg("lo"), py::arg("hi"),
          py::arg("tol") = 1e-10, py::arg("max_depth") = 40,
          "Adaptive Simpson integration of a scalar callable.");

    py::enum_<ConvexityTarget>(m, "ConvexityTarget")
        .value("F", ConvexityTarget::F)
        .value("AbsDeriv", ConvexityTarget::AbsDeriv)
        .value("AbsDerivPowQ", ConvexityTarget::AbsDerivPowQ);

    py::class_<ConvexityWitness>(m, "ConvexityWitness")
        .def_readonly("x", &ConvexityWitness::x)
        .def_readonly("y", &ConvexityWitness::y)
        .def_readonly("t", &ConvexityWitness::t)
        .def_readonly("lhs", &ConvexityWitness::lhs)
        .def_readonly("rhs", &ConvexityWitness::rhs)
        .def_readonly("gap", &ConvexityWitness::gap);

    py::class_<ConvexityReport>(m, "ConvexityReport")
        .def_readonly("holds", &ConvexityReport::holds)
        .def_readonly("witness", &ConvexityReport::witness)
        .def_readonly("samples_checked", &ConvexityReport::samples_checked)
        .def_readonly("m", &ConvexityReport::m)
        .def_readonly("target", &ConvexityReport::target)
        .def_readonly("q", &ConvexityReport::q)
        .def("to_json", [](const ConvexityReport& r) { return dump_report(to_json(r)); });

    m.def("check_m_convex", &check_m_convex, py::arg("f"), py::arg("m"), py::arg("hi"),
          py::arg("grid_n") = 48, py::arg("random_n") = 10000, py::arg("seed") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("check_abs_deriv_m_convex", &check_abs_deriv_m_convex, py::arg("f"), py::arg("q"),
          py::arg("m"), py::arg("hi"), py::arg("grid_n") = 48, py::arg("random_n") = 10000,
          py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());

    m.def("lhs_general", &lhs_general, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x"),
          py::arg("tol") = 1e-10);
    m.def("lemma1_rhs", &lemma1_rhs, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x"),
          py::arg("tol") = 1e-10);
    m.def("lemma1_residual", &lemma1_residual, py::arg("f"), py::arg("a"), py::arg("b"),
          py::arg("x"), py::arg("tol") = 1e-10);
    m.def("bound_thm3", &bound_thm3, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x"),
          py::arg("m"));
    m.def("bound_thm4", &bound_thm4, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x"),
          py::arg("m"), py::arg("q"));
    m.def("bound_thm5", &bound_thm5, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x"),
          py::arg("m"), py::arg("q"));
    m.def("bound_cor1", &bound_cor1, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("m"));
    m.def("bound_cor2", &bound_cor2, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("m"),
          py::arg("q"), py::arg("simplified") = false);
    m.def("bound_cor3", &bound_cor3, py::arg("f"), py::arg("a"), py::arg("b"), py::arg("m"),
          py::arg("q"));
    m.def("classical_hh_gap",
          [](const Fn1D& f, double a, double b, double tol) {
              const ClassicalGap g = classical_hh_gap(f, a, b, tol);
              return py::make_tuple(g.left_gap, g.right_gap);
          },
          py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10,
          "Returns (left_gap, right_gap) of the classical two-sided inequality.");

    py::class_<HHReport>(m, "HHReport")
        .def_readonly("lhs_abs", &HHReport::lhs_abs)
        .def_readonly("bound_t3", &HHReport::bound_t3)
        .def_readonly("bound_t4", &HHReport::bound_t4)
        .def_readonly("bound_t5", &HHReport::bound_t5)
        .def_readonly("lemma1_residual", &HHReport::lemma1_residual)
        .def_readonly("classical_left_gap", &HHReport::classical_left_gap)
        .def_readonly("classical_right_gap", &HHReport::classical_right_gap)
        .def_readonly("tightness", &HHReport::tightness)
        .def_readonly("precondition_t3", &HHReport::precondition_t3)
        .def_readonly("precondition_t45", &HHReport::precondition_t45)
        .def_readonly("vacuous_bounds", &HHReport::vacuous_bounds)
        .def_readonly("quadrature_converged", &HHReport::quadrature_converged)
        .def_readonly("errors", &HHReport::errors)
        .def("to_json", [](const HHReport& r) { return dump_report(to_json(r)); })
        .def("to_csv", &hh_report_csv);

    m.def("full_report",
          [](const Fn1D& f, double a, double b, double x, double m_, double q, double tol,
             int grid_n, long random_n, std::uint64_t seed) {
              return full_report(f, {a, b, x, m_, q}, tol, {grid_n, random_n}, seed);
          },
          py::arg("f"), py::arg("a"), py::arg("b"), py::arg("x"), py::arg("m") = 1.0,
          py::arg("q") = 1.0, py::arg("tol") = 1e-10, py::arg("grid_n") = 48,
          py::arg("random_n") = 10000, py::arg("seed") = 0,
          py::call_guard<py::gil_scoped_release>());

    m.def("inequality_violated", &inequality_violated, py::arg("lhs_abs"), py::arg("bound"));

    m.def("arithmetic_mean", &arithmetic_mean, py::arg("alpha"), py::arg("beta"));
    m.def("log_mean", &log_mean, py::arg("alpha"), py::arg("beta"));
    m.def("gen_log_mean", &gen_log_mean, py::arg("alpha"), py::arg("beta"), py::arg("n"));

    py::class_<PropCheck>(m, "PropCheck")
        .def_readonly("lhs", &PropCheck::lhs)
        .def_readonly("rhs", &PropCheck::rhs)
        .def_readonly("holds", &PropCheck::holds);

    m.def("prop1_check",
          [](double a, double b, int n, double m_) {
              return prop1_check({a, b, n, m_, 2.0});
          },
          py::arg("a"), py::arg("b"), py::arg("n"), py::arg("m") = 1.0);
    m.def("prop2_check",
          [](double a, double b, int n, double m_, double q) {
              return prop2_check({a, b, n, m_, q});
          },
          py::arg("a"), py::arg("b"), py::arg("n"), py::arg("m") = 1.0, py::arg("q") = 2.0);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("cases_generated", &SweepReport::cases_generated)
        .def_readonly("cases_run", &SweepReport::cases_run)
        .def_readonly("cases_filtered_precondition", &SweepReport::cases_filtered_precondition)
        .def_readonly("cases_filtered_domain", &SweepReport::cases_filtered_domain)
        .def_readonly("cases_error", &SweepReport::cases_error)
        .def_readonly("max_lemma1_residual", &SweepReport::max_lemma1_residual)
        .def_property_readonly("passed", &SweepReport::pass)
        .def_property_readonly("n_violations",
                               [](const SweepReport& r) { return r.violations.size(); })
        .def("to_json", [](const SweepReport& r) { return dump_report(to_json(r)); })
        .def("to_csv", &sweep_rows_csv);

    m.def("run_sweep_json",
          [](const std::string& config, int threads) {
              SweepConfig cfg = sweep_config_from_json(nlohmann::json::parse(config));
              if (threads > 0)
                  cfg.threads = threads;
              return run_sweep(cfg);
          },
          py::arg("config"), py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>(),
          "Run a sweep from a JSON config string; threads > 0 overrides the config.");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
