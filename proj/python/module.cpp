#include "fraclap/estimates.hpp"
#include "fraclap/fraclap.hpp"
#include "fraclap/phasemap.hpp"
#include "fraclap/recursion.hpp"
#include "fraclap/serialize.hpp"
#include "fraclap/verifier.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fraclap;

namespace {

RadialProfile profile_from_json_str(const std::string& text) {
    return RadialProfile::from_json(nlohmann::json::parse(text));
}

} // namespace

PYBIND11_MODULE(_fraclap, m) {
    m.doc() = "Fractional Laplacian of radial profiles and supersolution certification";

    py::register_exception<Error>(m, "FraclapError");

    py::class_<ProblemParams>(m, "ProblemParams")
        .def(py::init([](int N, double s, double p, double q, double lam, double R0) {
                 return ProblemParams{N, s, p, q, lam, R0};
             }),
             py::arg("N"), py::arg("s"), py::arg("p"), py::arg("q"), py::arg("lambda_") = 1.0,
             py::arg("R0") = 1.0)
        .def_readonly("N", &ProblemParams::N)
        .def_readonly("s", &ProblemParams::s)
        .def_readonly("p", &ProblemParams::p)
        .def_readonly("q", &ProblemParams::q)
        .def_readonly("lambda_", &ProblemParams::lambda)
        .def_readonly("R0", &ProblemParams::R0);

    m.def("validate_params", &validate_params, py::arg("params"));
    m.def("critical_p", &critical_p);
    m.def("q1_threshold", &q1_threshold);
    m.def("q2_threshold", &q2_threshold);

    py::class_<Annulus>(m, "Annulus")
        .def(py::init<double, double>(), py::arg("r_inner"), py::arg("r_outer"))
        .def_readonly("r_inner", &Annulus::r_inner)
        .def_readonly("r_outer", &Annulus::r_outer);

    py::class_<Tolerance>(m, "Tolerance")
        .def(py::init([](double rel, double abs, int maxsub) {
                 return Tolerance{rel, abs, maxsub};
             }),
             py::arg("rel_tol") = 1e-8, py::arg("abs_tol") = 1e-12,
             py::arg("max_subdivisions") = 40)
        .def_readonly("rel_tol", &Tolerance::rel_tol)
        .def_readonly("abs_tol", &Tolerance::abs_tol);

    py::class_<RadialProfile>(m, "RadialProfile")
        .def("value", &RadialProfile::value, py::arg("r"))
        .def("derivative", &RadialProfile::derivative, py::arg("r"))
        .def("second_derivative", &RadialProfile::second_derivative, py::arg("r"))
        .def("gradient_norm", &RadialProfile::gradient_norm, py::arg("r"))
        .def_property_readonly("sigma_eff", &RadialProfile::sigma_eff)
        .def_property_readonly("log_corrected", &RadialProfile::has_log_correction)
        .def_property_readonly("corner_radii", &RadialProfile::corner_radii)
        .def_property_readonly("monotonicity_radius", &RadialProfile::monotonicity_radius)
        .def("amplified", &RadialProfile::amplified, py::arg("amp"))
        .def("to_json", [](const RadialProfile& p) { return p.to_json().dump(); })
        .def_static("from_json", &profile_from_json_str, py::arg("text"))
        .def_static("power_cap", &RadialProfile::power_cap, py::arg("sigma"), py::arg("eps"),
                    py::arg("amp"))
        .def_static("smooth_bump", &RadialProfile::smooth_bump, py::arg("sigma"))
        .def_static("truncated_fundamental", &RadialProfile::truncated_fundamental, py::arg("N"),
                    py::arg("s"), py::arg("Rbar"), py::arg("Rcap") = std::nullopt)
        .def_static("log_critical", &RadialProfile::log_critical, py::arg("N"), py::arg("s"),
                    py::arg("eps_cap") = std::nullopt)
        .def_static("scaled", &RadialProfile::scaled, py::arg("base"), py::arg("R"), py::arg("R0"))
        .def_static("supercritical", &RadialProfile::supercritical, py::arg("beta"),
                    py::arg("amp"), py::arg("params"))
        .def_static("constant", &RadialProfile::constant, py::arg("c"));

    m.def("normalization_constant", &normalization_constant, py::arg("N"), py::arg("s"));
    m.def("gamma_sigma", &gamma_sigma, py::arg("sigma"), py::arg("N"), py::arg("s"));
    m.def("eval_power_exact", &eval_power_exact, py::arg("sigma"), py::arg("r"), py::arg("N"),
          py::arg("s"));

    py::class_<FracLapResult>(m, "FracLapResult")
        .def_readonly("value", &FracLapResult::value)
        .def_readonly("err_estimate", &FracLapResult::err_estimate)
        .def_readonly("n_evaluations", &FracLapResult::n_evaluations)
        .def_readonly("converged", &FracLapResult::converged)
        .def_property_readonly("scheme",
                               [](const FracLapResult& r) { return scheme_name(r.scheme); });

    m.def("eval_radial", &eval_radial, py::arg("profile"), py::arg("N"), py::arg("s"),
          py::arg("r"), py::arg("tol") = Tolerance{});
    m.def("eval_radial_direct", &eval_radial_direct, py::arg("profile"), py::arg("N"),
          py::arg("s"), py::arg("r"), py::arg("tol") = Tolerance{});

    py::class_<verifier::Certificate>(m, "Certificate")
        .def_readonly("r_inner", &verifier::Certificate::r_inner)
        .def_readonly("r_outer", &verifier::Certificate::r_outer)
        .def_readonly("n_grid", &verifier::Certificate::n_grid)
        .def_readonly("worst_radius", &verifier::Certificate::worst_radius)
        .def_readonly("worst_residual", &verifier::Certificate::worst_residual)
        .def_readonly("worst_err", &verifier::Certificate::worst_err)
        .def_property_readonly("status", [](const verifier::Certificate& c) {
            return verifier::cert_status_name(c.status);
        });

    m.def(
        "certify_supersolution",
        [](const ProblemParams& params, const RadialProfile& u, const Annulus& annulus,
           int n_grid, const Tolerance& tol) {
            if (n_grid <= 0) n_grid = verifier::default_n_grid(annulus);
            return verifier::certify_sign(verifier::problem_spec(params), u, annulus, n_grid,
                                          verifier::RequiredSign::NonNegative, tol);
        },
        py::arg("params"), py::arg("profile"), py::arg("annulus"), py::arg("n_grid") = 0,
        py::arg("tol") = Tolerance{1e-6, 1e-30, 40});
    m.def(
        "certify_subsolution_homogeneous",
        [](int N, double s, double q, const RadialProfile& u, const Annulus& annulus, int n_grid,
           const Tolerance& tol) {
            if (n_grid <= 0) n_grid = verifier::default_n_grid(annulus);
            return verifier::certify_sign(verifier::homogeneous_spec(N, s, q), u, annulus, n_grid,
                                          verifier::RequiredSign::NonPositive, tol);
        },
        py::arg("N"), py::arg("s"), py::arg("q"), py::arg("profile"), py::arg("annulus"),
        py::arg("n_grid") = 0, py::arg("tol") = Tolerance{1e-6, 1e-30, 40});

    m.def(
        "residual",
        [](const ProblemParams& params, const RadialProfile& u, double r, const Tolerance& tol) {
            const auto res = verifier::residual(params, u, r, tol);
            return py::make_tuple(res.value, res.err);
        },
        py::arg("params"), py::arg("profile"), py::arg("r"),
        py::arg("tol") = Tolerance{1e-6, 1e-30, 40});

    m.def("min_annulus", &verifier::min_annulus, py::arg("profile"), py::arg("annulus"),
          py::arg("n_grid"));

    py::class_<verifier::Threshold>(m, "Threshold")
        .def_readonly("value", &verifier::Threshold::value)
        .def_readonly("bracket_lo", &verifier::Threshold::bracket_lo)
        .def_readonly("bracket_hi", &verifier::Threshold::bracket_hi)
        .def_readonly("certified_at", &verifier::Threshold::certified_at)
        .def_readonly("certificate", &verifier::Threshold::certificate)
        .def_property_readonly("kind", [](const verifier::Threshold& t) {
            return verifier::threshold_kind_name(t.kind);
        });

    m.def(
        "estimate_lambda0",
        [](const std::string& name, const ProblemParams& base, const Annulus& annulus,
           double bisect_tol) {
            verifier::ExistenceCase c;
            if (name == "iii") c = verifier::ExistenceCase::III;
            else if (name == "iv") c = verifier::ExistenceCase::IV;
            else if (name == "v") c = verifier::ExistenceCase::V;
            else if (name == "vi") c = verifier::ExistenceCase::VI;
            else throw Error(Errc::precondition, "case must be one of iii, iv, v, vi");
            return verifier::estimate_lambda0(c, base, annulus, bisect_tol);
        },
        py::arg("case_name"), py::arg("params"), py::arg("annulus"),
        py::arg("bisect_tol") = 0.05);
    m.def(
        "estimate_R0_threshold",
        [](const std::string& name, const ProblemParams& base, double bisect_tol, double k) {
            const auto c = name == "ii" ? verifier::ExistenceCase::II : verifier::ExistenceCase::V;
            return verifier::estimate_R0_threshold(c, base, bisect_tol, 0, {1e-6, 1e-30, 40}, k);
        },
        py::arg("case_name"), py::arg("params"), py::arg("bisect_tol") = 0.05, py::arg("k") = 1.0);
    m.def(
        "search_amplitude",
        [](const std::function<RadialProfile(double)>& family, const ProblemParams& params,
           bool homogeneous, const Annulus& annulus, bool supersolution, double bisect_tol,
           double a_start) {
            const auto spec = homogeneous
                                  ? verifier::homogeneous_spec(params.N, params.s, params.q)
                                  : verifier::problem_spec(params);
            const auto sign = supersolution ? verifier::RequiredSign::NonNegative
                                            : verifier::RequiredSign::NonPositive;
            return verifier::search_amplitude(family, spec, annulus, 0, sign, bisect_tol,
                                              {1e-6, 1e-30, 40}, a_start);
        },
        py::arg("family"), py::arg("params"), py::arg("homogeneous"), py::arg("annulus"),
        py::arg("supersolution"), py::arg("bisect_tol") = 0.05, py::arg("a_start") = 1.0);

    m.def(
        "fit_decay_exponent",
        [](const RadialProfile& profile, int N, double s, double r_min, double r_max,
           int n_samples, bool divide_log) {
            const auto fit = estimates::fit_decay_exponent(profile, N, s, r_min, r_max,
                                                           n_samples, divide_log);
            return py::make_tuple(fit.exponent, fit.residual, fit.n_used);
        },
        py::arg("profile"), py::arg("N"), py::arg("s"), py::arg("r_min"), py::arg("r_max"),
        py::arg("n_samples"), py::arg("divide_log") = false);
    m.def(
        "check_exponent_claim",
        [](const std::string& lemma_case, double p, double q, double s, int N) {
            const auto check = recursion::check_exponent_claim(lemma_case, p, q, s, N);
            return py::make_tuple(check.claimed, check.measured, check.pass, check.clause);
        },
        py::arg("lemma_case"), py::arg("p"), py::arg("q"), py::arg("s"), py::arg("N"));

    py::class_<phasemap::Boundaries>(m, "Boundaries")
        .def_readonly("q1", &phasemap::Boundaries::q1)
        .def_readonly("q2", &phasemap::Boundaries::q2)
        .def_readonly("p_crit", &phasemap::Boundaries::p_crit);

    m.def("boundaries", &phasemap::boundaries, py::arg("N"), py::arg("s"));
    m.def("curve_a", &phasemap::curve_a, py::arg("q"), py::arg("N"), py::arg("s"));
    m.def("curve_b", &phasemap::curve_b, py::arg("q"), py::arg("N"), py::arg("s"));
    m.def(
        "classify",
        [](int N, double s, double p, double q) {
            const auto label = phasemap::classify(N, s, p, q);
            return py::make_tuple(phasemap::region_name(label.label),
                                  phasemap::qualifiers_string(label.qualifiers));
        },
        py::arg("N"), py::arg("s"), py::arg("p"), py::arg("q"));

    py::class_<recursion::RecursionTrace>(m, "RecursionTrace")
        .def_readonly("radii", &recursion::RecursionTrace::radii)
        .def_readonly("h_values", &recursion::RecursionTrace::h_values)
        .def_readonly("log_h", &recursion::RecursionTrace::log_h)
        .def_readonly("fitted_exponent", &recursion::RecursionTrace::fitted_exponent)
        .def_readonly("truncated", &recursion::RecursionTrace::truncated);

    m.def("iterate_doubling", &recursion::iterate_doubling, py::arg("p"), py::arg("q"),
          py::arg("s"), py::arg("C"), py::arg("h0"), py::arg("R0"), py::arg("n_steps"));
    m.def(
        "solve_pointwise",
        [](double p, double q, double s, double C, double R) {
            const auto b = recursion::solve_pointwise(p, q, s, C, R);
            return py::make_tuple(b.h_bound, b.exponent_smooth, b.exponent_gradient);
        },
        py::arg("p"), py::arg("q"), py::arg("s"), py::arg("C"), py::arg("R"));

    m.attr("__version__") = "0.1.0";
}
