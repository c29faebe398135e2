// Command-line front end: every subcommand prints one JSON document (or CSV
// for grids and traces) and maps certificate status to the exit code:
// 0 success/CERTIFIED, 2 FALSIFIED, 3 INCONCLUSIVE, 1 usage or parameter error.

#include "fraclap/estimates.hpp"
#include "fraclap/fraclap.hpp"
#include "fraclap/parallel.hpp"
#include "fraclap/phasemap.hpp"
#include "fraclap/phasemap.hpp"
#include "fraclap/recursion.hpp"
#include "fraclap/serialize.hpp"
#include "fraclap/verifier.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

using namespace fraclap;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string path; // empty = stdout
    bool no_meta = false;

    void emit_json(const std::string& command, const json& data) const {
        json doc;
        if (!no_meta) doc["meta"] = {{"tool", "fraclap"}, {"version", kVersion}};
        doc["command"] = command;
        doc["data"] = data;
        write(doc.dump(2) + "\n");
    }

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw Error(Errc::io_failure, "cannot open output path " + path);
        os << text;
    }
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--output", out.path, "Write the document to a file instead of stdout");
    cmd->add_flag("--no-meta", out.no_meta, "Omit the meta block (comparison mode)");
}

// p accepts "crit" (= N/(N-2s)); q accepts "q1" and "q2".
double resolve_p(const std::string& text, int N, double s) {
    if (text == "crit") return critical_p(N, s);
    return std::stod(text);
}

double resolve_q(const std::string& text, int N, double s) {
    if (text == "q1") return q1_threshold(N, s);
    if (text == "q2") return q2_threshold(N, s);
    return std::stod(text);
}

RadialProfile parse_profile(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        std::ifstream is(text.substr(1));
        if (!is) throw Error(Errc::io_failure, "cannot read profile file " + text.substr(1));
        return RadialProfile::from_json(json::parse(is));
    }
    return RadialProfile::from_json(json::parse(text));
}

int exit_code_for(verifier::CertStatus status) {
    switch (status) {
        case verifier::CertStatus::Certified: return 0;
        case verifier::CertStatus::Falsified: return 2;
        case verifier::CertStatus::Inconclusive: return 3;
    }
    return 1;
}

// Certify a Theorem 1.3 case at the given parameters, retrying a ladder of
// scale ratios; the k that certifies is reported alongside the certificate.
verifier::Certificate certify_case(verifier::ExistenceCase c, const ProblemParams& params,
                                   const Annulus& annulus, int n_grid, double k_hint,
                                   const Tolerance& tol, verifier::CaseRecipe* used) {
    verifier::Certificate best;
    bool have = false;
    double k = k_hint;
    for (int attempt = 0; attempt < 7; ++attempt, k *= 2.0) {
        auto recipe = verifier::design_case_profile(c, params, annulus, k, tol);
        auto cert = verifier::certify_sign(verifier::problem_spec(params),
                                           verifier::case_profile(recipe, params.R0), annulus,
                                           n_grid, verifier::RequiredSign::NonNegative, tol);
        if (!have || cert.worst_residual > best.worst_residual) {
            best = cert;
            if (used) *used = recipe;
            have = true;
        }
        if (cert.status == verifier::CertStatus::Certified) {
            if (used) *used = recipe;
            return cert;
        }
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fraclap: fractional Laplacian of radial profiles and supersolution certification"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- gamma ----------------------------------------------------------
    auto* cmd_gamma = app.add_subcommand("gamma", "Closed-form gamma_sigma constant");
    struct {
        int N = 3;
        double s = 0.75, sigma = 1.0;
        int jobs = 1;
        Output out;
    } g;
    cmd_gamma->add_option("--N", g.N)->required();
    cmd_gamma->add_option("--s", g.s)->required();
    cmd_gamma->add_option("--sigma", g.sigma)->required();
    cmd_gamma->add_option("--jobs", g.jobs, "Accepted for CLI uniformity; single evaluation");
    add_output_flags(cmd_gamma, g.out);
    cmd_gamma->callback([&] {
        g.out.emit_json("gamma", json{{"N", g.N},
                                      {"s", g.s},
                                      {"sigma", g.sigma},
                                      {"gamma", gamma_sigma(g.sigma, g.N, g.s)},
                                      {"C_Ns", normalization_constant(g.N, g.s)}});
    });

    // ---- eval ------------------------------------------------------------
    auto* cmd_eval = app.add_subcommand("eval", "Evaluate (-Delta)^s of a radial profile");
    struct {
        int N = 3;
        double s = 0.75, r = 1.0;
        std::string profile, scheme = "sd";
        double sigma = 1.0;
        double rel_tol = 1e-8, abs_tol = 1e-12;
        int max_subdiv = 40;
        bool l2s = false;
        int jobs = 1;
        Output out;
    } e;
    cmd_eval->add_option("--N", e.N)->required();
    cmd_eval->add_option("--s", e.s)->required();
    cmd_eval->add_option("--r", e.r)->required();
    cmd_eval->add_option("--profile", e.profile, "Profile JSON (or @file)");
    cmd_eval->add_option("--scheme", e.scheme, "sd | pv | exact")
        ->check(CLI::IsMember({"sd", "pv", "exact"}));
    cmd_eval->add_option("--sigma", e.sigma, "Power exponent for --scheme exact");
    cmd_eval->add_option("--rel-tol", e.rel_tol);
    cmd_eval->add_option("--abs-tol", e.abs_tol);
    cmd_eval->add_option("--max-subdiv", e.max_subdiv);
    cmd_eval->add_flag("--l2s", e.l2s, "Also report weighted-tail integrability");
    cmd_eval->add_option("--jobs", e.jobs, "Accepted for CLI uniformity; single evaluation");
    add_output_flags(cmd_eval, e.out);
    cmd_eval->callback([&] {
        const Tolerance tol{e.rel_tol, e.abs_tol, e.max_subdiv};
        json data;
        if (e.scheme == "exact") {
            data = {{"value", eval_power_exact(e.sigma, e.r, e.N, e.s)},
                    {"scheme", "EXACT_POWER"},
                    {"sigma", e.sigma}};
        } else {
            if (e.profile.empty())
                throw Error(Errc::precondition, "--profile is required for quadrature schemes");
            const auto prof = parse_profile(e.profile);
            const auto res = e.scheme == "sd" ? eval_radial(prof, e.N, e.s, e.r, tol)
                                              : eval_radial_direct(prof, e.N, e.s, e.r, tol);
            data = to_json(res);
            data["profile"] = prof.to_json();
            if (e.l2s) data["l2s"] = to_json(check_L2s_membership(prof, e.N, e.s, tol));
        }
        data["r"] = e.r;
        data["N"] = e.N;
        data["s"] = e.s;
        e.out.emit_json("eval", data);
    });

    // ---- certify -----------------------------------------------------------
    auto* cmd_cert = app.add_subcommand("certify", "Sign certification of a residual");
    struct {
        int N = 3;
        double s = 0.75, lambda = 1.0, R0 = 1.0;
        std::string p = "crit", q = "1";
        std::string case_name, profile, require = "super";
        double r_inner = 0.0, r_outer = 0.0;
        int n_grid = 0;
        bool homogeneous = false;
        double k = 4.0, sigma = 0.0, eps = 0.05, amp = 1.0, beta = 0.8;
        double rel_tol = 1e-6;
        int jobs = 1;
        Output out;
    } c;
    cmd_cert->add_option("--N", c.N)->required();
    cmd_cert->add_option("--s", c.s)->required();
    cmd_cert->add_option("--p", c.p);
    cmd_cert->add_option("--q", c.q);
    cmd_cert->add_option("--lambda", c.lambda);
    cmd_cert->add_option("--R0", c.R0);
    cmd_cert->add_option("--case", c.case_name,
                         "thm1.3-i..thm1.3-vi | thm1.4 | lemma2.3 | lemma2.4 | aux4");
    cmd_cert->add_option("--profile", c.profile, "Explicit profile JSON (generic mode)");
    cmd_cert->add_option("--require", c.require)->check(CLI::IsMember({"super", "sub"}));
    cmd_cert->add_option("--r-inner", c.r_inner);
    cmd_cert->add_option("--r-outer", c.r_outer);
    cmd_cert->add_option("--n-grid", c.n_grid);
    cmd_cert->add_flag("--homogeneous", c.homogeneous, "Certify against the homogeneous equation");
    cmd_cert->add_option("--k", c.k, "Scale ratio hint R/R0 for case recipes");
    cmd_cert->add_option("--sigma", c.sigma, "Profile exponent for lemma presets");
    cmd_cert->add_option("--eps", c.eps, "Cap radius for lemma 2.4 / aux4 presets");
    cmd_cert->add_option("--amp", c.amp, "Amplitude for lemma/thm1.4 presets");
    cmd_cert->add_option("--beta", c.beta, "Decay parameter for thm1.4");
    cmd_cert->add_option("--rel-tol", c.rel_tol);
    cmd_cert->add_option("--jobs", c.jobs, "Accepted for CLI uniformity; sequential grid");
    add_output_flags(cmd_cert, c.out);
    cmd_cert->callback([&] {
        const double p = resolve_p(c.p, c.N, c.s);
        const double q = resolve_q(c.q, c.N, c.s);
        const Tolerance tol{c.rel_tol, 1e-30, 40};
        ProblemParams params{c.N, c.s, p, q, c.lambda, c.R0};
        json data;
        verifier::Certificate cert;

        if (c.case_name == "aux4") {
            const double R = c.r_outer > 0.0 ? 0.5 * c.r_outer : 8.0;
            const auto rep = verifier::check_truncated_fundamental_bound(
                c.N, c.s, R, c.eps, c.n_grid > 0 ? c.n_grid : 48, tol);
            data = to_json(rep);
            c.out.emit_json("certify", data);
            exit_code = rep.pass ? 0 : 2;
            return;
        }

        if (!c.case_name.empty() && c.case_name.rfind("thm1.3-", 0) == 0) {
            const std::string suffix = c.case_name.substr(7);
            verifier::ExistenceCase ec;
            if (suffix == "i") ec = verifier::ExistenceCase::I;
            else if (suffix == "ii") ec = verifier::ExistenceCase::II;
            else if (suffix == "iii") ec = verifier::ExistenceCase::III;
            else if (suffix == "iv") ec = verifier::ExistenceCase::IV;
            else if (suffix == "v") ec = verifier::ExistenceCase::V;
            else if (suffix == "vi") ec = verifier::ExistenceCase::VI;
            else throw Error(Errc::precondition, "unknown case " + c.case_name);
            const Annulus annulus(c.r_inner > 0.0 ? c.r_inner : params.R0,
                                  c.r_outer > 0.0 ? c.r_outer : 100.0 * params.R0);
            const int n_grid = c.n_grid > 0 ? c.n_grid : verifier::default_n_grid(annulus);
            verifier::CaseRecipe recipe;
            cert = certify_case(ec, params, annulus, n_grid, c.k, tol, &recipe);
            data = to_json(cert);
            data["case"] = c.case_name;
            data["recipe"] = {{"sigma", recipe.sigma},
                              {"k", recipe.k},
                              {"amplitude", recipe.amplitude},
                              {"lambda_guess", recipe.lambda_guess}};
        } else if (c.case_name == "thm1.4") {
            const auto prof = RadialProfile::supercritical(c.beta, c.amp, params);
            const Annulus annulus(c.r_inner > 0.0 ? c.r_inner : 2.0,
                                  c.r_outer > 0.0 ? c.r_outer : 200.0);
            const int n_grid = c.n_grid > 0 ? c.n_grid : verifier::default_n_grid(annulus);
            cert = verifier::certify_sign(verifier::problem_spec(params), prof, annulus, n_grid,
                                          verifier::RequiredSign::NonNegative, tol);
            data = to_json(cert);
            data["case"] = c.case_name;
            data["profile"] = prof.to_json();
        } else if (c.case_name == "lemma2.3" || c.case_name == "lemma2.4") {
            // lemma 2.3 wants sigma = (N+2s)/q - 1 (> N for q < q1); at
            // q = q1 exactly that lands on N, where the second clause needs
            // sigma strictly above N
            double sigma_default = (c.N + 2.0 * c.s) / q - 1.0;
            if (c.case_name == "lemma2.3" && sigma_default <= c.N) sigma_default = c.N + 0.5;
            const double sigma = c.sigma > 0.0
                                     ? c.sigma
                                     : (c.case_name == "lemma2.3" ? sigma_default
                                                                  : c.N - 2.0 * c.s + 0.1);
            const auto prof = c.case_name == "lemma2.3"
                                  ? RadialProfile::smooth_bump(sigma).amplified(c.amp)
                                  : RadialProfile::power_cap(sigma, c.eps, c.amp);
            const Annulus annulus(c.r_inner > 0.0 ? c.r_inner : 5.0,
                                  c.r_outer > 0.0 ? c.r_outer : 500.0);
            const int n_grid = c.n_grid > 0 ? c.n_grid : verifier::default_n_grid(annulus);
            cert = verifier::certify_sign(verifier::homogeneous_spec(c.N, c.s, q), prof, annulus,
                                          n_grid, verifier::RequiredSign::NonPositive, tol);
            data = to_json(cert);
            data["case"] = c.case_name;
            data["profile"] = prof.to_json();
        } else {
            if (c.profile.empty())
                throw Error(Errc::precondition, "either --case or --profile is required");
            if (!(c.r_inner > 0.0) || !(c.r_outer > c.r_inner))
                throw Error(Errc::precondition, "generic mode needs --r-inner < --r-outer");
            const auto prof = parse_profile(c.profile);
            const Annulus annulus(c.r_inner, c.r_outer);
            const int n_grid = c.n_grid > 0 ? c.n_grid : verifier::default_n_grid(annulus);
            const auto spec = c.homogeneous ? verifier::homogeneous_spec(c.N, c.s, q)
                                            : verifier::problem_spec(params);
            const auto required = c.require == "super" ? verifier::RequiredSign::NonNegative
                                                       : verifier::RequiredSign::NonPositive;
            cert = verifier::certify_sign(spec, prof, annulus, n_grid, required, tol);
            data = to_json(cert);
            data["profile"] = prof.to_json();
        }
        if (c.case_name != "lemma2.3" && c.case_name != "lemma2.4" && !c.homogeneous) {
            const auto label = phasemap::classify(c.N, c.s, p, q);
            if (label.label == phasemap::Region::Open)
                data["note"] = "EXPERIMENTAL: (p, q) lies in the open band; this certificate "
                               "does not settle the open existence question";
        }
        c.out.emit_json("certify", data);
        exit_code = exit_code_for(cert.status);
    });

    // ---- lambda0 --------------------------------------------------------
    auto* cmd_l0 = app.add_subcommand("lambda0", "Bisect the lambda threshold for cases iii-vi");
    struct {
        int N = 3;
        double s = 0.75, R0 = 1.0;
        std::string p = "crit", q = "1.15", case_name = "iii";
        double r_inner = 0.0, r_outer = 0.0, bisect_tol = 0.05;
        int n_grid = 0, jobs = 1;
        Output out;
    } l0;
    cmd_l0->add_option("--case", l0.case_name)->check(CLI::IsMember({"iii", "iv", "v", "vi"}));
    cmd_l0->add_option("--N", l0.N)->required();
    cmd_l0->add_option("--s", l0.s)->required();
    cmd_l0->add_option("--p", l0.p);
    cmd_l0->add_option("--q", l0.q);
    cmd_l0->add_option("--R0", l0.R0);
    cmd_l0->add_option("--r-inner", l0.r_inner);
    cmd_l0->add_option("--r-outer", l0.r_outer);
    cmd_l0->add_option("--bisect-tol", l0.bisect_tol);
    cmd_l0->add_option("--n-grid", l0.n_grid);
    cmd_l0->add_option("--jobs", l0.jobs, "Accepted for CLI uniformity; bisection is sequential");
    add_output_flags(cmd_l0, l0.out);
    cmd_l0->callback([&] {
        verifier::ExistenceCase ec;
        if (l0.case_name == "iii") ec = verifier::ExistenceCase::III;
        else if (l0.case_name == "iv") ec = verifier::ExistenceCase::IV;
        else if (l0.case_name == "v") ec = verifier::ExistenceCase::V;
        else ec = verifier::ExistenceCase::VI;
        ProblemParams base{l0.N, l0.s, resolve_p(l0.p, l0.N, l0.s), resolve_q(l0.q, l0.N, l0.s),
                           1.0, l0.R0};
        const Annulus annulus(l0.r_inner > 0.0 ? l0.r_inner : base.R0,
                              l0.r_outer > 0.0 ? l0.r_outer : 100.0 * base.R0);
        const auto th = verifier::estimate_lambda0(ec, base, annulus, l0.bisect_tol, l0.n_grid);
        l0.out.emit_json("lambda0", to_json(th));
        exit_code = exit_code_for(th.certificate.status);
    });

    // ---- r0 ---------------------------------------------------------------
    auto* cmd_r0 = app.add_subcommand("r0", "Bisect the R0 threshold for the q = 1 cases");
    struct {
        int N = 3;
        double s = 0.75, lambda = 1.0, bisect_tol = 0.05, k = 1.0;
        std::string p = "crit", case_name = "ii";
        int n_grid = 0, jobs = 1;
        Output out;
    } r0c;
    cmd_r0->add_option("--case", r0c.case_name)->check(CLI::IsMember({"ii", "v"}));
    cmd_r0->add_option("--N", r0c.N)->required();
    cmd_r0->add_option("--s", r0c.s)->required();
    cmd_r0->add_option("--p", r0c.p);
    cmd_r0->add_option("--lambda", r0c.lambda);
    cmd_r0->add_option("--bisect-tol", r0c.bisect_tol);
    cmd_r0->add_option("--n-grid", r0c.n_grid);
    cmd_r0->add_option("--k", r0c.k, "Fixed recipe scale ratio R/R0");
    cmd_r0->add_option("--jobs", r0c.jobs, "Accepted for CLI uniformity; bisection is sequential");
    add_output_flags(cmd_r0, r0c.out);
    cmd_r0->callback([&] {
        const auto ec = r0c.case_name == "ii" ? verifier::ExistenceCase::II
                                              : verifier::ExistenceCase::V;
        ProblemParams base{r0c.N, r0c.s, resolve_p(r0c.p, r0c.N, r0c.s), 1.0, r0c.lambda, 1.0};
        const auto th = verifier::estimate_R0_threshold(ec, base, r0c.bisect_tol, r0c.n_grid,
                                                        {1e-6, 1e-30, 40}, r0c.k);
        r0c.out.emit_json("r0", to_json(th));
        exit_code = exit_code_for(th.certificate.status);
    });

    // ---- amplitude --------------------------------------------------------
    auto* cmd_amp = app.add_subcommand("amplitude", "Largest certifiable amplitude");
    struct {
        int N = 3;
        double s = 0.75, lambda = 1.0, beta = 0.8, eps = 0.05, sigma = 0.0;
        std::string q = "1.1", p = "2.5", regime = "lemma2.3";
        double r_inner = 0.0, r_outer = 0.0, bisect_tol = 0.05, a_start = 1.0;
        int n_grid = 0, jobs = 1;
        Output out;
    } am;
    cmd_amp->add_option("--regime", am.regime)
        ->check(CLI::IsMember({"lemma2.3", "lemma2.4", "thm1.4"}));
    cmd_amp->add_option("--N", am.N)->required();
    cmd_amp->add_option("--s", am.s)->required();
    cmd_amp->add_option("--q", am.q);
    cmd_amp->add_option("--p", am.p);
    cmd_amp->add_option("--sigma", am.sigma);
    cmd_amp->add_option("--eps", am.eps);
    cmd_amp->add_option("--beta", am.beta);
    cmd_amp->add_option("--lambda", am.lambda);
    cmd_amp->add_option("--r-inner", am.r_inner);
    cmd_amp->add_option("--r-outer", am.r_outer);
    cmd_amp->add_option("--bisect-tol", am.bisect_tol);
    cmd_amp->add_option("--a-start", am.a_start);
    cmd_amp->add_option("--n-grid", am.n_grid);
    cmd_amp->add_option("--jobs", am.jobs, "Accepted for CLI uniformity; bisection is sequential");
    add_output_flags(cmd_amp, am.out);
    cmd_amp->callback([&] {
        const double q = resolve_q(am.q, am.N, am.s);
        verifier::Threshold th;
        if (am.regime == "thm1.4") {
            ProblemParams params{am.N, am.s, resolve_p(am.p, am.N, am.s), q, am.lambda, 1.0};
            const Annulus annulus(am.r_inner > 0.0 ? am.r_inner : 2.0,
                                  am.r_outer > 0.0 ? am.r_outer : 200.0);
            th = verifier::search_amplitude(
                [&](double a) { return RadialProfile::supercritical(am.beta, a, params); },
                verifier::problem_spec(params), annulus, am.n_grid,
                verifier::RequiredSign::NonNegative, am.bisect_tol, {1e-6, 1e-30, 40}, am.a_start);
        } else {
            const double sigma = am.sigma > 0.0
                                     ? am.sigma
                                     : (am.regime == "lemma2.3" ? (am.N + 2.0 * am.s) / q - 1.0
                                                                : am.N - 2.0 * am.s + 0.1);
            const Annulus annulus(am.r_inner > 0.0 ? am.r_inner : 5.0,
                                  am.r_outer > 0.0 ? am.r_outer : 500.0);
            auto family = [&](double a) {
                return am.regime == "lemma2.3" ? RadialProfile::smooth_bump(sigma).amplified(a)
                                               : RadialProfile::power_cap(sigma, am.eps, a);
            };
            th = verifier::search_amplitude(family, verifier::homogeneous_spec(am.N, am.s, q),
                                            annulus, am.n_grid, verifier::RequiredSign::NonPositive,
                                            am.bisect_tol, {1e-6, 1e-30, 40}, am.a_start);
        }
        am.out.emit_json("amplitude", to_json(th));
        exit_code = exit_code_for(th.certificate.status);
    });

    // ---- bv-check ---------------------------------------------------------
    auto* cmd_bv = app.add_subcommand("bv-check", "Decay-exponent fit of the operator tail");
    struct {
        int N = 3;
        double s = 0.75, sigma = 2.0, r_min = 10.0, r_max = 1000.0;
        int n = 8, jobs = 1;
        bool divide_log = false, lower_bound = false;
        Output out;
    } bv;
    cmd_bv->add_option("--N", bv.N)->required();
    cmd_bv->add_option("--s", bv.s)->required();
    cmd_bv->add_option("--sigma", bv.sigma)->required();
    cmd_bv->add_option("--r-min", bv.r_min);
    cmd_bv->add_option("--r-max", bv.r_max);
    cmd_bv->add_option("--n", bv.n);
    cmd_bv->add_flag("--divide-log", bv.divide_log);
    cmd_bv->add_flag("--lower-bound", bv.lower_bound,
                     "Also run the sigma > N lower-bound window check");
    cmd_bv->add_option("--jobs", bv.jobs);
    add_output_flags(cmd_bv, bv.out);
    cmd_bv->callback([&] {
        const auto prof = RadialProfile::smooth_bump(bv.sigma);
        const auto fit = estimates::fit_decay_exponent(prof, bv.N, bv.s, bv.r_min, bv.r_max, bv.n,
                                                       bv.divide_log, {1e-6, 1e-30, 40}, bv.jobs);
        json data = to_json(fit);
        if (bv.lower_bound) {
            const std::vector<double> radii{20.0, 50.0, 100.0, 200.0};
            data["lower_bound"] = to_json(
                estimates::check_lower_bound_sigma_gt_N(prof, bv.N, bv.s, radii));
        }
        bv.out.emit_json("bv-check", data);
    });

    // ---- recursion --------------------------------------------------------
    auto* cmd_rec = app.add_subcommand("recursion", "Recursive-inequality lemma checks");
    struct {
        std::string op = "iterate", lemma_case = "2.8b", format = "json";
        int N = 3, steps = 48, jobs = 1;
        double p = 1.5, q = 1.3, s = 0.75, C = 1.0, h0 = 1.0, R0 = 1.0, R = 1024.0;
        Output out;
    } rc;
    cmd_rec->add_option("--op", rc.op)->check(CLI::IsMember({"iterate", "solve", "check"}));
    cmd_rec->add_option("--case", rc.lemma_case);
    cmd_rec->add_option("--N", rc.N);
    cmd_rec->add_option("--p", rc.p);
    cmd_rec->add_option("--q", rc.q);
    cmd_rec->add_option("--s", rc.s);
    cmd_rec->add_option("--C", rc.C);
    cmd_rec->add_option("--h0", rc.h0);
    cmd_rec->add_option("--R0", rc.R0);
    cmd_rec->add_option("--R", rc.R);
    cmd_rec->add_option("--steps", rc.steps);
    cmd_rec->add_option("--format", rc.format)->check(CLI::IsMember({"json", "csv"}));
    cmd_rec->add_option("--jobs", rc.jobs, "Accepted for CLI uniformity; iteration is sequential");
    add_output_flags(cmd_rec, rc.out);
    cmd_rec->callback([&] {
        if (rc.op == "iterate") {
            const auto trace =
                recursion::iterate_doubling(rc.p, rc.q, rc.s, rc.C, rc.h0, rc.R0, rc.steps);
            if (rc.format == "csv") {
                std::ostringstream os;
                write_trace_csv(os, trace);
                rc.out.write(os.str());
            } else {
                rc.out.emit_json("recursion", to_json(trace));
            }
        } else if (rc.op == "solve") {
            rc.out.emit_json("recursion", to_json(recursion::solve_pointwise(rc.p, rc.q, rc.s,
                                                                             rc.C, rc.R)));
        } else {
            const auto check =
                recursion::check_exponent_claim(rc.lemma_case, rc.p, rc.q, rc.s, rc.N);
            rc.out.emit_json("recursion", to_json(check));
            exit_code = check.pass ? 0 : 2;
        }
    });

    // ---- phase ------------------------------------------------------------
    auto* cmd_phase = app.add_subcommand("phase", "Region grid over the (q, p) plane");
    struct {
        int N = 3, res = 64, jobs = 1;
        double s = 0.75, q_min = 0.1, q_max = 2.0, p_min = 0.1, p_max = 3.0;
        std::string format = "csv";
        Output out;
    } ph;
    cmd_phase->add_option("--N", ph.N)->required();
    cmd_phase->add_option("--s", ph.s)->required();
    cmd_phase->add_option("--q-min", ph.q_min);
    cmd_phase->add_option("--q-max", ph.q_max);
    cmd_phase->add_option("--p-min", ph.p_min);
    cmd_phase->add_option("--p-max", ph.p_max);
    cmd_phase->add_option("--res", ph.res);
    cmd_phase->add_option("--format", ph.format)->check(CLI::IsMember({"csv", "json"}));
    cmd_phase->add_option("--jobs", ph.jobs);
    add_output_flags(cmd_phase, ph.out);
    cmd_phase->callback([&] {
        const phasemap::GridOptions opts{ph.q_min, ph.q_max, ph.p_min, ph.p_max, ph.res};
        const auto rows = phasemap::classify_grid(ph.N, ph.s, opts, ph.jobs);
        if (ph.format == "csv") {
            std::ostringstream os;
            write_grid_csv(os, rows);
            ph.out.write(os.str());
        } else {
            ph.out.emit_json("phase", grid_to_json(rows, phasemap::boundaries(ph.N, ph.s)));
        }
    });

    // ---- boundaries -------------------------------------------------------
    auto* cmd_bd = app.add_subcommand("boundaries", "Threshold exponents q1, q2, p_crit");
    struct {
        int N = 3;
        double s = 0.75;
        int samples = 0, jobs = 1;
        Output out;
    } bd;
    cmd_bd->add_option("--N", bd.N)->required();
    cmd_bd->add_option("--s", bd.s)->required();
    cmd_bd->add_option("--curve-samples", bd.samples, "Also tabulate curve_a and curve_b");
    cmd_bd->add_option("--jobs", bd.jobs, "Accepted for CLI uniformity; single evaluation");
    add_output_flags(cmd_bd, bd.out);
    cmd_bd->callback([&] {
        const auto b = phasemap::boundaries(bd.N, bd.s);
        json data = to_json(b);
        if (bd.samples > 1) {
            json ca = json::array(), cb = json::array();
            for (int i = 0; i < bd.samples; ++i) {
                const double q = 0.05 + (b.q2 * 0.999 - 0.05) * i / (bd.samples - 1.0);
                ca.push_back({{"q", q}, {"p", phasemap::curve_a(q, bd.N, bd.s)}});
                cb.push_back({{"q", q}, {"p", phasemap::curve_b(q, bd.N, bd.s)}});
            }
            data["curve_a"] = ca;
            data["curve_b"] = cb;
        }
        bd.out.emit_json("boundaries", data);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        // usage errors map to exit 1; --help stays 0
        const int code = app.exit(err);
        return code == 0 ? 0 : 1;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return exit_code;
}
