#include "fraclap/verifier.hpp"

#include <cmath>
#include <limits>

namespace fraclap::verifier {

const char* cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "CERTIFIED";
        case CertStatus::Falsified: return "FALSIFIED";
        case CertStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

const char* threshold_kind_name(Threshold::Kind k) {
    switch (k) {
        case Threshold::Kind::Lambda0: return "LAMBDA0";
        case Threshold::Kind::R0Min: return "R0_MIN";
        case Threshold::Kind::AmplitudeMax: return "AMPLITUDE_MAX";
    }
    return "UNKNOWN";
}

const char* existence_case_name(ExistenceCase c) {
    switch (c) {
        case ExistenceCase::I: return "i";
        case ExistenceCase::II: return "ii";
        case ExistenceCase::III: return "iii";
        case ExistenceCase::IV: return "iv";
        case ExistenceCase::V: return "v";
        case ExistenceCase::VI: return "vi";
    }
    return "?";
}

ResidualSpec homogeneous_spec(int N, double s, double q) {
    ResidualSpec spec;
    spec.homogeneous = true;
    spec.params = validate_params(ProblemParams{N, s, 1.0, q, 1.0, 1.0});
    return spec;
}

ResidualSpec problem_spec(const ProblemParams& params) {
    return ResidualSpec{false, validate_params(params)};
}

namespace {

double gradient_power(const RadialProfile& u, double q, double r) {
    if (q == 0.0) return 1.0; // |grad u|^0 convention
    return std::pow(u.gradient_norm(r), q);
}

} // namespace

ResidualValue residual(const ProblemParams& params, const RadialProfile& u, double r,
                       const Tolerance& tol) {
    validate_params(params);
    if (!(r >= params.R0))
        throw Error(Errc::precondition, "residual is defined for r >= R0");
    const auto op = eval_radial(u, params.N, params.s, r, tol);
    const double grad = gradient_power(u, params.q, r);
    const double reaction = params.lambda * std::pow(u.value(r), params.p);
    return {op.value + grad - reaction, op.err_estimate};
}

ResidualValue residual_homogeneous(const RadialProfile& u, int N, double s, double q, double r,
                                   const Tolerance& tol) {
    const auto op = eval_radial(u, N, s, r, tol);
    return {op.value + gradient_power(u, q, r), op.err_estimate};
}

ResidualValue residual_of(const ResidualSpec& spec, const RadialProfile& u, double r,
                          const Tolerance& tol) {
    if (spec.homogeneous)
        return residual_homogeneous(u, spec.params.N, spec.params.s, spec.params.q, r, tol);
    return residual(spec.params, u, r, tol);
}

int default_n_grid(const Annulus& annulus) {
    const double decades = std::log10(annulus.r_outer / annulus.r_inner);
    return std::max(16, static_cast<int>(std::ceil(64.0 * decades)));
}

Certificate certify_sign(const ResidualSpec& spec, const RadialProfile& u, const Annulus& annulus,
                         int n_grid, RequiredSign required, const Tolerance& tol,
                         bool stop_at_violation) {
    if (!spec.homogeneous && !(annulus.r_inner >= spec.params.R0))
        throw Error(Errc::precondition, "certification annulus must start at or beyond R0");
    if (n_grid < 2)
        throw Error(Errc::precondition, "certification needs at least 2 grid points");

    Certificate cert;
    cert.r_inner = annulus.r_inner;
    cert.r_outer = annulus.r_outer;
    cert.n_grid = n_grid;

    const double sign = required == RequiredSign::NonNegative ? 1.0 : -1.0;
    const double span = std::log(annulus.r_outer / annulus.r_inner);
    bool all_margin = true;
    bool any_violation = false;
    double worst = std::numeric_limits<double>::infinity();

    for (int i = 0; i < n_grid; ++i) {
        double r = annulus.r_inner * std::exp(span * i / (n_grid - 1.0));
        if (u.is_corner(r, 2e-6)) r *= 1.0 + 5e-6;
        const auto res = residual_of(spec, u, r, tol);
        const double oriented = sign * res.value;
        if (oriented < worst) {
            worst = oriented;
            cert.worst_radius = r;
            cert.worst_residual = res.value;
            cert.worst_err = res.err;
        }
        if (!(oriented > res.err)) all_margin = false;
        if (oriented < -res.err) {
            any_violation = true;
            if (stop_at_violation) break; // bisection probes only need the status
        }
    }

    cert.status = all_margin ? CertStatus::Certified
                             : (any_violation ? CertStatus::Falsified : CertStatus::Inconclusive);
    return cert;
}

double min_annulus(const RadialProfile& u, const Annulus& annulus, int n_grid) {
    if (n_grid < 2)
        throw Error(Errc::precondition, "min_annulus needs at least 2 grid points");
    const double span = std::log(annulus.r_outer / annulus.r_inner);
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_grid; ++i) {
        const double r = annulus.r_inner * std::exp(span * i / (n_grid - 1.0));
        m = std::min(m, u.value(r));
    }
    return m;
}

namespace {

struct MeasuredConstants {
    double c_upper; // max(0, -op(z)) z^{e_op}, operator lower-bound coefficient
    double c_lower; // min |phi'(z)| z^{sigma+1}
};

MeasuredConstants measure_base_constants(const RadialProfile& bump, int N, double s, double sigma,
                                         double z_lo, double z_hi, const Tolerance& tol) {
    const double e_op = sigma < static_cast<double>(N) ? sigma + 2.0 * s : N + 2.0 * s;
    MeasuredConstants mc{0.0, std::numeric_limits<double>::infinity()};
    const int n = 12;
    const double span = std::log(z_hi / z_lo);
    Tolerance probe = tol;
    probe.rel_tol = std::max(probe.rel_tol, 1e-5);
    for (int i = 0; i < n; ++i) {
        const double z = z_lo * std::exp(span * i / (n - 1.0));
        const auto op = eval_radial(bump, N, s, z, probe);
        mc.c_upper = std::max(mc.c_upper, std::max(0.0, -(op.value - op.err_estimate)) *
                                              std::pow(z, e_op));
        mc.c_lower = std::min(mc.c_lower, bump.gradient_norm(z) * std::pow(z, sigma + 1.0));
    }
    return mc;
}

void require_case_region(ExistenceCase c, const ProblemParams& base) {
    const double p_crit = critical_p(base.N, base.s);
    const double q1 = q1_threshold(base.N, base.s);
    const double q2 = q2_threshold(base.N, base.s);
    const double two_s = 2.0 * base.s;
    auto fail = [&](const char* msg) { throw Error(Errc::precondition, msg); };
    switch (c) {
        case ExistenceCase::I:
            if (base.p != p_crit || !(base.q > 0.0 && base.q < 1.0))
                fail("case i requires p = N/(N-2s) and 0 < q < 1");
            break;
        case ExistenceCase::II:
            if (base.p != p_crit || base.q != 1.0)
                fail("case ii requires p = N/(N-2s) and q = 1");
            break;
        case ExistenceCase::III:
            if (base.p != p_crit || !(base.q > 1.0 && base.q <= q2))
                fail("case iii requires p = N/(N-2s) and 1 < q <= q2");
            break;
        case ExistenceCase::IV: {
            const double curve_a = (two_s - 1.0) * base.q / (two_s - base.q);
            if (!(base.q > q1 && base.q < q2) || !(base.p >= curve_a && base.p < p_crit))
                fail("case iv requires q1 < q < q2 and curve_a(q) <= p < p_crit");
            break;
        }
        case ExistenceCase::V: {
            const double curve_b = (base.N + two_s) * base.q / (base.N + two_s - base.q);
            if (!(base.q > 0.0 && base.q < q1) || !(base.p >= curve_b && base.p < p_crit))
                fail("case v requires 0 < q < q1 and curve_b(q) <= p < p_crit");
            break;
        }
        case ExistenceCase::VI:
            if (base.q != q1 || !(base.p > (base.N + two_s) / base.N && base.p < p_crit))
                fail("case vi requires q = q1 and (N+2s)/N < p < p_crit");
            break;
    }
}

} // namespace

CaseRecipe design_case_profile(ExistenceCase c, const ProblemParams& base, const Annulus& annulus,
                               double k_hint, const Tolerance& tol) {
    validate_params(base);
    require_case_region(c, base);
    const double two_s = 2.0 * base.s;
    CaseRecipe recipe;
    recipe.case_id = c;
    recipe.k = k_hint;

    switch (c) {
        case ExistenceCase::I:
        case ExistenceCase::II:
        case ExistenceCase::III:
            recipe.sigma = base.N - two_s;
            break;
        case ExistenceCase::IV:
            recipe.sigma = (two_s - base.q) / (base.q - 1.0);
            break;
        case ExistenceCase::V:
            recipe.sigma = base.q == 1.0 ? base.N + two_s - 1.0 : (base.N + two_s) / base.q - 1.0;
            break;
        case ExistenceCase::VI: {
            // any sigma_p < N with (sigma_p+1) q / sigma_p < p works; take the midpoint
            const double lower = base.q / (base.p - base.q);
            recipe.sigma = 0.5 * (lower + base.N);
            break;
        }
    }

    const auto bump = RadialProfile::smooth_bump(recipe.sigma);
    const auto mc = measure_base_constants(bump, base.N, base.s, recipe.sigma,
                                           recipe.k * annulus.r_inner,
                                           recipe.k * annulus.r_outer, tol);
    recipe.c_upper = mc.c_upper;
    recipe.c_lower = mc.c_lower;
    const double c1 = mc.c_upper, c0 = mc.c_lower;
    const double k = recipe.k, q = base.q;

    switch (c) {
        case ExistenceCase::I:
        case ExistenceCase::II:
            recipe.amplitude = 1.0;
            recipe.lambda_guess = base.lambda;
            break;
        case ExistenceCase::III:
            recipe.amplitude = std::pow((1.0 + c1) * std::pow(k, (base.N - two_s) * (q - 1.0)) /
                                            std::pow(c0, q),
                                        1.0 / (q - 1.0));
            recipe.lambda_guess = std::pow(k, two_s) * std::pow(recipe.amplitude, 1.0 - base.p);
            break;
        case ExistenceCase::IV:
        case ExistenceCase::V:
            if (base.q == 1.0) { // case v, q = 1: unamplified profile, lambda0 = k^{2s}
                recipe.amplitude = 1.0;
                recipe.lambda_guess = std::pow(k, two_s);
            } else {
                recipe.amplitude = std::pow((1.0 + c1) * std::pow(k, two_s - q) / std::pow(c0, q),
                                            1.0 / (q - 1.0));
                recipe.lambda_guess = std::pow(k, two_s) * std::pow(recipe.amplitude, 1.0 - base.p);
            }
            break;
        case ExistenceCase::VI: {
            const double gap = recipe.sigma + two_s - (recipe.sigma + 1.0) * q;
            const double c1_eff = 1.0 + c1 * std::pow(annulus.r_inner, -gap);
            recipe.amplitude = std::pow(c1_eff * std::pow(k, recipe.sigma * (q - 1.0)) /
                                            std::pow(c0, q),
                                        1.0 / (q - 1.0));
            recipe.lambda_guess = std::pow(k, (recipe.sigma + 1.0) * q - recipe.sigma) *
                                  std::pow(recipe.amplitude, 1.0 - base.p);
            break;
        }
    }
    return recipe;
}

RadialProfile case_profile(const CaseRecipe& recipe, double R0) {
    const auto bump = RadialProfile::smooth_bump(recipe.sigma);
    const auto scaled = RadialProfile::scaled(bump, recipe.k * R0, R0);
    return recipe.amplitude == 1.0 ? scaled : scaled.amplified(recipe.amplitude);
}

Threshold estimate_lambda0(ExistenceCase c, const ProblemParams& base, const Annulus& annulus,
                           double bisect_tol, int n_grid, const Tolerance& tol) {
    if (c != ExistenceCase::III && c != ExistenceCase::IV && c != ExistenceCase::V &&
        c != ExistenceCase::VI)
        throw Error(Errc::precondition, "lambda0 bisection applies to cases iii-vi");
    if (c == ExistenceCase::V && base.q == 1.0)
        throw Error(Errc::precondition, "case v with q = 1 uses the R0 threshold instead");
    const auto recipe = design_case_profile(c, base, annulus);
    const auto profile = case_profile(recipe, base.R0);
    if (n_grid <= 0) n_grid = default_n_grid(annulus);
    const int probe_grid = std::min(n_grid, 48);
    Tolerance probe_tol = tol;
    probe_tol.rel_tol = std::max(tol.rel_tol, 1e-5);

    auto status_at = [&](double lambda) {
        ProblemParams params = base;
        params.lambda = lambda;
        return certify_sign(problem_spec(params), profile, annulus, probe_grid,
                            RequiredSign::NonNegative, probe_tol, true)
            .status;
    };

    double lo = recipe.lambda_guess * 0.5;
    int guard = 0;
    while (status_at(lo) != CertStatus::Certified) {
        lo *= 0.25;
        if (++guard > 30)
            throw Error(Errc::no_certified_point, "no certifiable lambda found for the case recipe");
    }
    double hi = lo * 4.0;
    guard = 0;
    while (status_at(hi) != CertStatus::Falsified) {
        hi *= 4.0;
        if (++guard > 30)
            throw Error(Errc::no_falsified_point, "lambda bracket cap reached without falsification");
    }
    for (int i = 0; i < 40 && hi / lo > 1.0 + bisect_tol; ++i) {
        const double mid = std::sqrt(lo * hi);
        (status_at(mid) == CertStatus::Certified ? lo : hi) = mid;
    }

    Threshold th;
    th.kind = Threshold::Kind::Lambda0;
    // final certificate at full grid and tolerance; lambda-monotonicity lets
    // us back off if the coarse probe was optimistic at the margin
    for (int i = 0; i < 6; ++i) {
        ProblemParams params = base;
        params.lambda = lo;
        th.certificate = certify_sign(problem_spec(params), profile, annulus, n_grid,
                                      RequiredSign::NonNegative, tol);
        if (th.certificate.status == CertStatus::Certified) break;
        lo *= 0.8;
    }
    if (th.certificate.status != CertStatus::Certified)
        throw Error(Errc::no_certified_point, "final lambda certificate failed below the bracket");
    th.bracket_lo = lo;
    th.bracket_hi = hi;
    th.value = std::sqrt(lo * hi);
    th.certified_at = lo;
    return th;
}

namespace {

// Certification probe for the q = 1 cases at a candidate R0. The recipe's
// scale ratio k is held fixed across probes: with sigma = N-2s the bump's
// operator decays faster than the generic |x|^{-sigma-2s} bound (gamma
// vanishes there), so an adaptive k would certify every R0 and no threshold
// would exist. Relative to a fixed recipe the residual is a function of k*r
// alone and the threshold is well defined and monotone.
bool r0_probe(ExistenceCase c, const ProblemParams& base, double R0, double k, int n_grid,
              const Tolerance& tol, CaseRecipe* used, Certificate* cert_out) {
    ProblemParams params = base;
    params.R0 = R0;
    const Annulus annulus(R0, 100.0 * R0);
    try {
        const auto recipe = design_case_profile(c, params, annulus, k, tol);
        const auto profile = case_profile(recipe, R0);
        const auto cert = certify_sign(problem_spec(params), profile, annulus, n_grid,
                                       RequiredSign::NonNegative, tol, cert_out == nullptr);
        if (used) *used = recipe;
        if (cert_out) *cert_out = cert;
        return cert.status == CertStatus::Certified;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

Threshold estimate_R0_threshold(ExistenceCase c, const ProblemParams& base, double bisect_tol,
                                int n_grid, const Tolerance& tol, double k_hint) {
    if (c != ExistenceCase::II && c != ExistenceCase::V)
        throw Error(Errc::precondition, "R0 threshold applies to cases ii and v");
    if (base.q != 1.0)
        throw Error(Errc::precondition, "R0 threshold requires q = 1");
    if (n_grid <= 0) n_grid = 128;
    const double k = k_hint;
    const int probe_grid = std::min(n_grid, 48);
    Tolerance probe_tol = tol;
    probe_tol.rel_tol = std::max(tol.rel_tol, 1e-5);

    auto ok = [&](double R0) {
        return r0_probe(c, base, R0, k, probe_grid, probe_tol, nullptr, nullptr);
    };

    double hi = base.R0;
    int guard = 0;
    while (!ok(hi)) {
        hi *= 2.0;
        if (++guard > 40)
            throw Error(Errc::no_certified_point, "no certifiable R0 found within the bracket cap");
    }
    double lo = hi * 0.5;
    guard = 0;
    bool bottomed = false;
    while (ok(lo)) {
        hi = lo;
        lo *= 0.5;
        if (++guard > 14) {
            bottomed = true; // certifiable down to the probe floor: threshold ~ 0
            break;
        }
    }
    if (!bottomed) {
        for (int i = 0; i < 40 && hi / lo > 1.0 + bisect_tol; ++i) {
            const double mid = std::sqrt(lo * hi);
            (ok(mid) ? hi : lo) = mid;
        }
    }

    Threshold th;
    th.kind = Threshold::Kind::R0Min;
    CaseRecipe recipe;
    Certificate cert;
    for (int i = 0; i < 6; ++i) {
        if (r0_probe(c, base, hi, k, n_grid, tol, &recipe, &cert)) break;
        hi *= 1.3;
    }
    if (cert.status != CertStatus::Certified)
        throw Error(Errc::no_certified_point, "final R0 certificate failed above the bracket");
    th.bracket_lo = lo;
    th.bracket_hi = hi;
    th.value = std::sqrt(lo * hi);
    th.certified_at = hi;
    th.certificate = cert;
    return th;
}

Threshold search_amplitude(const std::function<RadialProfile(double)>& family,
                           const ResidualSpec& spec, const Annulus& annulus, int n_grid,
                           RequiredSign required, double bisect_tol, const Tolerance& tol,
                           double a_start) {
    if (n_grid <= 0) n_grid = default_n_grid(annulus);
    const int probe_grid = std::min(n_grid, 48);
    Tolerance probe_tol = tol;
    probe_tol.rel_tol = std::max(tol.rel_tol, 1e-5);
    auto certified = [&](double a) {
        return certify_sign(spec, family(a), annulus, probe_grid, required, probe_tol, true)
                   .status == CertStatus::Certified;
    };

    double lo = a_start;
    int guard = 0;
    while (!certified(lo)) {
        lo *= 0.5;
        if (++guard > 60)
            throw Error(Errc::no_certified_point, "no certifiable amplitude found");
    }
    double hi = lo * 2.0;
    guard = 0;
    while (certified(hi)) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 60)
            throw Error(Errc::no_falsified_point, "amplitude bracket cap reached");
    }
    for (int i = 0; i < 40 && hi / lo > 1.0 + bisect_tol; ++i) {
        const double mid = std::sqrt(lo * hi);
        (certified(mid) ? lo : hi) = mid;
    }

    Threshold th;
    th.kind = Threshold::Kind::AmplitudeMax;
    for (int i = 0; i < 6; ++i) {
        th.certificate = certify_sign(spec, family(lo), annulus, n_grid, required, tol);
        if (th.certificate.status == CertStatus::Certified) break;
        lo *= 0.7;
    }
    if (th.certificate.status != CertStatus::Certified)
        throw Error(Errc::no_certified_point, "final amplitude certificate failed below the bracket");
    th.bracket_lo = lo;
    th.bracket_hi = hi;
    th.value = lo;
    th.certified_at = lo;
    return th;
}

LogSqueezeReport verify_critical_log_squeeze(int N, double s, double q, double C, double K) {
    if (!(C > 0.0) || !(K > 0.0))
        throw Error(Errc::precondition, "log squeeze requires positive C and K");
    LogSqueezeReport rep;
    rep.C = C;
    rep.K = K;
    rep.q_above_q2 = q > q2_threshold(N, s);
    rep.crossing_radius = std::expm1(K / C);
    return rep;
}

Aux4Report check_truncated_fundamental_bound(int N, double s, double R, double eps, int n_grid,
                                             const Tolerance& tol) {
    if (!(R > 0.0) || !(eps > 0.0))
        throw Error(Errc::precondition, "need R > 0 and eps > 0");
    Aux4Report rep;
    rep.Rbar = truncation_radius(N, s, R, eps);
    if (!(rep.Rbar < 0.5 * R))
        throw Error(Errc::precondition, "eps too large: Rbar must stay below R/2");
    const auto w_R = RadialProfile::truncated_fundamental(N, s, rep.Rbar, R);
    if (n_grid < 2) n_grid = 48;
    const double r_lo = 0.5 * R, r_hi = 2.0 * R * (1.0 - 1e-4);
    const double span = std::log(r_hi / r_lo);
    rep.max_scaled = -std::numeric_limits<double>::infinity();
    rep.min_scaled = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_grid; ++i) {
        double r = r_lo * std::exp(span * i / (n_grid - 1.0));
        if (w_R.is_corner(r, 2e-6)) r *= 1.0 + 5e-6;
        const auto op = eval_radial(w_R, N, s, r, tol);
        const double scaled_hi = (op.value + op.err_estimate) * std::pow(r, N);
        const double scaled_lo = (op.value - op.err_estimate) * std::pow(r, N);
        rep.max_scaled = std::max(rep.max_scaled, scaled_hi);
        rep.min_scaled = std::min(rep.min_scaled, scaled_lo);
    }
    rep.pass = rep.max_scaled < 0.0;
    return rep;
}

} // namespace fraclap::verifier
