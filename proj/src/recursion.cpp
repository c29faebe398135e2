#include "fraclap/recursion.hpp"

#include <cmath>
#include <limits>

namespace fraclap::recursion {

namespace {

double log_sum_exp(double a, double b) {
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double fit_last_half(const std::vector<double>& radii, const std::vector<double>& log_h) {
    const std::size_t n = log_h.size();
    const std::size_t start = n / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (std::size_t i = start; i < n; ++i) {
        const double x = std::log(radii[i]);
        sx += x;
        sy += log_h[i];
        sxx += x * x;
        sxy += x * log_h[i];
        ++m;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

} // namespace

RecursionTrace iterate_doubling(double p, double q, double s, double C, double h0, double R0,
                                int n_steps) {
    if (!(q > 1.0) || !(p > 0.0) || !(s > 0.5) || !(C > 0.0) || !(h0 > 0.0) || !(R0 > 0.0))
        throw Error(Errc::precondition, "iterate_doubling requires q>1, p>0, s>1/2, C>0, h0>0, R0>0");
    if (n_steps < 8)
        throw Error(Errc::precondition, "need at least 8 doubling steps");

    RecursionTrace trace;
    const double two_s = 2.0 * s;
    const double logC = std::log(C);
    double log_h = std::log(h0);
    double log_R = std::log(R0);

    trace.radii.push_back(R0);
    trace.log_h.push_back(log_h);
    for (int k = 0; k < n_steps; ++k) {
        const double rhs =
            (logC + log_sum_exp(log_h - two_s * log_R, q * (log_h - log_R))) / p;
        log_h = std::min(log_h, rhs);
        log_R += std::log(2.0);
        if (!std::isfinite(log_h) || std::abs(log_h) > 1e6) {
            trace.truncated = true;
            break;
        }
        trace.radii.push_back(std::exp(log_R));
        trace.log_h.push_back(log_h);
    }
    for (double lh : trace.log_h)
        trace.h_values.push_back(lh < -700.0 ? 0.0 : std::exp(lh));
    trace.fitted_exponent = fit_last_half(trace.radii, trace.log_h);
    return trace;
}

PointwiseBound solve_pointwise(double p, double q, double s, double C, double R) {
    if (p == 1.0 || p == q)
        throw Error(Errc::precondition, "degenerate exponents: p = 1 or p = q");
    if (!(p > std::max(1.0, q)))
        throw Error(Errc::precondition, "solve_pointwise requires p > max(1, q)");
    if (!(C > 0.0) || !(R > 0.0))
        throw Error(Errc::precondition, "need C > 0 and R > 0");
    PointwiseBound b;
    const double two_s = 2.0 * s;
    b.branch_smooth = std::pow(C * std::pow(R, -two_s), 1.0 / (p - 1.0));
    b.branch_gradient = std::pow(C * std::pow(R, -q), 1.0 / (p - q));
    b.exponent_smooth = -two_s / (p - 1.0);
    b.exponent_gradient = -q / (p - q);
    b.h_bound = std::max(b.branch_smooth, b.branch_gradient);
    return b;
}

ExponentCheck check_exponent_claim(const std::string& lemma_case, double p, double q, double s,
                                   int N) {
    const double two_s = 2.0 * s;
    ExponentCheck check;
    check.lemma_case = lemma_case;

    auto reject = [&](const std::string& why) {
        throw Error(Errc::precondition, lemma_case + ": " + why);
    };

    if (lemma_case == "2.8a") {
        if (!(q > 1.0) || !(p > 0.0 && p <= 1.0)) reject("requires q > 1 and 0 < p <= 1");
        check.clause = "0 < p <= 1";
        check.claimed = -std::numeric_limits<double>::infinity();
        const auto trace = iterate_doubling(p, q, s, 1.0, 1.0, 1.0, 40);
        check.measured = trace.fitted_exponent;
        check.pass = check.measured < -10.0;
        return check;
    }
    if (lemma_case == "2.8b") {
        const double curve = (two_s - 1.0) * q / (two_s - q);
        if (q > 1.0 && q < two_s && p > 1.0 && p < curve)
            check.clause = "1 < q < 2s and 1 < p < (2s-1)q/(2s-q)";
        else if (q >= two_s && p > 1.0)
            check.clause = "q >= 2s and p > 1";
        else
            reject("needs 1<q<2s with 1<p<(2s-1)q/(2s-q), or q>=2s with p>1");
        check.claimed = -two_s / (p - 1.0);
        const auto trace = iterate_doubling(p, q, s, 1.0, 1.0, 1.0, 60);
        check.measured = trace.fitted_exponent;
        check.pass = std::abs(check.measured - check.claimed) <= 0.02;
        return check;
    }
    if (lemma_case == "2.9a") {
        const double curve = (two_s - 1.0) * q / (two_s - q);
        if (!(q > 1.0 && q < two_s) || std::abs(p - curve) > 1e-12 * std::max(1.0, curve))
            reject("requires 1 < q < 2s and p = (2s-1)q/(2s-q)");
        check.clause = "p on the branch-balance curve";
        check.claimed = -two_s / (p - 1.0);
    } else if (lemma_case == "2.9b") {
        const double q2 = N / (N + 1.0 - two_s);
        const double p_crit = N / (N - two_s);
        if (!(q > q2) || std::abs(p - p_crit) > 1e-12 * p_crit)
            reject("requires q > N/(N+1-2s) and p = N/(N-2s)");
        check.clause = "critical line p = N/(N-2s)";
        check.claimed = -(N - two_s);
    } else {
        reject("unknown lemma case");
    }

    const double r1 = std::pow(2.0, 20), r2 = std::pow(2.0, 40);
    const auto b1 = solve_pointwise(p, q, s, 1.0, r1);
    const auto b2 = solve_pointwise(p, q, s, 1.0, r2);
    check.measured = std::log(b2.h_bound / b1.h_bound) / std::log(r2 / r1);
    check.pass = std::abs(check.measured - check.claimed) <= 0.02;
    return check;
}

} // namespace fraclap::recursion
