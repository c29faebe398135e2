#include "fraclap/estimates.hpp"

#include "fraclap/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace fraclap::estimates {

DecayFit fit_decay_exponent(const RadialProfile& profile, int N, double s, double r_min,
                            double r_max, int n_samples, bool divide_log, const Tolerance& tol,
                            int jobs) {
    if (n_samples < 4)
        throw Error(Errc::precondition, "decay fit needs at least 4 samples");
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw Error(Errc::precondition, "need 0 < r_min < r_max");
    if (r_min < profile.monotonicity_radius())
        throw Error(Errc::precondition, "r_min below the profile's monotonicity radius");

    DecayFit fit;
    fit.log_corrected = divide_log;
    fit.radii.resize(n_samples);
    fit.values.resize(n_samples, 0.0);
    fit.used.assign(n_samples, false);
    const double ratio = std::log(r_max / r_min);
    for (int i = 0; i < n_samples; ++i)
        fit.radii[i] = r_min * std::exp(ratio * i / (n_samples - 1.0));

    std::vector<double> xs(n_samples), ys(n_samples);
    parallel_for(n_samples, jobs, [&](int i) {
        const double r = fit.radii[i];
        const auto res = eval_radial(profile, N, s, r, tol);
        fit.values[i] = res.value;
        if (std::abs(res.value) <= res.err_estimate) return; // INCONCLUSIVE_POINT
        double y = std::log(std::abs(res.value));
        if (divide_log) y -= std::log(std::log(r));
        xs[i] = std::log(r);
        ys[i] = y;
        fit.used[i] = true;
    });

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int i = 0; i < n_samples; ++i) {
        if (!fit.used[i]) continue;
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
        ++n;
    }
    fit.n_used = n;
    if (n < 4)
        throw Error(Errc::inconclusive, "fewer than 4 usable points in the decay fit");
    const double denom = n * sxx - sx * sx;
    fit.exponent = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.exponent * sx) / n;
    for (int i = 0; i < n_samples; ++i) {
        if (!fit.used[i]) continue;
        fit.residual = std::max(fit.residual,
                                std::abs(ys[i] - (intercept + fit.exponent * xs[i])));
    }
    return fit;
}

LowerBoundReport check_lower_bound_sigma_gt_N(const RadialProfile& profile, int N, double s,
                                              const std::vector<double>& radii,
                                              const Tolerance& tol) {
    if (!(profile.sigma_eff() > static_cast<double>(N)))
        throw Error(Errc::precondition, "lower-bound check requires sigma_eff > N");
    LowerBoundReport rep;
    rep.radii = radii;
    const double power = N + 2.0 * s;
    for (double r : radii) {
        const auto res = eval_radial(profile, N, s, r, tol);
        if (res.err_estimate > 0.5 * std::abs(res.value))
            throw Error(Errc::inconclusive, "operator value too noisy for the lower-bound check");
        rep.scaled.push_back(std::abs(res.value) * std::pow(r, power));
    }
    rep.min_scaled = *std::min_element(rep.scaled.begin(), rep.scaled.end());
    rep.max_scaled = *std::max_element(rep.scaled.begin(), rep.scaled.end());
    rep.ratio = rep.max_scaled / rep.min_scaled;
    rep.pass = rep.min_scaled > 0.0 && rep.ratio < 3.0;
    return rep;
}

GammaSignTable gamma_sign_profile(int N, double s, int n_grid) {
    if (n_grid < 8)
        throw Error(Errc::precondition, "sign profile needs at least 8 grid points");
    GammaSignTable table;
    const double two_s = 2.0 * s;
    const double margin = (N + two_s) * 1e-4;
    const double lo = -two_s + margin, hi = N - margin;
    table.consistent = true;
    for (int i = 0; i < n_grid; ++i) {
        const double sigma = lo + (hi - lo) * i / (n_grid - 1.0);
        const double g = gamma_sigma(sigma, N, s);
        const int sign = g > 0.0 ? 1 : (g < 0.0 ? -1 : 0);
        table.sigmas.push_back(sigma);
        table.signs.push_back(sign);
        const bool negative_zone = (sigma < 0.0) || (sigma > N - two_s);
        const bool positive_zone = (sigma > 0.0) && (sigma < N - two_s);
        if (negative_zone && sign != -1) table.consistent = false;
        if (positive_zone && sign != 1) table.consistent = false;
    }
    return table;
}

} // namespace fraclap::estimates
