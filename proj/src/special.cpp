#include "fraclap/special.hpp"

#include <cmath>
#include <limits>

namespace fraclap {

SignedLogGamma signed_log_gamma(double x) {
    if (x > 0.0)
        return {std::lgamma(x), 1};
    if (x == std::floor(x))
        return {std::numeric_limits<double>::infinity(), 0}; // pole
    // Gamma alternates sign between consecutive negative integers:
    // positive on (-2,-1), negative on (-1,0), etc.
    const double k = std::floor(-x); // x in (-(k+1), -k)
    const int sign = (static_cast<long long>(k) % 2 == 0) ? -1 : 1;
    return {std::lgamma(x), sign};
}

double normalization_constant(int N, double s) {
    if (N < 1)
        throw Error(Errc::reject_dimension, "N >= 1 required");
    if (!(s > 0.0) || !(s < 1.0))
        throw Error(Errc::reject_s_range, "s must lie in (0, 1)");
    // lgamma(-s) is log|Gamma(-s)|, which is what the formula needs.
    const double v = s * std::log(4.0) + std::lgamma(0.5 * N + s) -
                     0.5 * N * std::log(M_PI) - std::lgamma(-s);
    return std::exp(v);
}

double gamma_sigma(double sigma, int N, double s) {
    const double two_s = 2.0 * s;
    if (!(sigma > -two_s) || !(sigma < static_cast<double>(N)))
        throw Error(Errc::sigma_out_of_range, "sigma must lie in (-2s, N)");

    const SignedLogGamma a1 = signed_log_gamma(0.5 * (N - sigma));
    const SignedLogGamma a2 = signed_log_gamma(0.5 * (two_s + sigma));
    const SignedLogGamma b1 = signed_log_gamma(0.5 * sigma);
    const SignedLogGamma b2 = signed_log_gamma(0.5 * (N - two_s - sigma));

    // Denominator pole => gamma vanishes (sigma = 0 or sigma = N-2s).
    if (b1.sign == 0 || b2.sign == 0)
        return 0.0;

    const double log_abs = two_s * std::log(2.0) + a1.log_abs + a2.log_abs - b1.log_abs - b2.log_abs;
    const int sign = a1.sign * a2.sign * b1.sign * b2.sign;
    return sign * std::exp(log_abs);
}

double eval_power_exact(double sigma, double r, int N, double s) {
    if (!(r > 0.0))
        throw Error(Errc::precondition, "r must be positive");
    return gamma_sigma(sigma, N, s) * std::pow(r, -sigma - 2.0 * s);
}

double sphere_area(int N) {
    return 2.0 * std::exp(0.5 * N * std::log(M_PI) - std::lgamma(0.5 * N));
}

double sin_power_integral(int k) {
    return std::exp(0.5 * std::log(M_PI) + std::lgamma(0.5 * (k + 1)) - std::lgamma(0.5 * k + 1.0));
}

} // namespace fraclap
