#pragma once

#include "fraclap/errors.hpp"

namespace fraclap {

// log|Gamma(x)| together with the sign of Gamma(x). sign = 0 flags a pole
// (x a nonpositive integer).
struct SignedLogGamma {
    double log_abs;
    int sign;
};

SignedLogGamma signed_log_gamma(double x);

// Normalization C_{N,s} = 4^s Gamma(N/2+s) / (pi^{N/2} |Gamma(-s)|), the
// constant that gives the operator the Fourier symbol |xi|^{2s}. Accepts any
// N >= 1 and 0 < s < 1 (wider than ProblemParams because it is also used for
// cross-checks like C_{1,1/2} = 1/pi).
double normalization_constant(int N, double s);

// gamma_sigma = 2^{2s} G((N-sigma)/2) G((2s+sigma)/2) / (G(sigma/2) G((N-2s-sigma)/2)),
// so that (-Delta)^s |x|^{-sigma} = gamma_sigma |x|^{-sigma-2s}. Defined for
// sigma in (-2s, N); returns exactly 0 at the denominator poles sigma = 0 and
// sigma = N-2s. The two denominator factors can have negative arguments, hence
// the sign bookkeeping.
double gamma_sigma(double sigma, int N, double s);

// (-Delta)^s applied to the pure power |x|^{-sigma}: gamma_sigma * r^{-sigma-2s}.
double eval_power_exact(double sigma, double r, int N, double s);

// |S^{N-1}| = 2 pi^{N/2} / Gamma(N/2).
double sphere_area(int N);

// int_0^pi sin^k(t) dt = sqrt(pi) Gamma((k+1)/2) / Gamma(k/2 + 1).
double sin_power_integral(int k);

} // namespace fraclap
