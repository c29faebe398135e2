#pragma once

#include "fraclap/params.hpp"
#include "fraclap/profiles.hpp"
#include "fraclap/special.hpp"

namespace fraclap {

enum class Scheme { SecondDifference, DirectPV };

const char* scheme_name(Scheme s);

struct FracLapResult {
    double value = 0.0;
    double err_estimate = 0.0;
    Scheme scheme = Scheme::SecondDifference;
    long long n_evaluations = 0;
    bool converged = true; // false = TOLERANCE_NOT_MET, value is best effort
};

// (-Delta)^s u at radius r via the absolutely convergent second-difference
// form: C_{N,s}/2 * int_0^inf rho^{-1-2s} [sphere integral of the second
// difference] drho, with the angular integral reduced to one dimension. The
// rho -> 0 end is handled by an analytic Taylor zone, the tail by the
// substitution rho -> r x^{-1/(2s)}; panels split exactly at the preimages of
// the profile's corner and scale radii.
FracLapResult eval_radial(const RadialProfile& u, int N, double s, double r,
                          const Tolerance& tol = {});

// Same quantity via the one-sided principal-value kernel with symmetric
// excision of the ball B_delta(x) and a Taylor correction for the excised
// ball. Discretized with adaptive Simpson, independently of eval_radial.
FracLapResult eval_radial_direct(const RadialProfile& u, int N, double s, double r,
                                 const Tolerance& tol = {});

// Weighted-tail integrability: int |u| / (1 + |x|^{N+2s}) dx.
struct L2sReport {
    bool member = false;
    double integral = 0.0; // finite estimate when member
};

L2sReport check_L2s_membership(const RadialProfile& u, int N, double s,
                               const Tolerance& tol = {});

// Exponent-level membership rule: a tail ~ r^{-sigma_eff} is integrable
// against (1+|x|^{N+2s})^{-1} iff sigma_eff > -2s (growth slower than r^{2s}).
bool l2s_member_for_exponent(double sigma_eff, double s);

} // namespace fraclap
