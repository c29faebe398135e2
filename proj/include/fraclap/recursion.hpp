#pragma once

#include "fraclap/errors.hpp"

#include <string>
#include <vector>

namespace fraclap::recursion {

// Saturated iteration of h(2R)^p <= C (h(R)/R^{2s} + h(R)^q/R^q): the worst
// sequence consistent with the inequality, clamped by monotonicity. Iterated
// in log space so steep decays never underflow.
struct RecursionTrace {
    std::vector<double> radii;    // R_k = 2^k R0
    std::vector<double> log_h;
    std::vector<double> h_values; // exp(log_h); 0.0 when below double range
    double fitted_exponent = 0.0; // OLS slope of log h vs log R, last half
    bool truncated = false;
};

RecursionTrace iterate_doubling(double p, double q, double s, double C, double h0, double R0,
                                int n_steps);

// Largest h satisfying h^p <= C (h/R^{2s} + h^q/R^q) at a single radius:
// the max of the two balanced branches, which bounds the true solution
// within a factor 2^{1/(p-1)} v 2^{1/(p-q)}.
struct PointwiseBound {
    double h_bound = 0.0;
    double branch_smooth = 0.0;   // (C/R^{2s})^{1/(p-1)}
    double branch_gradient = 0.0; // (C/R^q)^{1/(p-q)}
    double exponent_smooth = 0.0;   // -2s/(p-1)
    double exponent_gradient = 0.0; // -q/(p-q)
};

PointwiseBound solve_pointwise(double p, double q, double s, double C, double R);

// Compares the saturated/pointwise exponent against the target lemma case's
// claim. Cases: "2.8a", "2.8b", "2.9a", "2.9b".
struct ExponentCheck {
    std::string lemma_case;
    std::string clause;      // which hypothesis clause admitted the parameters
    double claimed = 0.0;    // -inf encodes "steeper than every power"
    double measured = 0.0;
    bool pass = false;
};

ExponentCheck check_exponent_claim(const std::string& lemma_case, double p, double q, double s,
                                   int N);

} // namespace fraclap::recursion
