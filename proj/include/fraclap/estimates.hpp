#pragma once

#include "fraclap/fraclap.hpp"

#include <vector>

namespace fraclap::estimates {

// Least-squares decay fit of log|(-Delta)^s phi| against log r over
// geometrically spaced radii. INCONCLUSIVE points (operator value
// indistinguishable from zero) are dropped, never coerced.
struct DecayFit {
    double exponent = 0.0;
    bool log_corrected = false;
    double residual = 0.0; // max |fit - data| over used points
    std::vector<double> radii;
    std::vector<double> values;     // operator values at radii (0 where dropped)
    std::vector<bool> used;         // point entered the regression
    int n_used = 0;
};

DecayFit fit_decay_exponent(const RadialProfile& profile, int N, double s, double r_min,
                            double r_max, int n_samples, bool divide_log,
                            const Tolerance& tol = {1e-6, 1e-30, 40}, int jobs = 1);

// Lemma-style lower-bound window for sigma_eff > N: |(-Delta)^s phi| * r^{N+2s}
// stays inside a bounded positive window across the sampled radii.
struct LowerBoundReport {
    bool pass = false;
    double min_scaled = 0.0;
    double max_scaled = 0.0;
    double ratio = 0.0;
    std::vector<double> radii;
    std::vector<double> scaled; // |value| * r^{N+2s}
};

LowerBoundReport check_lower_bound_sigma_gt_N(const RadialProfile& profile, int N, double s,
                                              const std::vector<double>& radii,
                                              const Tolerance& tol = {1e-6, 1e-30, 40});

// Sign table of gamma_sigma over a uniform grid in (-2s + margin, N - margin):
// negative on (-2s,0) and (N-2s,N), positive on (0,N-2s), zeros at the ends.
struct GammaSignTable {
    std::vector<double> sigmas;
    std::vector<int> signs;
    bool consistent = false; // matches the predicted sign lattice
};

GammaSignTable gamma_sign_profile(int N, double s, int n_grid);

} // namespace fraclap::estimates
