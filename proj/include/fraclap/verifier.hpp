#pragma once

#include "fraclap/fraclap.hpp"

#include <functional>
#include <vector>

namespace fraclap::verifier {

enum class CertStatus { Certified, Falsified, Inconclusive };
const char* cert_status_name(CertStatus s);

enum class RequiredSign { NonNegative, NonPositive };

struct ResidualValue {
    double value = 0.0;
    double err = 0.0;
};

// Which equation the residual refers to: the full problem
// (-Delta)^s u + |grad u|^q - lambda u^p, or the homogeneous
// (-Delta)^s u + |grad u|^q.
struct ResidualSpec {
    bool homogeneous = false;
    ProblemParams params{};
};

ResidualSpec homogeneous_spec(int N, double s, double q);
ResidualSpec problem_spec(const ProblemParams& params);

ResidualValue residual(const ProblemParams& params, const RadialProfile& u, double r,
                       const Tolerance& tol = {});
ResidualValue residual_homogeneous(const RadialProfile& u, int N, double s, double q, double r,
                                   const Tolerance& tol = {});
ResidualValue residual_of(const ResidualSpec& spec, const RadialProfile& u, double r,
                          const Tolerance& tol = {});

// Sign certification over a geometric grid. CERTIFIED requires the sign to
// hold with margin exceeding the error bound at every sample; FALSIFIED
// requires a violation with margin at some sample; otherwise INCONCLUSIVE.
struct Certificate {
    double r_inner = 0.0, r_outer = 0.0;
    int n_grid = 0;
    double worst_radius = 0.0;
    double worst_residual = 0.0; // residual at the adversarial sample
    double worst_err = 0.0;
    CertStatus status = CertStatus::Inconclusive;
};

Certificate certify_sign(const ResidualSpec& spec, const RadialProfile& u, const Annulus& annulus,
                         int n_grid, RequiredSign required, const Tolerance& tol = {},
                         bool stop_at_violation = false);

// Default certification grid density: 64 points per decade.
int default_n_grid(const Annulus& annulus);

struct Threshold {
    enum class Kind { Lambda0, R0Min, AmplitudeMax };
    Kind kind{};
    double value = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    double certified_at = 0.0;
    Certificate certificate; // at certified_at
};

const char* threshold_kind_name(Threshold::Kind k);

// Theorem 1.3 construction cases.
enum class ExistenceCase { I, II, III, IV, V, VI };
const char* existence_case_name(ExistenceCase c);

// Profile recipe for a case: scaled smooth bump A * phi(k r) with sigma, k and
// A chosen per the case's proof, using constants measured from the operator
// and gradient of the base bump instead of the abstract c0, c1, c3.
struct CaseRecipe {
    ExistenceCase case_id{};
    double sigma = 0.0;
    double k = 1.0;         // R / R0
    double amplitude = 1.0;
    double lambda_guess = 1.0;
    double c_upper = 0.0;   // measured operator bound coefficient (c1 or c3)
    double c_lower = 0.0;   // measured gradient lower coefficient (c0)
};

CaseRecipe design_case_profile(ExistenceCase c, const ProblemParams& base, const Annulus& annulus,
                               double k_hint = 4.0, const Tolerance& tol = {1e-6, 1e-30, 40});
RadialProfile case_profile(const CaseRecipe& recipe, double R0);

// Bisection for the lambda threshold of cases III-VI: largest lambda whose
// certificate passes on the given annulus for the recipe profile.
Threshold estimate_lambda0(ExistenceCase c, const ProblemParams& base, const Annulus& annulus,
                           double bisect_tol = 0.05, int n_grid = 0,
                           const Tolerance& tol = {1e-6, 1e-30, 40});

// Geometric bisection for the smallest certifiable R0 in the q = 1 cases
// (II and V); the annulus is A(R0, 100 R0) per candidate.
Threshold estimate_R0_threshold(ExistenceCase c, const ProblemParams& base,
                                double bisect_tol = 0.05, int n_grid = 0,
                                const Tolerance& tol = {1e-6, 1e-30, 40}, double k_hint = 1.0);

// Largest amplitude A with a CERTIFIED certificate for family(A); downward
// closure is the caller's to verify (certificates at A/2, A/10).
Threshold search_amplitude(const std::function<RadialProfile(double)>& family,
                           const ResidualSpec& spec, const Annulus& annulus, int n_grid,
                           RequiredSign required, double bisect_tol = 0.05,
                           const Tolerance& tol = {1e-6, 1e-30, 40}, double a_start = 1.0);

// m(R1, R2) = min of the profile over the annulus (sampled; exact at an
// endpoint for monotone profiles).
double min_annulus(const RadialProfile& u, const Annulus& annulus, int n_grid);

// The contradiction mechanism of the critical nonexistence proof: C log(1+r)
// crosses any fixed K at r* = e^{K/C} - 1.
struct LogSqueezeReport {
    double C = 0.0, K = 0.0;
    double crossing_radius = 0.0;
    bool q_above_q2 = false;
};

LogSqueezeReport verify_critical_log_squeeze(int N, double s, double q, double C, double K);

// Sign + decay check on the capped truncated fundamental solution:
// (-Delta)^s w_R <= -c/|x|^N on A(R/2, 2R).
struct Aux4Report {
    bool pass = false;
    double max_scaled = 0.0; // max over grid of ((-Delta)^s w_R + err) * r^N
    double min_scaled = 0.0;
    double Rbar = 0.0;
};

Aux4Report check_truncated_fundamental_bound(int N, double s, double R, double eps, int n_grid,
                                             const Tolerance& tol = {1e-6, 1e-30, 40});

} // namespace fraclap::verifier
