#pragma once

#include "fraclap/params.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fraclap {

enum class ProfileKind {
    PowerCap,             // A eps^{-sigma} inside eps, A r^{-sigma} outside
    SmoothBump,           // (1+r^2)^{-sigma/2}
    TruncatedFundamental, // Rbar^{-(N-2s)} inside Rbar, r^{-(N-2s)} outside, optional outer cap at 2R
    LogCritical,          // log(1+r)/r^{N-2s}, optional constant cap inside eps
    Scaled,               // base((R/R0) r)
    SupercriticalFq,      // C (1+r)^{-2 s beta}
    Constant,
    Sum,                  // positive-weighted sum of parts
};

const char* profile_kind_name(ProfileKind k);

// A positive radial function r -> phi(r) with closed-form first and second
// radial derivatives and tail metadata. Immutable; cheap to copy (shared
// implementation), safe for concurrent evaluation.
class RadialProfile {
public:
    double value(double r) const;
    double derivative(double r) const;        // phi'(r), signed
    double second_derivative(double r) const; // phi''(r)

    ProfileKind kind() const;

    // Effective tail exponent: value(r) ~ r^{-sigma_eff} as r -> infinity
    // (times log r when has_log_correction()). Constant tails report 0.
    double sigma_eff() const;
    bool has_log_correction() const;

    // Radii where the profile is only C^0; evaluation of derivatives and of
    // the operator is rejected there.
    const std::vector<double>& corner_radii() const;

    // Radii where value/derivatives change analytic form; quadrature panels
    // split at their preimages. Superset of corner_radii.
    const std::vector<double>& scale_radii() const;

    // Profile is nonincreasing on [monotonicity_radius, infinity).
    double monotonicity_radius() const;

    bool is_corner(double r, double tol_rel = 1e-6) const;

    // |phi'(r)|; throws NON_DIFFERENTIABLE at corner radii.
    double gradient_norm(double r) const;

    nlohmann::json to_json() const;
    static RadialProfile from_json(const nlohmann::json& j);

    // Catalog constructors.
    static RadialProfile power_cap(double sigma, double eps, double amp);
    static RadialProfile smooth_bump(double sigma);
    static RadialProfile truncated_fundamental(int N, double s, double Rbar,
                                               std::optional<double> Rcap = std::nullopt);
    static RadialProfile log_critical(int N, double s,
                                      std::optional<double> eps_cap = std::nullopt);
    static RadialProfile scaled(const RadialProfile& base, double R, double R0);
    static RadialProfile supercritical(double beta, double amp, const ProblemParams& params);
    static RadialProfile constant(double c);
    static RadialProfile sum(std::vector<std::pair<double, RadialProfile>> parts);

    // amp * (*this), via the Sum plumbing kind.
    RadialProfile amplified(double amp) const;

    struct Impl;
    explicit RadialProfile(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    const Impl& impl() const { return *impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

// Corner-radius preimage Rbar(eps) = R [eps / (1 + eps 2^{-N+2s})]^{1/(N-2s)}
// used to build the capped truncated fundamental solution at scale R.
double truncation_radius(int N, double s, double R, double eps);

} // namespace fraclap
