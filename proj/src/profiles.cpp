#include "fraclap/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fraclap {

using nlohmann::json;

const char* profile_kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::PowerCap: return "power_cap";
        case ProfileKind::SmoothBump: return "smooth_bump";
        case ProfileKind::TruncatedFundamental: return "truncated_fundamental";
        case ProfileKind::LogCritical: return "log_critical";
        case ProfileKind::Scaled: return "scaled";
        case ProfileKind::SupercriticalFq: return "supercritical_fq";
        case ProfileKind::Constant: return "constant";
        case ProfileKind::Sum: return "sum";
    }
    return "unknown";
}

struct RadialProfile::Impl {
    ProfileKind kind{};

    double sigma = 0;  // PowerCap, SmoothBump
    double eps = 0;    // PowerCap cap radius / LogCritical cap radius
    double amp = 1;    // PowerCap, SupercriticalFq
    double m = 0;      // N - 2s for TruncatedFundamental / LogCritical
    double Rbar = 0;   // TruncatedFundamental inner corner
    double Rcap = -1;  // TruncatedFundamental outer scale R (corner at 2R); <0 = uncapped
    double factor = 1; // Scaled: R/R0
    double R = 1, R0 = 1;
    double beta = 0;   // SupercriticalFq
    double a = 0;      // SupercriticalFq decay exponent 2 s beta
    double c = 0;      // Constant
    int N = 0;
    double s = 0, p = 0;

    std::shared_ptr<const Impl> base; // Scaled
    std::vector<std::pair<double, std::shared_ptr<const Impl>>> parts; // Sum

    double sigma_eff = 0;
    bool log_corr = false;
    std::vector<double> corners;
    std::vector<double> scales;
    double monot_radius = 0;
};

namespace {

using Impl = RadialProfile::Impl;

double impl_value(const Impl& im, double r);
double impl_deriv(const Impl& im, double r);
double impl_deriv2(const Impl& im, double r);

double impl_value(const Impl& im, double r) {
    switch (im.kind) {
        case ProfileKind::PowerCap:
            return r <= im.eps ? im.amp * std::pow(im.eps, -im.sigma)
                               : im.amp * std::pow(r, -im.sigma);
        case ProfileKind::SmoothBump:
            return std::pow(1.0 + r * r, -0.5 * im.sigma);
        case ProfileKind::TruncatedFundamental: {
            if (r < im.Rbar) return std::pow(im.Rbar, -im.m);
            if (im.Rcap > 0.0 && r >= 2.0 * im.Rcap) return std::pow(2.0 * im.Rcap, -im.m);
            return std::pow(r, -im.m);
        }
        case ProfileKind::LogCritical: {
            if (im.eps > 0.0 && r <= im.eps)
                return std::log1p(im.eps) * std::pow(im.eps, -im.m);
            return std::log1p(r) * std::pow(r, -im.m);
        }
        case ProfileKind::Scaled:
            return impl_value(*im.base, im.factor * r);
        case ProfileKind::SupercriticalFq:
            return im.amp * std::pow(1.0 + r, -im.a);
        case ProfileKind::Constant:
            return im.c;
        case ProfileKind::Sum: {
            double v = 0.0;
            for (const auto& [w, part] : im.parts) v += w * impl_value(*part, r);
            return v;
        }
    }
    return 0.0;
}

double impl_deriv(const Impl& im, double r) {
    switch (im.kind) {
        case ProfileKind::PowerCap:
            return r <= im.eps ? 0.0 : -im.sigma * im.amp * std::pow(r, -im.sigma - 1.0);
        case ProfileKind::SmoothBump:
            return -im.sigma * r * std::pow(1.0 + r * r, -0.5 * im.sigma - 1.0);
        case ProfileKind::TruncatedFundamental: {
            if (r < im.Rbar) return 0.0;
            if (im.Rcap > 0.0 && r >= 2.0 * im.Rcap) return 0.0;
            return -im.m * std::pow(r, -im.m - 1.0);
        }
        case ProfileKind::LogCritical: {
            if (im.eps > 0.0 && r <= im.eps) return 0.0;
            return std::pow(r, -im.m) / (1.0 + r) - im.m * std::log1p(r) * std::pow(r, -im.m - 1.0);
        }
        case ProfileKind::Scaled:
            return im.factor * impl_deriv(*im.base, im.factor * r);
        case ProfileKind::SupercriticalFq:
            return -im.a * im.amp * std::pow(1.0 + r, -im.a - 1.0);
        case ProfileKind::Constant:
            return 0.0;
        case ProfileKind::Sum: {
            double v = 0.0;
            for (const auto& [w, part] : im.parts) v += w * impl_deriv(*part, r);
            return v;
        }
    }
    return 0.0;
}

double impl_deriv2(const Impl& im, double r) {
    switch (im.kind) {
        case ProfileKind::PowerCap:
            return r <= im.eps ? 0.0
                               : im.sigma * (im.sigma + 1.0) * im.amp * std::pow(r, -im.sigma - 2.0);
        case ProfileKind::SmoothBump: {
            const double u = 1.0 + r * r;
            return -im.sigma * std::pow(u, -0.5 * im.sigma - 1.0) +
                   im.sigma * (im.sigma + 2.0) * r * r * std::pow(u, -0.5 * im.sigma - 2.0);
        }
        case ProfileKind::TruncatedFundamental: {
            if (r < im.Rbar) return 0.0;
            if (im.Rcap > 0.0 && r >= 2.0 * im.Rcap) return 0.0;
            return im.m * (im.m + 1.0) * std::pow(r, -im.m - 2.0);
        }
        case ProfileKind::LogCritical: {
            if (im.eps > 0.0 && r <= im.eps) return 0.0;
            const double rp = 1.0 + r;
            return -2.0 * im.m * std::pow(r, -im.m - 1.0) / rp - std::pow(r, -im.m) / (rp * rp) +
                   im.m * (im.m + 1.0) * std::log1p(r) * std::pow(r, -im.m - 2.0);
        }
        case ProfileKind::Scaled:
            return im.factor * im.factor * impl_deriv2(*im.base, im.factor * r);
        case ProfileKind::SupercriticalFq:
            return im.a * (im.a + 1.0) * im.amp * std::pow(1.0 + r, -im.a - 2.0);
        case ProfileKind::Constant:
            return 0.0;
        case ProfileKind::Sum: {
            double v = 0.0;
            for (const auto& [w, part] : im.parts) v += w * impl_deriv2(*part, r);
            return v;
        }
    }
    return 0.0;
}

// Log profile is decreasing where r/(1+r) < m log(1+r); for m >= 1 that is
// all r > 0, otherwise the crossing is found by bisection.
double log_profile_monotonicity_radius(double m) {
    if (m >= 1.0) return 0.0;
    auto g = [m](double r) { return m * std::log1p(r) - r / (1.0 + r); };
    double lo = 1.0 / m - 1.0; // g < 0 here
    double hi = lo + 1.0;
    while (g(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return hi;
}

void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

double RadialProfile::value(double r) const { return impl_value(*impl_, r); }

ProfileKind RadialProfile::kind() const { return impl_->kind; }
double RadialProfile::sigma_eff() const { return impl_->sigma_eff; }
bool RadialProfile::has_log_correction() const { return impl_->log_corr; }
const std::vector<double>& RadialProfile::corner_radii() const { return impl_->corners; }
const std::vector<double>& RadialProfile::scale_radii() const { return impl_->scales; }
double RadialProfile::monotonicity_radius() const { return impl_->monot_radius; }

bool RadialProfile::is_corner(double r, double tol_rel) const {
    for (double c : impl_->corners)
        if (std::abs(r - c) <= tol_rel * std::max(r, c)) return true;
    return false;
}

double RadialProfile::derivative(double r) const {
    if (is_corner(r))
        throw Error(Errc::non_differentiable, "derivative requested at a corner radius");
    return impl_deriv(*impl_, r);
}

double RadialProfile::second_derivative(double r) const {
    if (is_corner(r))
        throw Error(Errc::non_differentiable, "second derivative requested at a corner radius");
    return impl_deriv2(*impl_, r);
}

double RadialProfile::gradient_norm(double r) const { return std::abs(derivative(r)); }

RadialProfile RadialProfile::power_cap(double sigma, double eps, double amp) {
    if (!(sigma > 0.0) || !(eps > 0.0) || !(amp > 0.0))
        throw Error(Errc::bad_profile, "power_cap requires sigma, eps, amp > 0");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::PowerCap;
    im->sigma = sigma;
    im->eps = eps;
    im->amp = amp;
    im->sigma_eff = sigma;
    im->corners = {eps};
    im->scales = {eps};
    im->monot_radius = 0.0;
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::smooth_bump(double sigma) {
    if (!(sigma > 0.0))
        throw Error(Errc::bad_profile, "smooth_bump requires sigma > 0");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::SmoothBump;
    im->sigma = sigma;
    im->sigma_eff = sigma;
    im->scales = {1.0};
    im->monot_radius = 0.0;
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::truncated_fundamental(int N, double s, double Rbar,
                                                   std::optional<double> Rcap) {
    validate_params(ProblemParams{N, s, 1.0, 0.0, 1.0, 1.0});
    if (!(Rbar > 0.0))
        throw Error(Errc::bad_profile, "truncated_fundamental requires Rbar > 0");
    if (Rcap && !(*Rcap >= Rbar))
        throw Error(Errc::bad_profile, "truncated_fundamental requires Rcap >= Rbar");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::TruncatedFundamental;
    im->N = N;
    im->s = s;
    im->m = N - 2.0 * s;
    im->Rbar = Rbar;
    im->Rcap = Rcap.value_or(-1.0);
    im->sigma_eff = Rcap ? 0.0 : im->m;
    im->corners = {Rbar};
    if (Rcap) im->corners.push_back(2.0 * *Rcap);
    im->scales = im->corners;
    im->monot_radius = 0.0;
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::log_critical(int N, double s, std::optional<double> eps_cap) {
    validate_params(ProblemParams{N, s, 1.0, 0.0, 1.0, 1.0});
    if (eps_cap && !(*eps_cap > 0.0))
        throw Error(Errc::bad_profile, "log_critical cap radius must be positive");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::LogCritical;
    im->N = N;
    im->s = s;
    im->m = N - 2.0 * s;
    im->eps = eps_cap.value_or(0.0);
    im->sigma_eff = im->m;
    im->log_corr = true;
    if (eps_cap) im->corners = {*eps_cap};
    im->scales = im->corners;
    im->scales.push_back(1.0);
    sort_unique(im->scales);
    im->monot_radius = std::max(log_profile_monotonicity_radius(im->m),
                                eps_cap.value_or(0.0));
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::scaled(const RadialProfile& base, double R, double R0) {
    if (base.kind() != ProfileKind::SmoothBump)
        throw Error(Errc::bad_profile, "scaled profiles take a smooth_bump base");
    if (!(R > 0.0) || !(R0 > 0.0))
        throw Error(Errc::bad_profile, "scaled requires R, R0 > 0");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::Scaled;
    im->R = R;
    im->R0 = R0;
    im->factor = R / R0;
    im->base = base.impl_;
    im->sigma_eff = base.sigma_eff();
    for (double c : base.corner_radii()) im->corners.push_back(c / im->factor);
    for (double c : base.scale_radii()) im->scales.push_back(c / im->factor);
    im->monot_radius = base.monotonicity_radius() / im->factor;
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::supercritical(double beta, double amp, const ProblemParams& params) {
    validate_params(params);
    const double p_crit = critical_p(params.N, params.s);
    if (!(params.p > p_crit))
        throw Error(Errc::precondition, "supercritical profile requires p > N/(N-2s)");
    const double lo = 1.0 / (params.p - 1.0);
    const double hi = (params.N - 2.0 * params.s) / (2.0 * params.s);
    if (!(beta > lo) || !(beta < hi))
        throw Error(Errc::precondition, "beta must lie in (1/(p-1), (N-2s)/(2s))");
    if (!(amp > 0.0))
        throw Error(Errc::bad_profile, "amplitude must be positive");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::SupercriticalFq;
    im->beta = beta;
    im->amp = amp;
    im->N = params.N;
    im->s = params.s;
    im->p = params.p;
    im->a = 2.0 * params.s * beta;
    im->sigma_eff = im->a;
    im->scales = {1.0};
    im->monot_radius = 0.0;
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::constant(double c) {
    if (!(c > 0.0))
        throw Error(Errc::bad_profile, "constant profile must be positive");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::Constant;
    im->c = c;
    im->sigma_eff = 0.0;
    im->monot_radius = 0.0;
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::sum(std::vector<std::pair<double, RadialProfile>> parts) {
    if (parts.empty())
        throw Error(Errc::bad_profile, "sum needs at least one part");
    auto im = std::make_shared<Impl>();
    im->kind = ProfileKind::Sum;
    im->sigma_eff = std::numeric_limits<double>::infinity();
    for (auto& [w, part] : parts) {
        if (!(w > 0.0))
            throw Error(Errc::bad_profile, "sum weights must be positive");
        if (part.sigma_eff() < im->sigma_eff) {
            im->sigma_eff = part.sigma_eff();
            im->log_corr = part.has_log_correction();
        }
        im->monot_radius = std::max(im->monot_radius, part.monotonicity_radius());
        for (double c : part.corner_radii()) im->corners.push_back(c);
        for (double c : part.scale_radii()) im->scales.push_back(c);
        im->parts.emplace_back(w, part.impl_);
    }
    sort_unique(im->corners);
    sort_unique(im->scales);
    return RadialProfile(std::move(im));
}

RadialProfile RadialProfile::amplified(double amp) const {
    return sum({{amp, *this}});
}

double truncation_radius(int N, double s, double R, double eps) {
    if (!(R > 0.0) || !(eps > 0.0))
        throw Error(Errc::precondition, "truncation_radius requires R, eps > 0");
    const double m = N - 2.0 * s;
    return R * std::pow(eps / (1.0 + eps * std::pow(2.0, -m)), 1.0 / m);
}

json RadialProfile::to_json() const {
    const Impl& im = *impl_;
    json j;
    j["kind"] = profile_kind_name(im.kind);
    switch (im.kind) {
        case ProfileKind::PowerCap:
            j["sigma"] = im.sigma;
            j["eps"] = im.eps;
            j["amp"] = im.amp;
            break;
        case ProfileKind::SmoothBump:
            j["sigma"] = im.sigma;
            break;
        case ProfileKind::TruncatedFundamental:
            j["N"] = im.N;
            j["s"] = im.s;
            j["Rbar"] = im.Rbar;
            if (im.Rcap > 0.0) j["Rcap"] = im.Rcap;
            break;
        case ProfileKind::LogCritical:
            j["N"] = im.N;
            j["s"] = im.s;
            if (im.eps > 0.0) j["eps_cap"] = im.eps;
            break;
        case ProfileKind::Scaled:
            j["R"] = im.R;
            j["R0"] = im.R0;
            j["base"] = RadialProfile(im.base).to_json();
            break;
        case ProfileKind::SupercriticalFq:
            j["beta"] = im.beta;
            j["amp"] = im.amp;
            j["N"] = im.N;
            j["s"] = im.s;
            j["p"] = im.p;
            break;
        case ProfileKind::Constant:
            j["c"] = im.c;
            break;
        case ProfileKind::Sum: {
            json arr = json::array();
            for (const auto& [w, part] : im.parts)
                arr.push_back({{"weight", w}, {"profile", RadialProfile(part).to_json()}});
            j["parts"] = arr;
            break;
        }
    }
    return j;
}

RadialProfile RadialProfile::from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power_cap")
        return power_cap(j.at("sigma"), j.at("eps"), j.value("amp", 1.0));
    if (kind == "smooth_bump")
        return smooth_bump(j.at("sigma"));
    if (kind == "truncated_fundamental") {
        std::optional<double> cap;
        if (j.contains("Rcap")) cap = j.at("Rcap").get<double>();
        return truncated_fundamental(j.at("N"), j.at("s"), j.at("Rbar"), cap);
    }
    if (kind == "log_critical") {
        std::optional<double> cap;
        if (j.contains("eps_cap")) cap = j.at("eps_cap").get<double>();
        return log_critical(j.at("N"), j.at("s"), cap);
    }
    if (kind == "scaled")
        return scaled(from_json(j.at("base")), j.at("R"), j.at("R0"));
    if (kind == "supercritical_fq") {
        ProblemParams params;
        params.N = j.at("N");
        params.s = j.at("s");
        params.p = j.at("p");
        return supercritical(j.at("beta"), j.value("amp", 1.0), params);
    }
    if (kind == "constant")
        return constant(j.at("c"));
    if (kind == "sum") {
        std::vector<std::pair<double, RadialProfile>> parts;
        for (const auto& item : j.at("parts"))
            parts.emplace_back(item.at("weight"), from_json(item.at("profile")));
        return sum(std::move(parts));
    }
    throw Error(Errc::bad_profile, "unknown profile kind '" + kind + "'");
}

} // namespace fraclap
