#include "fraclap/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fraclap {

using nlohmann::json;

std::string format_double(double x) {
    char buf[40];
    // %.17g round-trips any double; trim to the shortest representation that
    // still round-trips so CSV output stays readable and deterministic.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

namespace {

json finite_or_string(double x) {
    if (std::isfinite(x)) return x;
    return std::isnan(x) ? json("nan") : json(x > 0 ? "inf" : "-inf");
}

} // namespace

json to_json(const FracLapResult& r) {
    return {{"value", r.value},
            {"err_estimate", r.err_estimate},
            {"scheme", scheme_name(r.scheme)},
            {"n_evaluations", r.n_evaluations},
            {"converged", r.converged}};
}

json to_json(const L2sReport& r) {
    return {{"member", r.member}, {"integral", r.integral}};
}

json to_json(const estimates::DecayFit& f) {
    json points = json::array();
    for (std::size_t i = 0; i < f.radii.size(); ++i)
        points.push_back({{"r", f.radii[i]}, {"value", f.values[i]}, {"used", (bool)f.used[i]}});
    return {{"exponent", f.exponent},
            {"log_corrected", f.log_corrected},
            {"residual", f.residual},
            {"n_used", f.n_used},
            {"points", points}};
}

json to_json(const estimates::LowerBoundReport& r) {
    return {{"pass", r.pass},
            {"min_scaled", r.min_scaled},
            {"max_scaled", r.max_scaled},
            {"ratio", r.ratio},
            {"radii", r.radii},
            {"scaled", r.scaled}};
}

json to_json(const estimates::GammaSignTable& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.sigmas.size(); ++i)
        rows.push_back({{"sigma", t.sigmas[i]}, {"sign", t.signs[i]}});
    return {{"consistent", t.consistent}, {"table", rows}};
}

json to_json(const verifier::Certificate& c) {
    return {{"r_inner", c.r_inner},
            {"r_outer", c.r_outer},
            {"n_grid", c.n_grid},
            {"worst_radius", c.worst_radius},
            {"worst_residual", c.worst_residual},
            {"worst_err", c.worst_err},
            {"status", verifier::cert_status_name(c.status)}};
}

json to_json(const verifier::Threshold& t) {
    return {{"kind", verifier::threshold_kind_name(t.kind)},
            {"value", t.value},
            {"bracket", {t.bracket_lo, t.bracket_hi}},
            {"certified_at", t.certified_at},
            {"certificate", to_json(t.certificate)}};
}

json to_json(const verifier::LogSqueezeReport& r) {
    return {{"C", r.C},
            {"K", r.K},
            {"crossing_radius", r.crossing_radius},
            {"q_above_q2", r.q_above_q2}};
}

json to_json(const verifier::Aux4Report& r) {
    return {{"pass", r.pass},
            {"max_scaled", r.max_scaled},
            {"min_scaled", r.min_scaled},
            {"Rbar", r.Rbar}};
}

json to_json(const recursion::RecursionTrace& t) {
    return {{"radii", t.radii},
            {"log_h", t.log_h},
            {"h_values", t.h_values},
            {"fitted_exponent", t.fitted_exponent},
            {"truncated", t.truncated}};
}

json to_json(const recursion::PointwiseBound& b) {
    return {{"h_bound", b.h_bound},
            {"branch_smooth", b.branch_smooth},
            {"branch_gradient", b.branch_gradient},
            {"exponent_smooth", b.exponent_smooth},
            {"exponent_gradient", b.exponent_gradient}};
}

json to_json(const recursion::ExponentCheck& c) {
    return {{"lemma_case", c.lemma_case},
            {"clause", c.clause},
            {"claimed", finite_or_string(c.claimed)},
            {"measured", c.measured},
            {"pass", c.pass}};
}

json to_json(const phasemap::Boundaries& b) {
    return {{"q1", b.q1}, {"q2", b.q2}, {"p_crit", b.p_crit}};
}

json to_json(const phasemap::RegionLabel& l) {
    return {{"label", phasemap::region_name(l.label)},
            {"qualifiers", phasemap::qualifiers_string(l.qualifiers)}};
}

void write_grid_csv(std::ostream& os, const std::vector<phasemap::GridRow>& rows) {
    os << "q,p,label,qualifiers\n";
    for (const auto& row : rows)
        os << format_double(row.q) << ',' << format_double(row.p) << ','
           << phasemap::region_name(row.label.label) << ','
           << phasemap::qualifiers_string(row.label.qualifiers) << '\n';
}

void write_trace_csv(std::ostream& os, const recursion::RecursionTrace& trace) {
    os << "k,R_k,h_k\n";
    for (std::size_t k = 0; k < trace.radii.size(); ++k)
        os << k << ',' << format_double(trace.radii[k]) << ','
           << format_double(trace.h_values[k]) << '\n';
}

json grid_to_json(const std::vector<phasemap::GridRow>& rows, const phasemap::Boundaries& bd) {
    json arr = json::array();
    for (const auto& row : rows)
        arr.push_back({{"q", row.q}, {"p", row.p},
                       {"label", phasemap::region_name(row.label.label)},
                       {"qualifiers", phasemap::qualifiers_string(row.label.qualifiers)}});
    return {{"boundaries", to_json(bd)}, {"rows", arr}};
}

} // namespace fraclap
