#include "fraclap/phasemap.hpp"

#include "fraclap/parallel.hpp"

#include <cmath>

namespace fraclap::phasemap {

const char* region_name(Region r) {
    switch (r) {
        case Region::NonexistSubcrit: return "NONEXIST_SUBCRIT";
        case Region::NonexistCrit: return "NONEXIST_CRIT";
        case Region::ExistI: return "EXIST_I";
        case Region::ExistII: return "EXIST_II";
        case Region::ExistIII: return "EXIST_III";
        case Region::ExistIV: return "EXIST_IV";
        case Region::ExistV: return "EXIST_V";
        case Region::ExistVI: return "EXIST_VI";
        case Region::ExistSupercrit: return "EXIST_SUPERCRIT";
        case Region::Open: return "OPEN";
        case Region::Unclassified: return "UNCLASSIFIED";
    }
    return "UNKNOWN";
}

std::string qualifiers_string(unsigned qualifiers) {
    std::string out;
    if (qualifiers & NeedsSmallLambda) out += "NEEDS_SMALL_LAMBDA";
    if (qualifiers & NeedsLargeR0) {
        if (!out.empty()) out += ";";
        out += "NEEDS_LARGE_R0";
    }
    return out;
}

Boundaries boundaries(int N, double s) {
    validate_params(ProblemParams{N, s, 1.0, 0.0, 1.0, 1.0});
    return {q1_threshold(N, s), q2_threshold(N, s), critical_p(N, s)};
}

double curve_a(double q, int N, double s) {
    (void)N;
    const double two_s = 2.0 * s;
    if (!(q < two_s))
        throw Error(Errc::precondition, "curve_a is defined for q < 2s");
    return (two_s - 1.0) * q / (two_s - q);
}

double curve_b(double q, int N, double s) {
    const double n2s = N + 2.0 * s;
    if (!(q < n2s))
        throw Error(Errc::precondition, "curve_b is defined for q < N+2s");
    return n2s * q / (n2s - q);
}

RegionLabel classify(int N, double s, double p, double q) {
    validate_params(ProblemParams{N, s, p, q, 1.0, 1.0});
    const auto bd = boundaries(N, s);

    // Nonexistence first.
    if (q > 1.0 && q < bd.q2 && p < curve_a(q, N, s)) return {Region::NonexistSubcrit, 0};
    if (q >= bd.q2 && p < bd.p_crit) return {Region::NonexistSubcrit, 0};
    if (p == bd.p_crit && q > bd.q2) return {Region::NonexistCrit, 0};

    // Existence constructions, cases i-vi in order.
    if (p == bd.p_crit && q > 0.0 && q < 1.0) return {Region::ExistI, 0};
    if (p == bd.p_crit && q == 1.0) return {Region::ExistII, NeedsLargeR0};
    if (p == bd.p_crit && q > 1.0 && q <= bd.q2) return {Region::ExistIII, NeedsSmallLambda};
    if (q > bd.q1 && q < bd.q2 && p >= curve_a(q, N, s) && p < bd.p_crit)
        return {Region::ExistIV, NeedsSmallLambda};
    if (q > 0.0 && q < bd.q1 && p >= curve_b(q, N, s) && p < bd.p_crit) {
        unsigned quals = NeedsSmallLambda;
        if (q == 1.0) quals |= NeedsLargeR0;
        return {Region::ExistV, quals};
    }
    if (q == bd.q1 && p > (N + 2.0 * s) / N && p < bd.p_crit)
        return {Region::ExistVI, NeedsSmallLambda};

    if (p > bd.p_crit) return {Region::ExistSupercrit, 0};

    // The open band between the nonexistence and construction boundaries.
    if (q > 0.0 && q <= bd.q1 && p >= curve_a(q, N, s) && p < curve_b(q, N, s))
        return {Region::Open, 0};

    return {Region::Unclassified, 0};
}

std::vector<GridRow> classify_grid(int N, double s, const GridOptions& opts, int jobs) {
    if (opts.resolution < 16)
        throw Error(Errc::precondition, "grid resolution must be at least 16");
    if (!(opts.q_min > 0.0) || !(opts.p_min > 0.0) || !(opts.q_max > opts.q_min) ||
        !(opts.p_max > opts.p_min))
        throw Error(Errc::precondition, "grid ranges must be positive and increasing");
    const int res = opts.resolution;
    std::vector<GridRow> rows(static_cast<std::size_t>(res) * res);
    parallel_for(res, jobs, [&](int i) {
        const double q = opts.q_min + (opts.q_max - opts.q_min) * i / (res - 1.0);
        for (int j = 0; j < res; ++j) {
            const double p = opts.p_min + (opts.p_max - opts.p_min) * j / (res - 1.0);
            rows[static_cast<std::size_t>(i) * res + j] = {q, p, classify(N, s, p, q)};
        }
    });
    return rows;
}

} // namespace fraclap::phasemap
