#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace fraclap {

struct QuadOutcome {
    double value = 0.0;
    double err = 0.0;     // accumulated |I_coarse - I_fine| over accepted panels
    double abs_value = 0.0; // integral of |f|, for relative-noise bookkeeping
    bool converged = true;
};

namespace quad_detail {

// 7-point Gauss-Legendre on [-1,1].
inline constexpr double gl7_x[7] = {
    -0.9491079123427585245262, -0.7415311855993944398639, -0.4058451513773971669066,
    0.0,
    0.4058451513773971669066, 0.7415311855993944398639, 0.9491079123427585245262};
inline constexpr double gl7_w[7] = {
    0.1294849661688696932706, 0.2797053914892766679015, 0.3818300505051189449504,
    0.4179591836734693877551,
    0.3818300505051189449504, 0.2797053914892766679015, 0.1294849661688696932706};

// 15-point Gauss-Legendre on [-1,1].
inline constexpr double gl15_x[15] = {
    -0.9879925180204854284896, -0.9372733924007059043077, -0.8482065834104272162006,
    -0.7244177313601700474162, -0.5709721726085388475372, -0.3941513470775633698972,
    -0.2011940939974345223006, 0.0,
    0.2011940939974345223006, 0.3941513470775633698972, 0.5709721726085388475372,
    0.7244177313601700474162, 0.8482065834104272162006, 0.9372733924007059043077,
    0.9879925180204854284896};
inline constexpr double gl15_w[15] = {
    0.0307532419961172683546, 0.0703660474881081247093, 0.1071592204671719350119,
    0.1395706779261543144478, 0.1662692058169939335532, 0.1861610000155622110268,
    0.1984314853271115764561, 0.2025782419255612728806,
    0.1984314853271115764561, 0.1861610000155622110268, 0.1662692058169939335532,
    0.1395706779261543144478, 0.1071592204671719350119, 0.0703660474881081247093,
    0.0307532419961172683546};

struct Panel {
    double a, b;
    double i7, i15, iabs;
    double err() const { return std::abs(i15 - i7); }
};

template <class F>
Panel make_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s7 = 0.0, s15 = 0.0, sabs = 0.0;
    for (int i = 0; i < 7; ++i) s7 += gl7_w[i] * f(mid + half * gl7_x[i]);
    for (int i = 0; i < 15; ++i) {
        const double v = f(mid + half * gl15_x[i]);
        s15 += gl15_w[i] * v;
        sabs += gl15_w[i] * std::abs(v);
    }
    return Panel{a, b, half * s7, half * s15, half * sabs};
}

} // namespace quad_detail

// Adaptive Gauss-Legendre integration over [a,b] with mandatory split points.
// Refinement is worst-panel-first with a deterministic tie break, so results
// are bit-identical across runs and thread counts.
template <class F>
QuadOutcome integrate_adaptive(F&& f, double a, double b, std::vector<double> splits,
                               double rel_tol, double abs_tol, int max_depth,
                               int panel_budget = 2000, double noise_floor_rel = 5e-15) {
    using quad_detail::Panel;
    QuadOutcome out;
    if (!(b > a)) return out;

    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());

    struct Node {
        Panel p;
        int depth;
    };
    std::vector<Node> nodes;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        if (splits[i] < a || splits[i + 1] > b) continue;
        if (!(splits[i + 1] > splits[i])) continue;
        nodes.push_back({quad_detail::make_panel(f, splits[i], splits[i + 1]), 0});
    }
    if (nodes.empty()) nodes.push_back({quad_detail::make_panel(f, a, b), 0});

    auto totals = [&nodes]() {
        double v = 0.0, e = 0.0, av = 0.0;
        for (const auto& n : nodes) {
            v += n.p.i15;
            e += n.p.err();
            av += n.p.iabs;
        }
        return std::array<double, 3>{v, e, av};
    };

    while (true) {
        const auto [value, err, absval] = totals();
        // The noise floor stops refinement once the remaining discrepancy is
        // dominated by roundoff of the absolute integral (e.g. integrands that
        // cancel exactly, like spherical means of the Newtonian potential).
        const double target = std::max({abs_tol, rel_tol * std::abs(value),
                                        noise_floor_rel * absval});
        if (err <= target) break;
        // pick worst panel, deterministic tie break on left endpoint
        std::size_t worst = nodes.size();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].depth >= max_depth) continue;
            if (worst == nodes.size() || nodes[i].p.err() > nodes[worst].p.err() ||
                (nodes[i].p.err() == nodes[worst].p.err() && nodes[i].p.a < nodes[worst].p.a))
                worst = i;
        }
        if (worst == nodes.size() || static_cast<int>(nodes.size()) >= panel_budget) {
            out.converged = false;
            break;
        }
        const Panel old = nodes[worst].p;
        const int d = nodes[worst].depth;
        const double mid = 0.5 * (old.a + old.b);
        nodes[worst] = {quad_detail::make_panel(f, old.a, mid), d + 1};
        nodes.push_back({quad_detail::make_panel(f, mid, old.b), d + 1});
    }

    const auto [value, err, absval] = totals();
    out.value = value;
    out.err = err;
    out.abs_value = absval;
    return out;
}

// Recursive adaptive Simpson, the discretization used by the direct
// principal-value scheme. Independent of the Gauss-Legendre machinery above.
namespace quad_detail {

template <class F>
void simpson_rec(F&& f, double a, double fa, double m, double fm, double b, double fb,
                 double whole, double tol, int depth, int max_depth, long long& evals,
                 long long max_evals, QuadOutcome& out) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    evals += 2;
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= max_depth || evals > max_evals) {
        out.value += left + right;
        out.err += std::abs(delta);
        out.abs_value += h / 6.0 * (std::abs(fa) + std::abs(fm) + std::abs(fb) +
                                    2.0 * (std::abs(flm) + std::abs(frm)));
        out.converged = false;
        return;
    }
    if (std::abs(delta) <= 15.0 * tol) {
        out.value += left + right + delta / 15.0;
        out.err += std::abs(delta) / 15.0 + 1e-300;
        out.abs_value += h / 6.0 * (std::abs(fa) + std::abs(fm) + std::abs(fb) +
                                    2.0 * (std::abs(flm) + std::abs(frm)));
        return;
    }
    simpson_rec(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1, max_depth, evals,
                max_evals, out);
    simpson_rec(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1, max_depth, evals,
                max_evals, out);
}

} // namespace quad_detail

template <class F>
QuadOutcome integrate_simpson(F&& f, double a, double b, std::vector<double> splits,
                              double abs_tol, int max_depth, long long max_evals = 200000) {
    QuadOutcome out;
    if (!(b > a)) return out;
    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    std::size_t n_intervals = 0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i)
        if (splits[i] >= a && splits[i + 1] <= b && splits[i + 1] > splits[i]) ++n_intervals;
    if (n_intervals == 0) return out;
    const double tol_each = abs_tol / static_cast<double>(n_intervals);
    long long evals = 0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        const double x0 = splits[i], x1 = splits[i + 1];
        if (x0 < a || x1 > b || !(x1 > x0)) continue;
        const double m = 0.5 * (x0 + x1);
        const double f0 = f(x0), fm = f(m), f1 = f(x1);
        evals += 3;
        const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        quad_detail::simpson_rec(f, x0, f0, m, fm, x1, f1, whole, tol_each, 0, max_depth, evals,
                                 max_evals, out);
    }
    return out;
}

} // namespace fraclap
