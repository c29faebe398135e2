#pragma once

#include "fraclap/errors.hpp"

namespace fraclap {

// Problem data for (-Delta)^s u + |grad u|^q = lambda * u^p on the exterior
// of the ball of radius R0. Admissible range: 1/2 < s < 1 and N > 2s, which
// forces the integer dimension N >= 2.
struct ProblemParams {
    int N = 3;
    double s = 0.75;
    double p = 2.0;
    double q = 1.0;
    double lambda = 1.0;
    double R0 = 1.0;
};

// Throws on violation, returns the params unchanged otherwise (idempotent).
ProblemParams validate_params(const ProblemParams& params);

// Shell {x : r_inner <= |x| <= r_outer}.
struct Annulus {
    double r_inner;
    double r_outer;

    Annulus(double inner, double outer) : r_inner(inner), r_outer(outer) {
        if (!(inner > 0.0) || !(outer > inner))
            throw Error(Errc::bad_annulus, "annulus requires 0 < r_inner < r_outer");
    }
};

// Quadrature targets. Defaults leave two digits of headroom over the 1e-6
// acceptance thresholds.
struct Tolerance {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 40;

    void check() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1)
            throw Error(Errc::bad_tolerance, "rel_tol, abs_tol must be > 0 and max_subdivisions >= 1");
    }
};

// Derived exponents used throughout: q1 = (N+2s)/(N+1), q2 = N/(N+1-2s),
// p_crit = N/(N-2s).
double critical_p(int N, double s);
double q1_threshold(int N, double s);
double q2_threshold(int N, double s);

} // namespace fraclap
