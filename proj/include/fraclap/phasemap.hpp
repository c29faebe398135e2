#pragma once

#include "fraclap/params.hpp"

#include <string>
#include <vector>

namespace fraclap::phasemap {

enum class Region {
    NonexistSubcrit,
    NonexistCrit,
    ExistI,
    ExistII,
    ExistIII,
    ExistIV,
    ExistV,
    ExistVI,
    ExistSupercrit,
    Open,
    Unclassified,
};

const char* region_name(Region r);

enum Qualifier : unsigned {
    NeedsSmallLambda = 1u,
    NeedsLargeR0 = 2u,
};

struct RegionLabel {
    Region label = Region::Unclassified;
    unsigned qualifiers = 0;

    bool has(Qualifier q) const { return (qualifiers & q) != 0; }
};

std::string qualifiers_string(unsigned qualifiers);

struct Boundaries {
    double q1 = 0.0;     // (N+2s)/(N+1)
    double q2 = 0.0;     // N/(N+1-2s)
    double p_crit = 0.0; // N/(N-2s)
};

Boundaries boundaries(int N, double s);

// Nonexistence boundary (2s-1)q/(2s-q), defined for q < 2s.
double curve_a(double q, int N, double s);
// Existence boundary (N+2s)q/(N+2s-q), defined for q < N+2s.
double curve_b(double q, int N, double s);

// Deterministic single-pass classification; precedence: nonexistence
// theorems, existence cases i-vi, the supercritical range, the open band,
// then UNCLASSIFIED. Boundary points follow the theorems' strict/inclusive
// inequalities as written.
RegionLabel classify(int N, double s, double p, double q);

struct GridOptions {
    double q_min = 0.1, q_max = 2.0;
    double p_min = 0.1, p_max = 3.0;
    int resolution = 64;
};

struct GridRow {
    double q = 0.0, p = 0.0;
    RegionLabel label;
};

// Row-major uniform grid, resolution^2 rows.
std::vector<GridRow> classify_grid(int N, double s, const GridOptions& opts, int jobs = 1);

} // namespace fraclap::phasemap
