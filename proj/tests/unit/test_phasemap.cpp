#include "fraclap/phasemap.hpp"

#include "oracles.hpp"

#include <cmath>
#include <doctest.h>
#include <set>

using namespace fraclap;
using namespace fraclap::phasemap;

TEST_CASE("boundaries at the reference point") {
    const auto b = boundaries(3, 0.75);
    CHECK(b.q1 == doctest::Approx(1.125).epsilon(1e-15));
    CHECK(b.q2 == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(b.p_crit == doctest::Approx(2.0).epsilon(1e-15));
    // alpha(q) = (2s-q)/(q-1) hits N at q1 and N-2s at q2
    auto alpha = [](double q, double s) { return (2.0 * s - q) / (q - 1.0); };
    CHECK(alpha(b.q1, 0.75) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(alpha(b.q2, 0.75) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("boundary-meeting identities across (N, s)") {
    for (int N : {3, 4, 5}) {
        for (double s : {0.6, 0.75, 0.9}) {
            if (!(N > 2.0 * s)) continue;
            const auto b = boundaries(N, s);
            CHECK(curve_a(b.q2, N, s) == doctest::Approx(b.p_crit).epsilon(1e-12));
            CHECK(curve_b(b.q1, N, s) ==
                  doctest::Approx((N + 2.0 * s) / N).epsilon(1e-12));
        }
    }
}

TEST_CASE("worked classification examples (N=3, s=0.75)") {
    auto label = [](double p, double q) { return classify(3, 0.75, p, q); };

    CHECK(label(1.5, 1.3).label == Region::NonexistSubcrit);
    CHECK(label(2.0, 0.5).label == Region::ExistI);
    CHECK(label(2.0, 0.5).qualifiers == 0u);
    CHECK(label(2.5, 7.0).label == Region::ExistSupercrit);
    CHECK(label(2.0, 1.3).label == Region::NonexistCrit);
    CHECK(label(1.1, 1.1).label == Region::NonexistSubcrit);
    const auto v = label(1.9, 1.0);
    CHECK(v.label == Region::ExistV);
    CHECK(v.has(NeedsLargeR0));
    const auto open = label(1.2, 1.05);
    CHECK(open.label == Region::Open);
}

TEST_CASE("case-by-case labels and qualifiers") {
    auto label = [](double p, double q) { return classify(3, 0.75, p, q); };
    CHECK(label(2.0, 1.0).label == Region::ExistII);
    CHECK(label(2.0, 1.0).qualifiers == NeedsLargeR0);
    CHECK(label(2.0, 1.15).label == Region::ExistIII);
    CHECK(label(2.0, 1.15).qualifiers == NeedsSmallLambda);
    CHECK(label(1.8, 1.16).label == Region::ExistIV);
    CHECK(label(1.5, 0.5).label == Region::ExistV);
    CHECK(label(1.5, 0.5).qualifiers == NeedsSmallLambda);
    CHECK(label(1.8, 1.125).label == Region::ExistVI);
    CHECK(label(1.8, 1.125).qualifiers == NeedsSmallLambda);
    // boundary: q = q2 exactly at critical p belongs to case iii (q <= q2)
    CHECK(label(2.0, 1.2).label == Region::ExistIII);
    // beyond every clause
    CHECK(label(0.05, 1.9).label == Region::NonexistSubcrit);
    CHECK(label(3.0, 0.0).label == Region::ExistSupercrit);
}

TEST_CASE("open band and unclassified points") {
    // between curve_a and curve_b below q1
    CHECK(classify(3, 0.75, 1.2, 1.05).label == Region::Open);
    CHECK(classify(3, 0.75, 1.0, 1.0).label == Region::Open); // curve_a(1) = 1 inclusive
    // below curve_a with q <= 1: no theorem speaks
    CHECK(classify(3, 0.75, 0.4, 1.0).label == Region::Unclassified);
    // at q = q1, p = (N+2s)/N exactly: case vi is strict, band is half-open
    const double p_gap = (3.0 + 1.5) / 3.0;
    CHECK(classify(3, 0.75, p_gap, 1.125).label == Region::Unclassified);
}

TEST_CASE("single-label partition over a grid sweep") {
    // classify is a single pass with strict precedence; verify each point
    // lands in exactly one region by checking idempotence and enum validity
    GridOptions opts{0.1, 2.0, 0.1, 3.0, 64};
    const auto rows = classify_grid(3, 0.75, opts);
    REQUIRE(rows.size() == 64u * 64u);
    std::set<std::string> seen;
    for (const auto& row : rows) {
        const auto again = classify(3, 0.75, row.p, row.q);
        CHECK(again.label == row.label.label);
        CHECK(again.qualifiers == row.label.qualifiers);
        seen.insert(region_name(row.label.label));
    }
    CHECK(seen.count("NONEXIST_SUBCRIT") == 1);
    CHECK(seen.count("EXIST_SUPERCRIT") == 1);
}

TEST_CASE("grid determinism across worker counts") {
    GridOptions opts{0.2, 1.8, 0.2, 2.8, 32};
    const auto a = classify_grid(3, 0.75, opts, 1);
    const auto b = classify_grid(3, 0.75, opts, 8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].q == b[i].q);
        CHECK(a[i].p == b[i].p);
        CHECK(a[i].label.label == b[i].label.label);
        CHECK(a[i].label.qualifiers == b[i].label.qualifiers);
    }
}

TEST_CASE("qualifiers appear only on cases ii-vi") {
    oracle::Rng rng(5);
    for (int i = 0; i < 4000; ++i) {
        const double q = rng.uniform(0.01, 2.5);
        const double p = rng.uniform(0.01, 3.5);
        const auto lab = classify(3, 0.75, p, q);
        if (lab.qualifiers != 0) {
            const bool exist_ii_to_vi =
                lab.label == Region::ExistII || lab.label == Region::ExistIII ||
                lab.label == Region::ExistIV || lab.label == Region::ExistV ||
                lab.label == Region::ExistVI;
            CHECK(exist_ii_to_vi);
        }
    }
}

TEST_CASE("grid option validation") {
    CHECK_THROWS_AS(classify_grid(3, 0.75, {0.1, 2.0, 0.1, 3.0, 8}), Error);
    CHECK_THROWS_AS(classify_grid(3, 0.75, {0.0, 2.0, 0.1, 3.0, 32}), Error);
    CHECK_THROWS_AS(classify_grid(3, 0.75, {0.5, 0.2, 0.1, 3.0, 32}), Error);
}
