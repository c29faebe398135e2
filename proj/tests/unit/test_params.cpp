#include "fraclap/params.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace fraclap;

TEST_CASE("validate_params accepts the reference parameter point") {
    const ProblemParams params{3, 0.75, 2.0, 1.2, 1.0, 1.0};
    const auto validated = validate_params(params);
    CHECK(validated.N == 3);
    CHECK(validated.p == 2.0);
    // idempotent: validating a validated value succeeds with the same value
    const auto again = validate_params(validated);
    CHECK(again.s == validated.s);
    CHECK(again.q == validated.q);
}

TEST_CASE("validate_params rejects out-of-range inputs") {
    CHECK_THROWS_WITH_AS(validate_params({1, 0.75, 2.0, 1.0, 1.0, 1.0}),
                         doctest::Contains("REJECT_DIMENSION"), Error);
    CHECK_THROWS_WITH_AS(validate_params({3, 0.4, 2.0, 1.0, 1.0, 1.0}),
                         doctest::Contains("REJECT_S_RANGE"), Error);
    CHECK_THROWS_WITH_AS(validate_params({3, 1.0, 2.0, 1.0, 1.0, 1.0}),
                         doctest::Contains("REJECT_S_RANGE"), Error);
    CHECK_THROWS_WITH_AS(validate_params({3, 0.75, -2.0, 1.0, 1.0, 1.0}),
                         doctest::Contains("REJECT_SIGN"), Error);
    CHECK_THROWS_WITH_AS(validate_params({3, 0.75, 2.0, 1.0, 0.0, 1.0}),
                         doctest::Contains("REJECT_SIGN"), Error);
    CHECK_THROWS_WITH_AS(validate_params({3, 0.75, 2.0, 1.0, 1.0, -1.0}),
                         doctest::Contains("REJECT_SIGN"), Error);
    CHECK_THROWS_WITH_AS(validate_params({3, 0.75, 2.0, -0.5, 1.0, 1.0}),
                         doctest::Contains("REJECT_SIGN"), Error);
}

TEST_CASE("annulus rejects inverted orderings for random pairs") {
    oracle::Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.uniform(1e-6, 100.0);
        const double b = rng.uniform(1e-6, 100.0);
        if (a < b) {
            const Annulus ann(a, b);
            CHECK(ann.r_inner == a);
        } else {
            CHECK_THROWS_AS(Annulus(a, b), Error);
        }
    }
    CHECK_THROWS_AS(Annulus(0.0, 1.0), Error);
    CHECK_THROWS_AS(Annulus(-1.0, 1.0), Error);
}

TEST_CASE("tolerance validation") {
    Tolerance good;
    CHECK_NOTHROW(good.check());
    Tolerance bad{0.0, 1e-12, 40};
    CHECK_THROWS_AS(bad.check(), Error);
    Tolerance bad2{1e-8, 1e-12, 0};
    CHECK_THROWS_AS(bad2.check(), Error);
}

TEST_CASE("derived exponents at the reference point") {
    CHECK(critical_p(3, 0.75) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(q1_threshold(3, 0.75) == doctest::Approx(1.125).epsilon(1e-15));
    CHECK(q2_threshold(3, 0.75) == doctest::Approx(1.2).epsilon(1e-15));
}
