#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fht/bounds.hpp"
#include "fht/toeplitz.hpp"

TEST_CASE("k_alpha values and behavior") {
    const double g14 = fht::gamma_fn(0.25), g34 = fht::gamma_fn(0.75);
    const double want = 2.0 + std::numbers::pi + std::sqrt(std::numbers::pi) * g14 / g34;
    CHECK(fht::k_alpha(0.25) == Catch::Approx(want).epsilon(1e-12));
    CHECK(fht::k_alpha(0.25) == Catch::Approx(10.3857).margin(1e-3));

    for (double a : {0.05, 0.15, 0.3, 0.45}) CHECK(fht::k_alpha(a) > 1.0 / (2.0 * a));

    // diverges approaching 1/2 from below, dominated by the Gamma(1-2a) term
    CHECK(fht::k_alpha(0.4999) > 1e3);

    CHECK_THROWS_AS(fht::k_alpha(0.0), fht::domain_error);
    CHECK_THROWS_AS(fht::k_alpha(0.5), fht::domain_error);
    CHECK_THROWS_AS(fht::k_alpha(0.7), fht::domain_error);
}

TEST_CASE("bounds regimes and ordering") {
    CHECK(fht::c_alpha_bounds(0.25).regime == fht::BoundRegime::sub_half);
    CHECK(fht::c_alpha_bounds(0.75).regime == fht::BoundRegime::half_to_one);
    CHECK(fht::c_alpha_bounds(1.5).regime == fht::BoundRegime::above_one);

    for (double a : {0.05, 0.1, 0.25, 0.4, 0.45, 0.6, 0.75, 0.9, 1.2, 1.5, 2.5, 3.7, 9.5}) {
        fht::BoundsReport r = fht::c_alpha_bounds(a);
        INFO("alpha=" << a);
        CHECK(r.log_lower < r.log_upper);
        CHECK(r.lower > 0.0);
        CHECK(r.lower < r.upper);
        CHECK_FALSE(r.log_space);
    }

    CHECK_THROWS_AS(fht::c_alpha_bounds(0.5), fht::excluded_case_error);
    CHECK_THROWS_AS(fht::c_alpha_bounds(1.0), fht::excluded_case_error);
    CHECK_THROWS_AS(fht::c_alpha_bounds(3.0), fht::excluded_case_error);
    CHECK_THROWS_AS(fht::c_alpha_bounds(0.0), fht::domain_error);
}

TEST_CASE("integer reference bound at alpha = 2") {
    fht::BoundsReport r = fht::integer_reference_upper(2);
    CHECK(r.regime == fht::BoundRegime::integer_reference);
    CHECK(r.lower == Catch::Approx(105.0).epsilon(1e-12));
    CHECK(r.upper == Catch::Approx(504.0).epsilon(1e-12));
    // the known value c_2 = 500.5467 sits inside
    CHECK(r.lower < 500.5467);
    CHECK(r.upper > 500.5467);
    CHECK_THROWS_AS(fht::integer_reference_upper(0), fht::domain_error);
}

TEST_CASE("large alpha switches the report to log space") {
    fht::BoundsReport r = fht::c_alpha_bounds(100.5);
    CHECK(r.log_space);
    CHECK(std::isinf(r.lower));
    CHECK(std::isinf(r.upper));
    CHECK(r.log_lower < r.log_upper);
    CHECK(std::isfinite(r.log_lower));
}

TEST_CASE("half-case eigenvalue lower bound") {
    CHECK(fht::half_case_lower(100) ==
          Catch::Approx(std::numbers::pi / (100.0 * std::log(100.0))).epsilon(1e-14));
    CHECK(fht::half_case_lower(100) == Catch::Approx(0.0068219).margin(1e-6));
    CHECK_THROWS_AS(fht::half_case_lower(2), fht::domain_error);

    fht::SymbolSpec spec(0.5);
    for (int n : {64, 256, 1024}) {
        const double lam = fht::lambda_min(spec, n);
        INFO("n=" << n);
        CHECK(lam >= fht::half_case_lower(static_cast<std::size_t>(n)));
    }
}

TEST_CASE("large-alpha asymptotic of ln c_alpha") {
    CHECK(fht::c_alpha_large(1.0) == Catch::Approx(2.3847).margin(1e-3));
    CHECK(fht::c_alpha_large(10.0) == Catch::Approx(56.541).margin(1e-2));
    // same ballpark as ln(pi^2) = 2.2896 at alpha = 1
    CHECK(std::abs(fht::c_alpha_large(1.0) - std::log(std::numbers::pi * std::numbers::pi)) <
          0.2);
    double prev = fht::c_alpha_large(1.0);
    for (double a = 2.0; a <= 50.0; a += 1.0) {
        const double v = fht::c_alpha_large(a);
        CHECK(v > prev);
        prev = v;
    }
    CHECK_THROWS_AS(fht::c_alpha_large(0.0), fht::domain_error);
}
