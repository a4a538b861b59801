#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <fht/special.hpp>

#include "oracles.hpp"

using namespace fht;

TEST_CASE("log_gamma reference values") {
    CHECK(log_gamma(1.0) == Catch::Approx(0.0).margin(1e-14));
    CHECK(log_gamma(2.0) == Catch::Approx(0.0).margin(1e-14));
    CHECK(log_gamma(0.5) == Catch::Approx(0.5 * std::log(std::acos(-1.0))).epsilon(1e-13));
    CHECK(log_gamma(10.0) == Catch::Approx(std::log(362880.0)).epsilon(1e-13));
}

TEST_CASE("log_gamma recurrence on a random grid") {
    for (int i = 0; i < 500; ++i) {
        const double x = oracle::uniform(1e-3, 100.0);
        const double lhs = log_gamma(x + 1.0);
        const double rhs = log_gamma(x) + std::log(x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("log_gamma domain") {
    CHECK_THROWS_AS(log_gamma(0.0), domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), domain_error);
}

TEST_CASE("beta_fn values and symmetry") {
    CHECK(beta_fn(1.0, 1.0) == Catch::Approx(1.0).epsilon(1e-13));
    CHECK(beta_fn(2.0, 2.0) == Catch::Approx(1.0 / 6.0).epsilon(1e-13));
    CHECK(beta_fn(4.0, 4.0) == Catch::Approx(1.0 / 140.0).epsilon(1e-13));
    for (int i = 0; i < 100; ++i) {
        const double a = oracle::uniform(0.01, 20.0);
        const double b = oracle::uniform(0.01, 20.0);
        CHECK(beta_fn(a, b) == beta_fn(b, a));  // bitwise, by construction
    }
    CHECK_THROWS_AS(beta_fn(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(beta_fn(1.0, -2.0), domain_error);
}

TEST_CASE("gen_binom_neg against the direct product formula") {
    for (double alpha : {1.0, 0.5, 0.25, 1.75, -0.3, -0.49}) {
        for (int u = 0; u <= 12; ++u) {
            const double want = oracle::binom_series_coeff(alpha, u);
            const double got = gen_binom_neg(alpha, u);
            CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("gen_binom_neg special cases") {
    for (int u = 0; u <= 10; ++u)
        CHECK(gen_binom_neg(1.0, u) == Catch::Approx(1.0).epsilon(1e-13));
    CHECK(gen_binom_neg(0.5, 1) == Catch::Approx(0.5).epsilon(1e-13));
    CHECK(gen_binom_neg(0.5, 2) == Catch::Approx(0.375).epsilon(1e-13));
    CHECK(gen_binom_neg(0.0, 0) == 1.0);
    CHECK(gen_binom_neg(0.0, 3) == 0.0);
}

TEST_CASE("gen_binom_neg ratio recurrence") {
    for (double alpha : {0.25, 0.75, 1.5, 3.0}) {
        for (int u = 0; u < 30; ++u) {
            const double ratio = gen_binom_neg(alpha, u + 1) / gen_binom_neg(alpha, u);
            const double want = (u + alpha) / (u + 1.0);
            CHECK(std::abs(ratio - want) <= 1e-12 * std::abs(want));
        }
    }
}
