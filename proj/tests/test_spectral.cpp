#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "fht/spectral.hpp"
#include "fht/bounds.hpp"
#include "oracles.hpp"

TEST_CASE("nystrom operator basics") {
    fht::KernelOperator op = fht::nystrom(1.0, 64);
    REQUIRE(op.size() == 64);
    double wsum = 0.0;
    for (double w : op.weights) wsum += w;
    CHECK(wsum == Catch::Approx(1.0).margin(1e-12));
    for (std::size_t i = 0; i < op.size(); ++i) {
        CHECK(op.nodes[i] > 0.0);
        CHECK(op.nodes[i] < 1.0);
        for (std::size_t j = i + 1; j < op.size(); ++j)
            CHECK(op.kmat[i][j] == Catch::Approx(op.kmat[j][i]).epsilon(1e-10));
    }
    CHECK_THROWS_AS(fht::nystrom(0.0, 64), fht::domain_error);
    CHECK_THROWS_AS(fht::nystrom(1.0, 4), fht::domain_error);
    CHECK_THROWS_AS(fht::nystrom(0.5, 64), fht::excluded_case_error);
}

TEST_CASE("spectral radius of stub kernels") {
    fht::KernelOperator zero =
        fht::nystrom_from_kernel([](double, double) { return 0.0; }, 32);
    CHECK(fht::spectral_radius(zero) == 0.0);

    // rank-one kernel K(x,y) = 1 has eigenvalue int_0^1 dy = 1
    fht::KernelOperator one =
        fht::nystrom_from_kernel([](double, double) { return 1.0; }, 32);
    CHECK(fht::spectral_radius(one) == Catch::Approx(1.0).margin(1e-13));
}

TEST_CASE("spectral radius at alpha = 1 is 1/pi^2") {
    const double rho = fht::spectral_radius(fht::nystrom(1.0, 256));
    CHECK(rho == Catch::Approx(1.0 / (std::numbers::pi * std::numbers::pi))
                     .margin(1e-6));
}

TEST_CASE("Perron eigenvector has a single sign") {
    std::vector<double> v;
    fht::spectral_radius(fht::nystrom(0.75, 96), 1e-13, &v);
    REQUIRE(v.size() == 96);
    for (double c : v) CHECK(c * v[0] > 0.0);
}

TEST_CASE("iterated traces of the alpha = 1 kernel") {
    // trace(G_1) = int_0^1 x(1-x) dx = 1/6
    CHECK(fht::iterated_trace(1.0, 1, 256) == Catch::Approx(1.0 / 6.0).margin(1e-9));

    // ratio of consecutive high iterated traces converges to rho = 1/pi^2
    const double t20 = fht::iterated_trace(1.0, 20, 192);
    const double t21 = fht::iterated_trace(1.0, 21, 192);
    CHECK(t21 / t20 == Catch::Approx(1.0 / (std::numbers::pi * std::numbers::pi))
                           .epsilon(1e-4));

    // s-th root of the s-trace also approaches rho
    const double t40 = fht::iterated_trace(1.0, 40, 128);
    CHECK(std::pow(t40, 1.0 / 40.0) ==
          Catch::Approx(1.0 / (std::numbers::pi * std::numbers::pi)).epsilon(0.01));

    CHECK_THROWS_AS(fht::iterated_trace(1.0, 0, 64), fht::domain_error);
}

TEST_CASE("kernel-route constant at alpha = 1 is pi^2") {
    fht::CAlphaEstimate est = fht::c_alpha_kernel(1.0);
    CHECK(est.method == "kernel");
    REQUIRE(est.raw.size() == 3);
    CHECK(std::abs(est.extrapolated / (std::numbers::pi * std::numbers::pi) - 1.0) <
          1e-3);
    CHECK_FALSE(est.flagged);
}

TEST_CASE("kernel-route constant at alpha = 2") {
    fht::CAlphaEstimate est = fht::c_alpha_kernel(2.0);
    CHECK(std::abs(est.extrapolated / 500.5467 - 1.0) < 5e-3);
}

TEST_CASE("kernel route respects the closed-form bounds at alpha = 1.5") {
    fht::CAlphaEstimate est = fht::c_alpha_kernel(1.5);
    fht::BoundsReport b = fht::c_alpha_bounds(1.5);
    CHECK(est.extrapolated > b.lower);
    CHECK(est.extrapolated < b.upper);
}

TEST_CASE("kernel route refuses excluded and invalid alpha") {
    CHECK_THROWS_AS(fht::c_alpha_kernel(0.5), fht::excluded_case_error);
    CHECK_THROWS_AS(fht::c_alpha_kernel(-0.1), fht::domain_error);
    CHECK_THROWS_AS(fht::c_alpha_kernel(1.0, {}), fht::domain_error);
}

TEST_CASE("toeplitz-route constant at alpha = 1") {
    fht::CAlphaEstimate est = fht::c_alpha_toeplitz(1.0, {256, 512, 1024});
    CHECK(est.method == "toeplitz");
    CHECK(std::abs(est.extrapolated / (std::numbers::pi * std::numbers::pi) - 1.0) <
          0.01);

    // a smooth positive factor f1 does not change the constant
    fht::CAlphaEstimate est2 = fht::c_alpha_toeplitz(
        1.0, {256, 512, 1024}, fht::TrigPoly::from_cosine_coeffs({2.5, 1.0}));
    CHECK(std::abs(est2.extrapolated / (std::numbers::pi * std::numbers::pi) - 1.0) <
          0.02);
}

TEST_CASE("the two routes agree") {
    for (double alpha : {0.75, 1.5, 2.5}) {
        fht::CAlphaEstimate k = fht::c_alpha_kernel(alpha);
        fht::CAlphaEstimate t = fht::c_alpha_toeplitz(alpha, {256, 512, 1024});
        INFO("alpha=" << alpha << " kernel=" << k.extrapolated
                      << " toeplitz=" << t.extrapolated);
        CHECK(std::abs(k.extrapolated / t.extrapolated - 1.0) < 0.03);
    }
}

TEST_CASE("spectral radius is resolution-stable") {
    for (double alpha : {0.75, 1.5}) {
        const double r1 = fht::spectral_radius(fht::nystrom(alpha, 256));
        const double r2 = fht::spectral_radius(fht::nystrom(alpha, 512));
        INFO("alpha=" << alpha);
        CHECK(std::abs(r1 / r2 - 1.0) < 1e-3);
    }
}
