#ifndef FHT_ASYMPTOTICS_HPP
#define FHT_ASYMPTOTICS_HPP

#include <algorithm>
#include <cmath>
#include <utility>

#include "fht/errors.hpp"
#include "fht/quadrature.hpp"
#include "fht/special.hpp"
#include "fht/symbols.hpp"

namespace fht {

// G_alpha(x,y) = x^a y^a int_{max(x,y)}^1 (t-x)^{a-1} (t-y)^{a-1} t^{-2a} dt.
// The (t - max)^p endpoint singularity (p = a-1 off the diagonal, 2a-2 on
// it) is absorbed by the power substitution; the diagonal diverges for
// a <= 1/2.
inline double kernel_G(double alpha, double x, double y, double tol = 1e-12) {
    if (!(alpha > 0.0)) throw domain_error("kernel_G: requires alpha > 0");
    if (!(x > 0.0) || !(x < 1.0) || !(y > 0.0) || !(y < 1.0))
        throw domain_error("kernel_G: requires 0 < x, y < 1");
    const double hi = std::max(x, y);
    const double lo = std::min(x, y);
    const bool diagonal = (x == y);
    if (diagonal && alpha <= 0.5)
        throw domain_error("kernel_G: diverges on the diagonal for alpha <= 1/2");

    const double prefac = std::pow(x, alpha) * std::pow(y, alpha);
    if (diagonal) {
        // integrate in r = t - hi so the singular endpoint sits exactly at 0
        // (evaluating t - hi near t = hi cancels catastrophically)
        const double p = 2.0 * alpha - 2.0;
        auto integrand = [&](double r) {
            return std::pow(r, p) * std::pow(hi + r, -2.0 * alpha);
        };
        return prefac * integrate_singular_left(integrand, 0.0, 1.0 - hi, p, tol);
    }

    // Rescale t = hi + d u with d = hi - lo.  Both algebraic factors then
    // live on the unit scale: the integral becomes
    //   d^{2a-1} int_0^U u^{a-1} (1+u)^{a-1} (hi + d u)^{-2a} du,
    // U = (1-hi)/d, and the tail u > 1 maps to a smooth integrand under
    // u = 1/v.  This keeps near-diagonal evaluations cheap.
    const double d = hi - lo;
    const double u_max = (1.0 - hi) / d;
    auto head = [&](double u) {
        return std::pow(u, alpha - 1.0) * std::pow(1.0 + u, alpha - 1.0) *
               std::pow(hi + d * u, -2.0 * alpha);
    };
    double integral =
        integrate_singular_left(head, 0.0, std::min(1.0, u_max), alpha - 1.0, tol);
    if (u_max > 1.0) {
        auto tail = [&](double v) {
            return std::pow(v + 1.0, alpha - 1.0) * std::pow(hi * v + d, -2.0 * alpha);
        };
        integral += integrate(tail, 1.0 / u_max, 1.0, tol);
    }
    return prefac * std::pow(d, 2.0 * alpha - 1.0) * integral;
}

// Bulk first-column asymptotic: (T_N^{-1})_{[Nx]+1,1} for alpha > 1/2 is
//   conj(beta_0) N^{a-1} x^{a-1} (1-x)^a / (Gamma(a) g1(1)).
inline double first_column_asymptotic(double alpha, double x, int n,
                                      const SymbolSpec& spec) {
    if (!(x > 0.0) || !(x < 1.0))
        throw domain_error("first_column_asymptotic: requires 0 < x < 1");
    return beta0(spec) * std::pow(n, alpha - 1.0) * std::pow(x, alpha - 1.0) *
           std::pow(1.0 - x, alpha) / (gamma_fn(alpha) * g1_at_one(spec));
}

// Bulk entry asymptotic: N^{2a-1} G_a(x,y) / (Gamma(a)^2 f1(1)).
inline double inverse_entry_asymptotic(double alpha, double x, double y, int n,
                                       const SymbolSpec& spec) {
    return std::pow(n, 2.0 * alpha - 1.0) * kernel_G(alpha, x, y) /
           (gamma_fn(alpha) * gamma_fn(alpha) * spec.f1_at_one());
}

// Trace asymptotic N^{2a} B(2a,2a) / (Gamma(a)^2 (2a-1) f1(1)), a > 1/2.
inline double trace_asymptotic(double alpha, int n, double f1_at_one = 1.0) {
    if (!(alpha > 0.5))
        throw domain_error("trace_asymptotic: requires alpha > 1/2");
    return std::pow(n, 2.0 * alpha) * beta_fn(2.0 * alpha, 2.0 * alpha) /
           (gamma_fn(alpha) * gamma_fn(alpha) * (2.0 * alpha - 1.0) * f1_at_one);
}

// Equivalent factorial form for integer alpha = p:
// (2p-1)! (2p-2)! / ((4p-1)! ((p-1)!)^2), times N^{2p} / f1(1).
inline double trace_asymptotic_factorial(int p, int n, double f1_at_one = 1.0) {
    if (p < 1) throw domain_error("trace_asymptotic_factorial: requires p >= 1");
    const double log_c = log_gamma(2.0 * p) + log_gamma(2.0 * p - 1.0) -
                         log_gamma(4.0 * p) - 2.0 * log_gamma(static_cast<double>(p));
    return std::pow(n, 2.0 * p) * std::exp(log_c) / f1_at_one;
}

// h_alpha(x,y) for 0 < alpha < 1/2, finite on the diagonal.  With
// d = |x - y|, m = min(x,y):
//   h = int_0^m t^{a-1} (d+t)^{a-1} (2AB - A - B) dt          (A = (1-t)^a,
//     - int_{1-m}^1 t^{a-1} (1-t)^a (t-d)^{a-1} (1-t+d)^a dt   B = (1-d-t)^a)
//     - int_m^inf t^{a-1} (d+t)^{a-1} dt.
inline double kernel_h(double alpha, double x, double y, double tol = 1e-10) {
    if (!(alpha > 0.0) || !(alpha < 0.5))
        throw domain_error("kernel_h: requires 0 < alpha < 1/2");
    if (!(x > 0.0) || !(x < 1.0) || !(y > 0.0) || !(y < 1.0))
        throw domain_error("kernel_h: requires 0 < x, y < 1");
    const double m = std::min(x, y);
    const double d = std::abs(x - y);

    // First integral: t^{a-1} singular at 0; for d = 0 the two algebraic
    // factors merge to t^{2a-2}, rescued by 2AB - A - B = O(t).
    double i_main;
    if (d > 0.0) {
        auto f = [&](double t) {
            const double a_f = std::pow(1.0 - t, alpha);
            const double b_f = std::pow(1.0 - d - t, alpha);
            return std::pow(t, alpha - 1.0) * std::pow(d + t, alpha - 1.0) *
                   (2.0 * a_f * b_f - a_f - b_f);
        };
        i_main = integrate_singular_left(f, 0.0, m, alpha - 1.0, tol);
    } else {
        auto f = [&](double t) {
            const double a_f = std::pow(1.0 - t, alpha);
            // (2A^2 - 2A)/t is bounded near 0; keep one t^{2a-1} factor
            return std::pow(t, 2.0 * alpha - 1.0) * (2.0 * a_f * a_f - 2.0 * a_f) / t;
        };
        i_main = integrate_singular_left(f, 0.0, m, 2.0 * alpha - 1.0, tol);
    }

    // Second integral over [1-m, 1]: smooth except the mild (1-t)^a endpoint.
    auto f5 = [&](double t) {
        return std::pow(t, alpha - 1.0) * std::pow(1.0 - t, alpha) *
               std::pow(t - d, alpha - 1.0) * std::pow(1.0 - t + d, alpha);
    };
    const double i5 = integrate(f5, 1.0 - m, 1.0, tol);

    // Tail integral int_m^inf t^{a-1} (d+t)^{a-1} dt, convergent since
    // 2a - 2 < -1.  Closed form for d = 0; otherwise split at 1 and map the
    // tail to [0,1] by t = 1/u, which leaves a u^{-2a} endpoint singularity.
    double i1;
    if (d == 0.0) {
        i1 = std::pow(m, 2.0 * alpha - 1.0) / (1.0 - 2.0 * alpha);
    } else {
        auto f1 = [&](double t) {
            return std::pow(t, alpha - 1.0) * std::pow(d + t, alpha - 1.0);
        };
        i1 = integrate(f1, m, 1.0, tol);
        auto ftail = [&](double u) {
            return std::pow(u, -2.0 * alpha) * std::pow(1.0 + d * u, alpha - 1.0);
        };
        i1 += integrate_singular_left(ftail, 0.0, 1.0, -2.0 * alpha, tol);
    }

    return i_main - i5 - i1;
}

// The two edge formulas for entries near the corners, k/N -> 0:
//   (i)  conj(beta_0) (beta_k^{(a)} - (a^2/N) beta_k^{(a+1)})   ~ entry (k+1, 1)
//   (ii) conj(beta_0) beta_k^{(a+1)} a / N                      ~ entry (N+1-k, 1)
// The g(1)/conj(g1(1)) factor in (ii) is 1 under the real-positive g1(1)
// normalization.
inline std::pair<double, double> edge_asymptotics(double alpha, int k, int n,
                                                  const SymbolSpec& spec) {
    if (k < 0 || n < 1) throw domain_error("edge_asymptotics: bad k or N");
    const double b0 = beta0(spec);
    const double bk = beta_coeffs(spec, k).values[static_cast<std::size_t>(k)];
    SymbolSpec lifted(alpha + 1.0, spec.f1);
    const double bk1 = beta_coeffs(lifted, k).values[static_cast<std::size_t>(k)];
    const double first = b0 * (bk - alpha * alpha / n * bk1);
    const double second = b0 * bk1 * alpha / n;
    return {first, second};
}

// Asymptotic values of the predictor polynomial and its derivative at 1:
//   P(1)  ~ N^a     Gamma(a+1) / (Gamma(2a+1) g1(1))
//   P'(1) ~ N^{a+1} Gamma(a+1)^2 / (Gamma(2a+2) Gamma(a) g1(1)).
inline std::pair<double, double> predictor_at_one(double alpha, int n,
                                                  const SymbolSpec& spec) {
    const double g11 = g1_at_one(spec);
    const double p1 = std::pow(n, alpha) *
                      std::exp(log_gamma(alpha + 1.0) - log_gamma(2.0 * alpha + 1.0)) /
                      g11;
    double dp1 = 0.0;
    if (alpha > 0.0)
        dp1 = std::pow(n, alpha + 1.0) *
              std::exp(2.0 * log_gamma(alpha + 1.0) - log_gamma(2.0 * alpha + 2.0) -
                       log_gamma(alpha)) /
              g11;
    return {p1, dp1};
}

} // namespace fht

#endif
