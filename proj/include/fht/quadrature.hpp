#ifndef FHT_QUADRATURE_HPP
#define FHT_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "fht/errors.hpp"

namespace fht {

struct QuadRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n.
inline QuadRule gauss_legendre(int n) {
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace detail {

inline const QuadRule& panel_rule() {
    static const QuadRule rule = gauss_legendre(32);
    return rule;
}

template <class F>
double panel(const F& f, double a, double b) {
    const QuadRule& r = panel_rule();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

template <class F>
double adaptive(const F& f, double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    const double diff = left + right - whole;
    // relative floor keeps large-magnitude integrals from recursing to the
    // depth cap chasing sub-roundoff agreement
    if (std::abs(diff) <= tol + 1e-14 * std::abs(left + right) || depth >= 28)
        return left + right;
    return adaptive(f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive(f, mid, b, right, 0.5 * tol, depth + 1);
}

} // namespace detail

// Adaptive Gauss-Legendre on [a,b]; bisects until successive refinements
// agree to tol (absolute).
template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-11) {
    if (!(b > a)) return 0.0;
    return detail::adaptive(f, a, b, detail::panel(f, a, b), tol, 0);
}

// Integral of f over [a,b] where f(t) ~ C (t-a)^p near a with -1 < p < 0.
// The substitution s = (t-a)^(p+1) absorbs the singular factor: with
// q = p+1 and t = a + s^(1/q),
//   int f dt = (1/q) int f(t(s)) (t(s)-a)^(1-q) ds,   s in [0, (b-a)^q].
template <class F>
double integrate_singular_left(const F& f, double a, double b, double p,
                               double tol = 1e-11) {
    if (!(b > a)) return 0.0;
    if (p >= 0.0) return integrate(f, a, b, tol);
    const double q = p + 1.0;
    if (!(q > 0.0))
        throw domain_error("integrate_singular_left: non-integrable exponent");
    const double s_max = std::pow(b - a, q);
    auto g = [&](double s) {
        const double r = std::pow(s, 1.0 / q); // t - a
        return f(a + r) * std::pow(r, 1.0 - q) / q;
    };
    return integrate(g, 0.0, s_max, tol);
}

// Same with the singularity at the right endpoint: f(t) ~ C (b-t)^p.
template <class F>
double integrate_singular_right(const F& f, double a, double b, double p,
                                double tol = 1e-11) {
    auto flipped = [&](double t) { return f(a + b - t); };
    return integrate_singular_left(flipped, a, b, p, tol);
}

// Integrable algebraic singularities at both endpoints: split at the
// midpoint and substitute on each side.
template <class F>
double integrate_singular_both(const F& f, double a, double b, double pa,
                               double pb, double tol = 1e-11) {
    const double mid = 0.5 * (a + b);
    return integrate_singular_left(f, a, mid, pa, 0.5 * tol) +
           integrate_singular_right(f, mid, b, pb, 0.5 * tol);
}

} // namespace fht

#endif
