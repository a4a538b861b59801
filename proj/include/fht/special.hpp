#ifndef FHT_SPECIAL_HPP
#define FHT_SPECIAL_HPP

#include <cmath>
#include <numbers>

#include "fht/errors.hpp"

namespace fht {

// Lanczos approximation of ln Gamma, g = 607/128, 15 terms.  Coefficients
// are the classic Godfrey set; relative error on the positive real axis is
// a few ulp.  Arguments below 1/2 are shifted up through the recurrence
// Gamma(x+1) = x Gamma(x) before evaluating the series.
inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw domain_error("log_gamma: argument must be positive");

    static constexpr double kG = 607.0 / 128.0;
    static constexpr double kCoeff[15] = {
        0.99999999999999709182,
        57.156235665862923517,
        -59.597960355475491248,
        14.136097974741747174,
        -0.49191381609762019978,
        0.33994649984811888699e-4,
        0.46523628927048575665e-4,
        -0.98374475304879564677e-4,
        0.15808870322491248884e-3,
        -0.21026444172410488319e-3,
        0.21743961811521264320e-3,
        -0.16431810653676389022e-3,
        0.84418223983852743293e-4,
        -0.26190838401581408670e-4,
        0.36899182659531622704e-5,
    };

    double shift = 0.0;
    double z = x;
    while (z < 0.5) {
        shift -= std::log(z);
        z += 1.0;
    }

    double sum = kCoeff[0];
    for (int k = 1; k < 15; ++k)
        sum += kCoeff[k] / (z - 1.0 + static_cast<double>(k));

    const double base = z + kG - 0.5;
    const double half_log_2pi = 0.91893853320467274178;
    return (z - 0.5) * std::log(base) - base + half_log_2pi + std::log(sum) + shift;
}

inline double gamma_fn(double x) { return std::exp(log_gamma(x)); }

// B(a,b) = Gamma(a) Gamma(b) / Gamma(a+b), in log space.  Symmetric in
// (a,b) by construction.
inline double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("beta_fn: arguments must be positive");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

// u-th Taylor coefficient of (1 - z)^(-alpha), i.e.
// Gamma(u + alpha) / (Gamma(alpha) u!).  Valid for alpha > -1/2.  For
// negative alpha the sign is carried explicitly: Gamma(alpha) is rewritten
// as Gamma(1 + alpha) / alpha so every log_gamma argument stays positive.
inline double gen_binom_neg(double alpha, int u) {
    if (!(alpha > -0.5))
        throw domain_error("gen_binom_neg: requires alpha > -1/2");
    if (u < 0)
        throw domain_error("gen_binom_neg: requires u >= 0");
    if (u == 0) return 1.0;
    if (alpha == 0.0) return 0.0;
    if (alpha > 0.0)
        return std::exp(log_gamma(u + alpha) - log_gamma(alpha) - log_gamma(u + 1.0));
    // -1/2 < alpha < 0: u + alpha > 0 for u >= 1
    return alpha * std::exp(log_gamma(u + alpha) - log_gamma(1.0 + alpha) - log_gamma(u + 1.0));
}

} // namespace fht

#endif
