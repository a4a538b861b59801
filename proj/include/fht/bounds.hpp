#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "errors.hpp"
#include "special.hpp"

namespace fht {

enum class BoundRegime { sub_half, half_to_one, above_one, integer_reference };

inline const char* to_string(BoundRegime r) {
    switch (r) {
        case BoundRegime::sub_half: return "sub_half";
        case BoundRegime::half_to_one: return "half_to_one";
        case BoundRegime::above_one: return "above_one";
        case BoundRegime::integer_reference: return "integer_reference";
    }
    return "unknown";
}

// Two-sided bound on the minimal-eigenvalue constant.  log_lower/log_upper
// are always valid; lower/upper carry exp() of them when that fits in a
// double, otherwise log_space is set and they are +inf.
struct BoundsReport {
    double alpha = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double log_lower = 0.0;
    double log_upper = 0.0;
    BoundRegime regime = BoundRegime::sub_half;
    bool log_space = false;
};

inline double k_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw domain_error("k_alpha requires 0 < alpha < 1/2");
    const double t1 = 1.0 / (2.0 * alpha);
    const double t2 = std::exp(2.0 * log_gamma(2.0 * alpha) - log_gamma(4.0 * alpha));
    const double t3 =
        std::exp(log_gamma(1.0 - 2.0 * alpha) + log_gamma(alpha) - log_gamma(1.0 - alpha));
    return t1 + t2 + t3;
}

namespace detail {

inline void finish_report(BoundsReport& r) {
    constexpr double kExpLimit = 690.0;  // just below log(DBL_MAX)
    r.log_space = r.log_lower > kExpLimit || r.log_upper > kExpLimit;
    r.lower = r.log_lower > kExpLimit ? std::numeric_limits<double>::infinity()
                                      : std::exp(r.log_lower);
    r.upper = r.log_upper > kExpLimit ? std::numeric_limits<double>::infinity()
                                      : std::exp(r.log_upper);
}

}  // namespace detail

inline BoundsReport c_alpha_bounds(double alpha) {
    if (alpha <= 0.0) throw domain_error("c_alpha_bounds requires alpha > 0");
    if (alpha == 0.5)
        throw excluded_case_error(
            "alpha == 1/2 has no two-sided bound; see half_case_lower for the eigenvalue bound");
    if (alpha >= 1.0 && alpha == std::floor(alpha))
        throw excluded_case_error(
            "integer alpha is covered by the reference bound, not the two-sided one");
    BoundsReport r;
    r.alpha = alpha;
    const double lg_a = log_gamma(alpha);
    if (alpha < 0.5) {
        r.regime = BoundRegime::sub_half;
        const double common = log_gamma(1.0 - alpha) - log_gamma(1.0 - 2.0 * alpha) + lg_a;
        r.log_lower = common - std::log(k_alpha(alpha));
        r.log_upper = common + std::log(4.0 * alpha + 1.0);
    } else if (alpha < 1.0) {
        r.regime = BoundRegime::half_to_one;
        r.log_lower = log_gamma(4.0 * alpha) + 2.0 * lg_a + std::log(2.0 * alpha - 1.0) -
                      2.0 * log_gamma(2.0 * alpha);
        r.log_upper = 2.0 * lg_a +
                      std::log((2.0 * alpha + 1.0) * (2.0 * alpha + 2.0) * (2.0 * alpha + 3.0)) -
                      std::log(2.0);
    } else {
        r.regime = BoundRegime::above_one;
        r.log_lower = 2.0 * lg_a + log_gamma(4.0 * alpha) - log_gamma(2.0 * alpha - 1.0) -
                      log_gamma(2.0 * alpha + 1.0);
        r.log_upper = 2.0 * lg_a - std::log(2.0) + std::log(2.0 * alpha - 1.0) +
                      std::log(4.0 * alpha - 1.0) + (4.0 * alpha - 1.0) * std::log(2.0);
    }
    detail::finish_report(r);
    return r;
}

// Eigenvalue lower bound for the alpha = 1/2 symbol: lambda_min >= pi/(N ln N).
inline double half_case_lower(std::size_t n) {
    if (n < 3) throw domain_error("half_case_lower requires N >= 3");
    const double nd = static_cast<double>(n);
    const double pi = 3.14159265358979323846;
    return pi / (nd * std::log(nd));
}

// ln c_alpha for large alpha: ln[sqrt(8 pi a) (4a/e)^{2a}].
inline double c_alpha_large(double alpha) {
    if (alpha <= 0.0) throw domain_error("c_alpha_large requires alpha > 0");
    const double pi = 3.14159265358979323846;
    return 0.5 * std::log(8.0 * pi * alpha) + 2.0 * alpha * (std::log(4.0 * alpha) - 1.0);
}

// Reference upper bound for integer alpha, returned in log space.  Printed
// for comparison only; nothing is asserted against it.
inline BoundsReport integer_reference_upper(unsigned alpha) {
    if (alpha == 0) throw domain_error("integer_reference_upper requires alpha >= 1");
    const double a = static_cast<double>(alpha);
    BoundsReport r;
    r.alpha = a;
    r.regime = BoundRegime::integer_reference;
    r.log_lower = 2.0 * log_gamma(a) + log_gamma(4.0 * a) - log_gamma(2.0 * a - 1.0) -
                  log_gamma(2.0 * a + 1.0);
    r.log_upper = std::log(4.0 * a + 1.0) - std::log(2.0 * a + 1.0) + log_gamma(4.0 * a + 1.0) +
                  2.0 * log_gamma(a + 1.0) - 2.0 * log_gamma(2.0 * a + 1.0);
    detail::finish_report(r);
    return r;
}

}  // namespace fht
