#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "toeplitz.hpp"

namespace fht {

struct LiftResult {
    std::vector<double> column;  // first column of the lifted inverse, length N+1
    double a_p = 0.0;            // A(P) = -2 P'(1)/P(1) for real coefficients
    double p1 = 0.0;
    double dp1 = 0.0;
};

// The source writes the lift denominator both as N+1+A(P) and N+2+A(P); the
// dense oracle at small N singles out the N+2 form, pinned here and in tests.
inline constexpr int lift_denominator_offset = 2;

// First column of T_N(|1-chi|^2 / |P|^2)^{-1} from the degree N+1 predictor
// polynomial P of the base symbol.  All coefficients are real here, so the
// conjugations in the general formula drop out.
inline LiftResult lift_first_column(const PredictorPoly& p) {
    const std::vector<double>& beta = p.gamma;
    if (beta.size() < 2) throw domain_error("predictor degree must be at least 1");
    const std::size_t n = beta.size() - 2;  // column indices k = 0..N

    LiftResult out;
    out.p1 = p.at_one();
    out.dp1 = p.derivative_at_one();
    if (std::abs(out.p1) < 1e-14)
        throw singular_lift_error("predictor vanishes at 1, lift ratio undefined");
    out.a_p = -2.0 * out.dp1 / out.p1;

    const double denom = static_cast<double>(n) + lift_denominator_offset + out.a_p;
    if (std::abs(denom) < 1e-12)
        throw singular_lift_error("lift denominator N+2+A(P) vanishes");

    const double b0 = beta[0];
    out.column.resize(n + 1);
    // running sums over the head and tail of beta, updated in O(1) per k
    double s = 0.0;       // sum_{u<=k} beta_u
    double m = 0.0;       // sum_{u<=k} u beta_u
    double t = 0.0;       // sum over the top window u in [N+2-k, N+1]
    double tu = 0.0;      // same window, weighted by u
    for (std::size_t k = 0; k <= n; ++k) {
        s += beta[k];
        m += static_cast<double>(k) * beta[k];
        if (k >= 1) {
            const std::size_t u = n + 2 - k;
            t += beta[u];
            tu += static_cast<double>(u) * beta[u];
        }
        const double q2p = tu + (static_cast<double>(k) - static_cast<double>(n) - 1.0) * t;
        const double q1p = (static_cast<double>(k) + 2.0) * s - m;
        const double a_nk = q2p - q1p + s;
        out.column[k] = b0 * s + b0 * a_nk / denom;
    }
    return out;
}

}  // namespace fht
