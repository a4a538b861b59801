#ifndef FHT_TOEPLITZ_HPP
#define FHT_TOEPLITZ_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "fht/errors.hpp"
#include "fht/symbols.hpp"

namespace fht {

// (N+1)x(N+1) symmetric Toeplitz matrix with entries phi_hat(l - k),
// stored as the coefficient sequence phi_hat(0..N).
struct ToeplitzMatrix {
    int n;                       // matrix size is n+1
    std::vector<double> coeffs;  // phi_hat(0..n)

    double entry(int k, int l) const {
        return coeffs[static_cast<std::size_t>(std::abs(l - k))];
    }
    int size() const { return n + 1; }
};

inline ToeplitzMatrix build_matrix(const SymbolSpec& spec, int n) {
    if (n < 1) throw domain_error("build_matrix: N must be >= 1");
    ToeplitzMatrix t;
    t.n = n;
    t.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        t.coeffs[static_cast<std::size_t>(j)] = phi_fourier_coeff(spec, j);
    return t;
}

// Predictor polynomial of degree M: coefficients gamma_u proportional to
// the first column of T_M(phi)^{-1}, normalized by (T_M^{-1})_{11}^{1/2}.
struct PredictorPoly {
    std::vector<double> gamma; // u = 0..M

    int degree() const { return static_cast<int>(gamma.size()) - 1; }
    double at_one() const {
        double s = 0.0;
        for (double g : gamma) s += g;
        return s;
    }
    double derivative_at_one() const {
        double s = 0.0;
        for (std::size_t u = 1; u < gamma.size(); ++u)
            s += static_cast<double>(u) * gamma[u];
        return s;
    }
};

namespace detail {

// Levinson-Durbin on the autocovariance sequence r(0..M).  Returns the
// monic solution a of T_M a = (E, 0, ..., 0)^T and the prediction error E.
// Reflection coefficients outside (-1, 1) mean T lost positive
// definiteness; abort with the step index.  Accumulation runs in long
// double: the matrices condition like N^{2a}, which burns through most of a
// double's mantissa for large a by N ~ 2048.
inline std::vector<double> levinson(const std::vector<double>& r, double& error_out) {
    const int m_max = static_cast<int>(r.size()) - 1;
    std::vector<long double> a(static_cast<std::size_t>(m_max) + 1, 0.0L);
    a[0] = 1.0L;
    long double err = static_cast<long double>(r[0]);
    if (!(err > 0.0L)) throw recursion_abort_error("levinson: r(0) must be positive", 0);
    std::vector<long double> tmp(a.size());
    for (int m = 1; m <= m_max; ++m) {
        long double acc = 0.0L;
        for (int j = 0; j < m; ++j)
            acc += a[static_cast<std::size_t>(j)] *
                   static_cast<long double>(r[static_cast<std::size_t>(m - j)]);
        const long double k = -acc / err;
        if (!(std::abs(static_cast<double>(k)) < 1.0))
            throw recursion_abort_error("levinson: reflection coefficient left (-1,1)", m);
        for (int j = 0; j <= m; ++j)
            tmp[static_cast<std::size_t>(j)] =
                a[static_cast<std::size_t>(j)] +
                k * a[static_cast<std::size_t>(m - j)];
        std::swap(a, tmp);
        err *= (1.0L - k * k);
    }
    error_out = static_cast<double>(err);
    std::vector<double> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = static_cast<double>(a[j]);
    return out;
}

} // namespace detail

inline PredictorPoly predictor_poly(const SymbolSpec& spec, int m) {
    if (m < 0) throw domain_error("predictor_poly: degree must be >= 0");
    std::vector<double> r(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j)
        r[static_cast<std::size_t>(j)] = phi_fourier_coeff(spec, j);
    double err = 0.0;
    std::vector<double> a = detail::levinson(r, err);
    const double scale = 1.0 / std::sqrt(err);
    for (double& v : a) v *= scale;
    return PredictorPoly{std::move(a)};
}

// Gohberg-Semencul representation of T_N(phi)^{-1}: the coefficient vector
// of the degree-(N+1) predictor polynomial.
struct GSInverse {
    int n;                     // inverse of the (n+1)x(n+1) matrix
    std::vector<double> beta;  // length n+2
};

inline GSInverse gs_inverse(const SymbolSpec& spec, int n) {
    if (n < 1) throw domain_error("gs_inverse: N must be >= 1");
    PredictorPoly p = predictor_poly(spec, n + 1);
    return GSInverse{n, std::move(p.gamma)};
}

// Entry (k+1, l+1) of the inverse:
//   sum_{u=0}^{k} beta_{k-u} beta_{l-u}
//   - sum_{v=0}^{k} beta_{v+N+1-l} beta_{v+N+1-k}    (k <= l).
// The second sum's offset N+1 is pinned against the dense solve at small N
// (see the convention test).
inline double gs_entry(const GSInverse& inv, int k, int l) {
    const int n = inv.n;
    if (k < 0 || l < 0 || k > n || l > n)
        throw domain_error("gs_entry: index out of range");
    if (k > l) std::swap(k, l);
    const std::vector<double>& b = inv.beta;
    double s1 = 0.0, s2 = 0.0;
    for (int u = 0; u <= k; ++u)
        s1 += b[static_cast<std::size_t>(k - u)] * b[static_cast<std::size_t>(l - u)];
    for (int v = 0; v <= k; ++v)
        s2 += b[static_cast<std::size_t>(v + n + 1 - l)] *
              b[static_cast<std::size_t>(v + n + 1 - k)];
    return s1 - s2;
}

// y = T^{-1} x through the two triangular-Toeplitz products
// T^{-1} = A A^T - B B^T with A = lower(beta_0..beta_N) and
// B = lower(beta_{N+1}..beta_1).  Direct O(N^2).
inline std::vector<double> gs_apply(const GSInverse& inv, const std::vector<double>& x) {
    const int sz = inv.n + 1;
    const std::vector<double>& b = inv.beta;
    std::vector<double> w(static_cast<std::size_t>(sz), 0.0);
    std::vector<double> y(static_cast<std::size_t>(sz), 0.0);
    // w = A^T x; y = A w
    for (int u = 0; u < sz; ++u) {
        double acc = 0.0;
        for (int k = u; k < sz; ++k)
            acc += b[static_cast<std::size_t>(k - u)] * x[static_cast<std::size_t>(k)];
        w[static_cast<std::size_t>(u)] = acc;
    }
    for (int k = 0; k < sz; ++k) {
        double acc = 0.0;
        for (int u = 0; u <= k; ++u)
            acc += b[static_cast<std::size_t>(k - u)] * w[static_cast<std::size_t>(u)];
        y[static_cast<std::size_t>(k)] = acc;
    }
    // subtract B B^T x, with B's first column beta_{N+1}, beta_N, ..., beta_1
    for (int u = 0; u < sz; ++u) {
        double acc = 0.0;
        for (int k = u; k < sz; ++k)
            acc += b[static_cast<std::size_t>(inv.n + 1 - (k - u))] *
                   x[static_cast<std::size_t>(k)];
        w[static_cast<std::size_t>(u)] = acc;
    }
    for (int k = 0; k < sz; ++k) {
        double acc = 0.0;
        for (int u = 0; u <= k; ++u)
            acc += b[static_cast<std::size_t>(inv.n + 1 - (k - u))] *
                   w[static_cast<std::size_t>(u)];
        y[static_cast<std::size_t>(k)] -= acc;
    }
    return y;
}

// Trace of T_N(phi)^{-1} from the GS representation with running sums.
inline double inverse_trace(const GSInverse& inv) {
    const int n = inv.n;
    const std::vector<double>& b = inv.beta;
    double tr = 0.0;
    double s1 = 0.0; // sum_{u=0}^{k} beta_u^2
    double s2 = 0.0; // sum_{w=N+1-k}^{N+1} beta_w^2
    for (int k = 0; k <= n; ++k) {
        s1 += b[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
        s2 += b[static_cast<std::size_t>(n + 1 - k)] * b[static_cast<std::size_t>(n + 1 - k)];
        tr += s1 - s2;
    }
    return tr;
}

// Smallest eigenvalue of T_N(phi) by power iteration on the inverse,
// applied through the GS representation.  The start vector is the
// half-sine profile, close to the extremal eigenvector shape.
inline double lambda_min(const GSInverse& inv, double tol = 1e-12,
                         int max_iters = 20000) {
    const int sz = inv.n + 1;
    std::vector<double> v(static_cast<std::size_t>(sz));
    for (int k = 0; k < sz; ++k)
        v[static_cast<std::size_t>(k)] =
            std::sin(std::numbers::pi * (k + 1) / (sz + 1));
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : v) c /= norm;

    double mu_prev = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        std::vector<double> w = gs_apply(inv, v);
        double mu = 0.0, wn = 0.0;
        for (int k = 0; k < sz; ++k) {
            mu += v[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(k)];
            wn += w[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(k)];
        }
        wn = std::sqrt(wn);
        if (wn == 0.0)
            throw non_convergence_error("lambda_min: inverse annihilated iterate", mu);
        for (int k = 0; k < sz; ++k) v[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(k)] / wn;
        if (it > 0 && std::abs(mu - mu_prev) < tol * std::abs(mu))
            return 1.0 / mu;
        mu_prev = mu;
    }
    throw non_convergence_error("lambda_min: power iteration did not converge",
                                1.0 / mu_prev);
}

inline double inverse_trace(const SymbolSpec& spec, int n) {
    return inverse_trace(gs_inverse(spec, n));
}

inline double lambda_min(const SymbolSpec& spec, int n, double tol = 1e-12,
                         int max_iters = 20000) {
    return lambda_min(gs_inverse(spec, n), tol, max_iters);
}

} // namespace fht

#endif
