#ifndef FHT_SYMBOLS_HPP
#define FHT_SYMBOLS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "fht/errors.hpp"
#include "fht/special.hpp"

namespace fht {

// Real even trigonometric polynomial f(theta) = c0 + 2 sum_n c_n cos(n theta).
// Real symmetric coefficients are the Hermitian case the library supports;
// complex-valued coefficient input is rejected at the CLI boundary.
class TrigPoly {
public:
    TrigPoly() : coeffs_{1.0} {}

    static TrigPoly constant(double value) {
        TrigPoly p;
        p.coeffs_ = {value};
        return p;
    }

    // Coefficients c(0..d); c(-n) = c(n) implied.
    static TrigPoly from_cosine_coeffs(std::vector<double> c) {
        if (c.empty())
            throw domain_error("TrigPoly: empty coefficient list");
        TrigPoly p;
        p.coeffs_ = std::move(c);
        return p;
    }

    // Full centered list c(-d..d); must have odd length and even symmetry.
    static TrigPoly from_centered(const std::vector<double>& centered) {
        if (centered.empty() || centered.size() % 2 == 0)
            throw domain_error("TrigPoly: centered list must have odd length");
        const std::size_t d = centered.size() / 2;
        for (std::size_t n = 1; n <= d; ++n) {
            if (centered[d - n] != centered[d + n])
                throw domain_error(
                    "TrigPoly: coefficients violate Hermitian symmetry "
                    "c(-n) = conj(c(n))");
        }
        return from_cosine_coeffs(
            std::vector<double>(centered.begin() + static_cast<long>(d), centered.end()));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    double coeff(int n) const {
        const int m = std::abs(n);
        return m <= degree() ? coeffs_[static_cast<std::size_t>(m)] : 0.0;
    }

    double eval(double theta) const {
        double v = coeffs_[0];
        for (int n = 1; n <= degree(); ++n)
            v += 2.0 * coeffs_[static_cast<std::size_t>(n)] * std::cos(n * theta);
        return v;
    }

    double min_on_circle(int grid = 4096) const {
        double m = eval(0.0);
        for (int j = 1; j < grid; ++j)
            m = std::min(m, eval(2.0 * std::numbers::pi * j / grid));
        return m;
    }

    bool is_constant_one() const { return degree() == 0 && coeffs_[0] == 1.0; }

    // Wiener-type weight sum |n|^(3/2) |c(n)| over n != 0.
    double weight_a32() const {
        double s = 0.0;
        for (int n = 1; n <= degree(); ++n)
            s += 2.0 * std::pow(n, 1.5) * std::abs(coeffs_[static_cast<std::size_t>(n)]);
        return s;
    }

private:
    std::vector<double> coeffs_;
};

// The symbol |1 - e^{i theta}|^{2 alpha} f1(e^{i theta}).
struct SymbolSpec {
    double alpha;
    TrigPoly f1;

    explicit SymbolSpec(double a, TrigPoly regular_part = TrigPoly::constant(1.0))
        : alpha(a), f1(std::move(regular_part)) {
        if (!(alpha > -0.5))
            throw domain_error("SymbolSpec: requires alpha > -1/2");
        if (!(f1.min_on_circle() > 0.0))
            throw domain_error("SymbolSpec: f1 must be strictly positive on the circle");
    }

    double f1_at_one() const { return f1.eval(0.0); }
};

struct CoeffTable {
    enum class Kind { phi_hat, beta_alpha, g1_coeffs };
    Kind kind;
    std::vector<double> values;
};

namespace detail {

// n-th Fourier coefficient of |1 - e^{i theta}|^{2 alpha}:
//   (-1)^n Gamma(2 alpha + 1) / (Gamma(alpha + n + 1) Gamma(alpha - n + 1)).
// For alpha - n + 1 <= 0 the reflection formula supplies 1/Gamma with the
// sign carried by sin(pi (alpha - n + 1)); at the poles (integer alpha,
// n > alpha + 1) the coefficient vanishes.
// Computed in long double: for large exponents the finite sections condition
// like N^{2 alpha}, so entry-level accuracy needs the coefficients correct to
// nearly full double precision even at lags in the thousands.
inline double pure_fourier_coeff(double alpha, int n) {
    const int m = std::abs(n);
    if (alpha == 0.0) return m == 0 ? 1.0 : 0.0;
    const long double al = static_cast<long double>(alpha);
    const long double sign_n = (m % 2 == 0) ? 1.0L : -1.0L;
    const long double a = al - m + 1.0L;
    const long double log_num = std::lgamma(2.0L * al + 1.0L);
    const long double log_den1 = std::lgamma(al + m + 1.0L);
    if (a > 0.0L)
        return static_cast<double>(sign_n * std::exp(log_num - log_den1 - std::lgamma(a)));
    const long double nearest = std::round(a);
    if (std::abs(static_cast<double>(a - nearest)) < 1e-13) return 0.0; // pole of Gamma(a)
    constexpr long double pi_l = 3.14159265358979323846264338327950288L;
    // reduce the argument before taking the sine: sin(pi a) for large |a|
    const long double s = std::sin(pi_l * (a - nearest)) * ((static_cast<long long>(nearest) % 2 == 0) ? 1.0L : -1.0L);
    return static_cast<double>(sign_n * (s / pi_l) *
                               std::exp(log_num + std::lgamma(1.0L - a) - log_den1));
}

// Power-series inverse of a polynomial g (g[0] != 0), first len terms.
inline std::vector<double> invert_series(const std::vector<double>& g, std::size_t len) {
    if (g.empty() || g[0] == 0.0)
        throw factorization_error("invert_series: zero constant term");
    std::vector<double> inv(len, 0.0);
    inv[0] = 1.0 / g[0];
    for (std::size_t n = 1; n < len; ++n) {
        double acc = 0.0;
        const std::size_t kmax = std::min(n, g.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k)
            acc += g[k] * inv[n - k];
        inv[n] = -acc / g[0];
    }
    return inv;
}

} // namespace detail

// n-th Fourier coefficient of the full symbol.  The f1 part is a
// polynomial, so the convolution with the closed-form singular sequence is
// a finite, exact sum.
inline double phi_fourier_coeff(const SymbolSpec& spec, int n) {
    if (spec.f1.is_constant_one())
        return detail::pure_fourier_coeff(spec.alpha, n);
    double acc = 0.0;
    const int d = spec.f1.degree();
    for (int j = -d; j <= d; ++j)
        acc += spec.f1.coeff(j) * detail::pure_fourier_coeff(spec.alpha, n - j);
    return acc;
}

// First upto+1 power-series coefficients of the outer spectral factor g1
// of f1 (g1(0) > 0, f1 = g1 * conj(g1) on the circle), by the cepstral
// method: g1 = exp of the analytic projection of (1/2) log f1.
inline CoeffTable spectral_factor(const TrigPoly& f1, int upto) {
    if (upto < 0) throw domain_error("spectral_factor: upto must be >= 0");
    if (!(f1.min_on_circle() > 0.0))
        throw factorization_error("spectral_factor: f1 must be strictly positive");

    const int n_coeffs = upto + 1;
    const int grid = std::max(256, 16 * n_coeffs);
    std::vector<double> logf(static_cast<std::size_t>(grid));
    for (int j = 0; j < grid; ++j)
        logf[static_cast<std::size_t>(j)] =
            std::log(f1.eval(2.0 * std::numbers::pi * j / grid));

    // h = analytic projection of log f1, halved constant term
    std::vector<double> h(static_cast<std::size_t>(n_coeffs), 0.0);
    for (int l = 0; l < n_coeffs; ++l) {
        double acc = 0.0;
        for (int j = 0; j < grid; ++j)
            acc += logf[static_cast<std::size_t>(j)] *
                   std::cos(2.0 * std::numbers::pi * l * j / grid);
        h[static_cast<std::size_t>(l)] = acc / grid;
    }
    h[0] *= 0.5;

    // g = exp(h) as a power series
    std::vector<double> g(static_cast<std::size_t>(n_coeffs), 0.0);
    g[0] = std::exp(h[0]);
    for (int n = 1; n < n_coeffs; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k)
            acc += k * h[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(n - k)];
        g[static_cast<std::size_t>(n)] = acc / n;
    }
    return CoeffTable{CoeffTable::Kind::g1_coeffs, std::move(g)};
}

// Coefficients beta_u of 1/g = (1 - chi)^(-alpha) / g1, u = 0..upto.
inline CoeffTable beta_coeffs(const SymbolSpec& spec, int upto) {
    if (upto < 0) throw domain_error("beta_coeffs: upto must be >= 0");
    std::vector<double> beta(static_cast<std::size_t>(upto) + 1);
    if (spec.f1.is_constant_one()) {
        for (int u = 0; u <= upto; ++u)
            beta[static_cast<std::size_t>(u)] = gen_binom_neg(spec.alpha, u);
    } else {
        CoeffTable g1 = spectral_factor(spec.f1, spec.f1.degree());
        const std::size_t len =
            std::max<std::size_t>(static_cast<std::size_t>(upto) + 1, 64);
        std::vector<double> inv = detail::invert_series(g1.values, len);
        for (int u = 0; u <= upto; ++u) {
            double acc = 0.0;
            for (int v = 0; v <= u; ++v)
                acc += gen_binom_neg(spec.alpha, u - v) * inv[static_cast<std::size_t>(v)];
            beta[static_cast<std::size_t>(u)] = acc;
        }
    }
    return CoeffTable{CoeffTable::Kind::beta_alpha, std::move(beta)};
}

// Constant term of 1/g (= 1/g1(0) since (1-chi)^(-alpha) starts at 1).
inline double beta0(const SymbolSpec& spec) {
    if (spec.f1.is_constant_one()) return 1.0;
    return beta_coeffs(spec, 0).values[0];
}

// g1 evaluated at the singular point chi = 1.
inline double g1_at_one(const SymbolSpec& spec) {
    if (spec.f1.is_constant_one()) return 1.0;
    CoeffTable g1 = spectral_factor(spec.f1, std::max(spec.f1.degree(), 16));
    double acc = 0.0;
    for (double c : g1.values) acc += c;
    return acc;
}

} // namespace fht

#endif
