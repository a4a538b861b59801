#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "special.hpp"
#include "symbols.hpp"
#include "toeplitz.hpp"

namespace fht {

// Discretized integral operator on (0,1): nodes/weights of a Gauss-Legendre
// rule together with the kernel sampled on the node grid.
struct KernelOperator {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<std::vector<double>> kmat;

    std::size_t size() const { return nodes.size(); }
};

inline KernelOperator nystrom_from_kernel(const std::function<double(double, double)>& kernel,
                                          std::size_t m) {
    if (m == 0) throw domain_error("quadrature size must be positive");
    KernelOperator op;
    auto rule = gauss_legendre(m);
    op.nodes.resize(m);
    op.weights.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        // map from [-1,1] to (0,1)
        op.nodes[i] = 0.5 * (rule.nodes[i] + 1.0);
        op.weights[i] = 0.5 * rule.weights[i];
    }
    op.kmat.assign(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            op.kmat[i][j] = kernel(op.nodes[i], op.nodes[j]);
    return op;
}

inline KernelOperator nystrom(double alpha, std::size_t m) {
    if (alpha <= 0.0) throw domain_error("nystrom requires alpha > 0");
    if (m < 8) throw domain_error("nystrom requires m >= 8");
    if (alpha == 0.5)
        throw excluded_case_error("alpha == 1/2: kernel has a logarithmic diagonal, not handled");

    // Sample the kernel off the diagonal and choose the diagonal entries so
    // each quadrature row reproduces the exact row integral of the kernel,
    //   int_0^1 G(x,y) dy = x^a (1-x)^a Gamma(a)^2 / Gamma(2a+1)
    // (swap the order of integration; the inner y-integral is a Beta).
    // For a < 1/2 this is forced (the diagonal diverges like |x-y|^{2a-1});
    // for a > 1/2 it cancels the quadrature defect of the diagonal kink and
    // gains several orders of accuracy over sampling G on the diagonal.
    KernelOperator op = nystrom_from_kernel(
        [alpha](double x, double y) { return x == y ? 0.0 : kernel_G(alpha, x, y); }, m);
    const double row_const = std::exp(2.0 * log_gamma(alpha) - log_gamma(2.0 * alpha + 1.0));
    for (std::size_t i = 0; i < m; ++i) {
        const double x = op.nodes[i];
        const double rowint = std::pow(x * (1.0 - x), alpha) * row_const;
        double off = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) off += op.weights[j] * op.kmat[i][j];
        op.kmat[i][i] = (rowint - off) / op.weights[i];
    }
    return op;
}

// Largest eigenvalue of the symmetrized matrix W^{1/2} K W^{1/2} by power
// iteration.  Equals the spectral radius of the Nystrom operator since the
// kernel is symmetric and positive.
inline double spectral_radius(const KernelOperator& op, double tol = 1e-13,
                              std::vector<double>* eigenvector = nullptr) {
    const std::size_t m = op.size();
    std::vector<double> sqw(m);
    for (std::size_t i = 0; i < m; ++i) sqw[i] = std::sqrt(op.weights[i]);
    std::vector<std::vector<double>> s(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s[i][j] = sqw[i] * op.kmat[i][j] * sqw[j];

    std::vector<double> v(m, 1.0 / std::sqrt(static_cast<double>(m))), w(m);
    double mu = 0.0;
    for (std::size_t it = 0; it < 50000; ++it) {
        for (std::size_t i = 0; i < m; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += s[i][j] * v[j];
            w[i] = acc;
        }
        double num = 0.0, nrm = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            num += v[i] * w[i];
            nrm += w[i] * w[i];
        }
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) return 0.0;
        for (std::size_t i = 0; i < m; ++i) v[i] = w[i] / nrm;
        if (it > 0 && std::abs(num - mu) <= tol * std::abs(num)) {
            mu = num;
            break;
        }
        mu = num;
    }
    if (eigenvector) {
        // undo the symmetrizing change of variables
        eigenvector->resize(m);
        for (std::size_t i = 0; i < m; ++i) (*eigenvector)[i] = v[i] / sqw[i];
    }
    return mu;
}

// trace((WK)^s) for the discretized kernel operator, s >= 1.  Matrix powers
// are rescaled between multiplies so large spectral radii do not overflow.
inline double iterated_trace(double alpha, unsigned s, std::size_t m) {
    if (s == 0) throw domain_error("iterated_trace requires s >= 1");
    if (alpha <= 0.0) throw domain_error("iterated_trace requires alpha > 0");
    // for a > 1/2 the kernel is finite (and smooth) on the diagonal, so the
    // plain sampled diagonal integrates the iterated-kernel diagonal best
    KernelOperator op =
        alpha > 0.5
            ? nystrom_from_kernel(
                  [alpha](double x, double y) { return kernel_G(alpha, x, y); }, m)
            : nystrom(alpha, m);
    const std::size_t n = op.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = op.weights[i] * op.kmat[i][j];

    std::vector<std::vector<double>> p = a;
    double logscale = 0.0;
    for (unsigned step = 2; step <= s; ++step) {
        double mx = 0.0;
        for (auto& row : p)
            for (double x : row) mx = std::max(mx, std::abs(x));
        if (mx > 0.0 && (mx > 1e100 || mx < 1e-100)) {
            for (auto& row : p)
                for (double& x : row) x /= mx;
            logscale += std::log(mx);
        }
        std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const double pik = p[i][k];
                if (pik == 0.0) continue;
                for (std::size_t j = 0; j < n; ++j) q[i][j] += pik * a[k][j];
            }
        p.swap(q);
    }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += p[i][i];
    return tr * std::exp(logscale);
}

struct CAlphaEstimate {
    double alpha = 0.0;
    std::string method;
    std::vector<std::pair<std::size_t, double>> raw;  // (resolution, estimate)
    double extrapolated = 0.0;
    double err_indicator = 0.0;  // relative change between the last two raw values
    bool flagged = false;        // extrapolation fell outside the last two raw values
};

namespace detail {

// Richardson step on the last raw values.  With three or more resolutions the
// convergence order is estimated from successive differences; with two, a
// first-order error model in 1/resolution is assumed.
inline void extrapolate(CAlphaEstimate& est) {
    const auto& r = est.raw;
    if (r.size() == 1) {
        est.extrapolated = r[0].second;
        est.err_indicator = 0.0;
        return;
    }
    const double v1 = r[r.size() - 2].second;
    const double v2 = r[r.size() - 1].second;
    const double n1 = static_cast<double>(r[r.size() - 2].first);
    const double n2 = static_cast<double>(r[r.size() - 1].first);
    double order = 1.0;
    if (r.size() >= 3) {
        const double v0 = r[r.size() - 3].second;
        const double n0 = static_cast<double>(r[r.size() - 3].first);
        const double d0 = v1 - v0;
        const double d1 = v2 - v1;
        if (d0 != 0.0 && d1 != 0.0 && d0 * d1 > 0.0) {
            const double est_order = std::log(std::abs(d0 / d1)) / std::log(n2 / n1);
            if (std::isfinite(est_order) && est_order > 0.25 && est_order < 8.0) {
                (void)n0;
                order = est_order;
            }
        }
    }
    const double factor = std::pow(n2 / n1, order) - 1.0;
    est.extrapolated = v2 + (v2 - v1) / factor;
    est.err_indicator = std::abs(v2 - v1) / std::max(std::abs(v2), 1e-300);
    const double lo = std::min(v1, v2), hi = std::max(v1, v2);
    const double slack = 2.0 * (hi - lo) + 1e-12 * std::abs(v2);
    est.flagged = est.extrapolated < lo - slack || est.extrapolated > hi + slack;
    if (est.flagged) est.extrapolated = v2;
}

}  // namespace detail

// Minimal-eigenvalue constant from the limiting kernel: c = Gamma(a)^2 / rho.
inline CAlphaEstimate c_alpha_kernel(double alpha,
                                     std::vector<std::size_t> resolutions = {128, 192, 256}) {
    if (alpha <= 0.0) throw domain_error("c_alpha_kernel requires alpha > 0");
    if (alpha == 0.5) throw excluded_case_error("alpha == 1/2 is not covered by the kernel route");
    if (resolutions.empty()) throw domain_error("need at least one resolution");
    CAlphaEstimate est;
    est.alpha = alpha;
    est.method = "kernel";
    const double g2 = std::exp(2.0 * log_gamma(alpha));
    for (std::size_t m : resolutions) {
        const double rho = spectral_radius(nystrom(alpha, m));
        if (rho <= 0.0) throw non_convergence_error("power iteration collapsed", rho);
        est.raw.emplace_back(m, g2 / rho);
    }
    detail::extrapolate(est);
    return est;
}

// Same constant from finite sections: v_N = N^{2a} lambda_min(T_N) / f1(1),
// extrapolated first order in 1/N.
inline CAlphaEstimate c_alpha_toeplitz(double alpha, std::vector<std::size_t> sizes,
                                       const TrigPoly& f1 = TrigPoly::constant(1.0)) {
    if (alpha <= 0.0) throw domain_error("c_alpha_toeplitz requires alpha > 0");
    if (sizes.empty()) throw domain_error("need at least one matrix size");
    SymbolSpec spec(alpha, f1);
    CAlphaEstimate est;
    est.alpha = alpha;
    est.method = "toeplitz";
    const double f1_1 = spec.f1_at_one();
    for (std::size_t n : sizes) {
        GSInverse inv = gs_inverse(spec, n);
        const double lam = lambda_min(inv);
        const double scale = std::pow(static_cast<double>(n), 2.0 * alpha);
        est.raw.emplace_back(n, scale * lam / f1_1);
    }
    if (est.raw.size() >= 2) {
        // stay with the first-order model here: the finite-section error for
        // these symbols behaves like 1/N even when the kernel route does not
        const double v1 = est.raw[est.raw.size() - 2].second;
        const double v2 = est.raw[est.raw.size() - 1].second;
        const double n1 = static_cast<double>(est.raw[est.raw.size() - 2].first);
        const double n2 = static_cast<double>(est.raw[est.raw.size() - 1].first);
        est.extrapolated = v2 + (v2 - v1) * (1.0 / n2) / (1.0 / n1 - 1.0 / n2);
        est.err_indicator = std::abs(v2 - v1) / std::max(std::abs(v2), 1e-300);
        const double lo = std::min(v1, v2), hi = std::max(v1, v2);
        const double slack = 2.0 * (hi - lo) + 1e-12 * std::abs(v2);
        est.flagged = est.extrapolated < lo - slack || est.extrapolated > hi + slack;
    } else {
        est.extrapolated = est.raw[0].second;
    }
    return est;
}

}  // namespace fht
