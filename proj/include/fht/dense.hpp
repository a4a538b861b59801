#ifndef FHT_DENSE_HPP
#define FHT_DENSE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "fht/errors.hpp"
#include "fht/toeplitz.hpp"

namespace fht {

// Dense symmetric matrix in row-major order.  Ground-truth path for tests;
// independent of the Levinson/Gohberg-Semencul route.  Stored and factored
// in long double: the oracle must stay meaningfully more accurate than the
// library path on matrices conditioned like N^{2a}.
struct DenseMatrix {
    int size = 0;
    std::vector<long double> a;

    long double& at(int i, int j) { return a[static_cast<std::size_t>(i) * size + j]; }
    long double at(int i, int j) const { return a[static_cast<std::size_t>(i) * size + j]; }
};

namespace detail {

// In-place Cholesky factorization A = L L^T (lower triangle).
inline void cholesky(DenseMatrix& m) {
    const int n = m.size;
    for (int j = 0; j < n; ++j) {
        long double d = m.at(j, j);
        for (int k = 0; k < j; ++k) d -= m.at(j, k) * m.at(j, k);
        if (!(d > 0.0L))
            throw domain_error("cholesky: matrix not positive definite");
        d = std::sqrt(d);
        m.at(j, j) = d;
        for (int i = j + 1; i < n; ++i) {
            long double s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= m.at(i, k) * m.at(j, k);
            m.at(i, j) = s / d;
        }
    }
}

inline std::vector<double> cholesky_solve(const DenseMatrix& l, const std::vector<double>& rhs) {
    const int n = l.size;
    std::vector<long double> b(rhs.begin(), rhs.end());
    for (int i = 0; i < n; ++i) {
        long double s = b[static_cast<std::size_t>(i)];
        for (int k = 0; k < i; ++k) s -= l.at(i, k) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(i)] = s / l.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        long double s = b[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n; ++k) s -= l.at(k, i) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(i)] = s / l.at(i, i);
    }
    return std::vector<double>(b.begin(), b.end());
}

} // namespace detail

// Full dense inverse of T_N(phi) by Cholesky solves against unit vectors.
inline DenseMatrix dense_inverse_oracle(const SymbolSpec& spec, int n) {
    if (n > 1024) throw domain_error("dense_inverse_oracle: N > 1024 guard");
    ToeplitzMatrix t = build_matrix(spec, n);
    const int sz = t.size();
    DenseMatrix l;
    l.size = sz;
    l.a.resize(static_cast<std::size_t>(sz) * sz);
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) l.at(i, j) = t.entry(i, j);
    detail::cholesky(l);

    DenseMatrix inv;
    inv.size = sz;
    inv.a.resize(static_cast<std::size_t>(sz) * sz);
    std::vector<double> e(static_cast<std::size_t>(sz), 0.0);
    for (int j = 0; j < sz; ++j) {
        e[static_cast<std::size_t>(j)] = 1.0;
        std::vector<double> col = detail::cholesky_solve(l, e);
        for (int i = 0; i < sz; ++i) inv.at(i, j) = col[static_cast<std::size_t>(i)];
        e[static_cast<std::size_t>(j)] = 0.0;
    }
    return inv;
}

} // namespace fht

#endif
