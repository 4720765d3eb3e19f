#pragma once

/**
 * @file oracle.hpp
 * @brief Reference computations for the tests, written without detkit.
 *
 * Leibniz permutation sums, fraction Gaussian elimination over Q, and minors
 * cut out by explicit index loops.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "minorkit/matrix.hpp"

namespace oracle {

using minorkit::Matrix;
using minorkit::Rational;
using minorkit::ScalarTraits;

inline int permutation_sign(const std::vector<std::size_t>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Sum over all permutations; only for small orders.
template <typename R>
R leibniz(const Matrix<R>& a) {
    const std::size_t n = a.rows();
    R total = ScalarTraits<R>::zero_like(a.zero());
    if (n == 0) return ScalarTraits<R>::one_like(a.zero());
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        R term = ScalarTraits<R>::one_like(a.zero());
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            if (ScalarTraits<R>::is_zero(a(i, p[i]))) zero = true;
            else term = R(term * a(i, p[i]));
        }
        if (zero) continue;
        if (permutation_sign(p) > 0) total = R(total + term);
        else total = R(total - term);
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

/// Plain Gaussian elimination with fractions.
inline Rational gauss_det(Matrix<Rational> a) {
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

template <typename R>
struct Wide {
    using type = long double;
};
template <>
struct Wide<std::complex<double>> {
    using type = std::complex<long double>;
};

/// Partial-pivot LU determinant carried out in long double.
template <typename R>
R lu_det(const Matrix<R>& m) {
    using W = typename Wide<R>::type;
    const std::size_t n = m.rows();
    std::vector<std::vector<W>> a(n, std::vector<W>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<W>(m(i, j));
    W det = W(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        if (std::abs(a[p][k]) == 0) return R(0);
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const W f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return static_cast<R>(det);
}

/// r x r submatrix with rows i.. and columns j.. (1-based start).
template <typename R>
Matrix<R> cut(const Matrix<R>& a, std::size_t r, std::size_t i, std::size_t j) {
    Matrix<R> out(r, r, a.zero());
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) out(x, y) = a(i - 1 + x, j - 1 + y);
    return out;
}

/// a with row `row` and column `col` (0-based) removed.
template <typename R>
Matrix<R> strike(const Matrix<R>& a, std::size_t row, std::size_t col) {
    const std::size_t n = a.rows();
    Matrix<R> out(n - 1, n - 1, a.zero());
    for (std::size_t x = 0, ox = 0; x < n; ++x) {
        if (x == row) continue;
        for (std::size_t y = 0, oy = 0; y < n; ++y) {
            if (y == col) continue;
            out(ox, oy++) = a(x, y);
        }
        ++ox;
    }
    return out;
}

/// Adjugate from Leibniz cofactors.
template <typename R>
Matrix<R> adjugate(const Matrix<R>& a) {
    const std::size_t n = a.rows();
    Matrix<R> adj(n, n, a.zero());
    if (n == 1) {
        adj(0, 0) = ScalarTraits<R>::one_like(a.zero());
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            R c = leibniz(strike(a, j, i));
            adj(i, j) = (i + j) % 2 == 0 ? c : R(-c);
        }
    return adj;
}

template <typename R>
R sum_all(const Matrix<R>& a) {
    R s = ScalarTraits<R>::zero_like(a.zero());
    for (const auto& v : a.data()) s = R(s + v);
    return s;
}

} // namespace oracle
