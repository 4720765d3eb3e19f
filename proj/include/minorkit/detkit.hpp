#pragma once

/**
 * @file detkit.hpp
 * @brief Determinants over any RingScalar: Laplace cofactor expansion (small
 *        oracle), fraction-free Bareiss elimination, and Dodgson condensation
 *        with a Bareiss rescue; plus the adjugate and s(X) = 1^T adj(X) 1.
 *
 * Conventions: det of the 0x0 matrix is 1, adj of a 1x1 matrix is [[1]].
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "minorkit/errors.hpp"
#include "minorkit/matrix.hpp"
#include "minorkit/ring.hpp"

namespace minorkit {

enum class DetAlgo { cofactor, bareiss, condensation };

inline constexpr std::size_t kCofactorMaxOrder = 7;

/// Relative pivot threshold below which floating condensation falls back to Bareiss.
inline constexpr double kCondensationFloatPivotTol = 1e-12;

std::string_view to_string(DetAlgo algo);
DetAlgo parse_det_algo(std::string_view name);

namespace detail {

template <RingScalar R>
void require_square(const Matrix<R>& a, const char* who) {
    if (!a.is_square())
        throw UsageError(std::string(who) + ": matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         ", expected square");
}

template <RingScalar R>
R cofactor_rec(const Matrix<R>& a) {
    const std::size_t n = a.rows();
    if (n == 0) return a.one();
    if (n == 1) return a(0, 0);
    if (n == 2) return R(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
    R total = a.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (ScalarTraits<R>::is_zero(a(0, j))) continue;
        R term = R(a(0, j) * cofactor_rec(delete_row_col(a, 0, j)));
        total = (j % 2 == 0) ? R(total + term) : R(total - term);
    }
    return total;
}

template <RingScalar R>
double max_magnitude(const Matrix<R>& a) {
    double m = 0.0;
    for (const auto& v : a.data()) m = std::max(m, ScalarTraits<R>::magnitude(v));
    return m;
}

} // namespace detail

/// Laplace expansion along the first row; an oracle for orders <= 7.
template <RingScalar R>
R det_cofactor(const Matrix<R>& a) {
    detail::require_square(a, "det_cofactor");
    if (a.rows() > kCofactorMaxOrder)
        throw UsageError("det_cofactor: order " + std::to_string(a.rows()) + " exceeds oracle cap " +
                         std::to_string(kCofactorMaxOrder));
    return detail::cofactor_rec(a);
}

/**
 * Fraction-free Bareiss elimination.
 *
 * After step k every entry of the trailing block is a (k+1)x(k+1) minor of
 * the row-permuted input, so each division by the previous pivot is exact
 * over an integral domain. Exact scalars pivot on the first nonzero entry of
 * the column; floating scalars pivot on the largest magnitude.
 */
template <RingScalar R>
R det_bareiss(const Matrix<R>& a) {
    detail::require_square(a, "det_bareiss");
    const std::size_t n = a.rows();
    if (n == 0) return a.one();
    Matrix<R> m = a;
    R prev = a.one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        if constexpr (is_exact_v<R>) {
            for (std::size_t p = k; p < n; ++p)
                if (!ScalarTraits<R>::is_zero(m(p, k))) {
                    pivot = p;
                    break;
                }
        } else {
            double best = 0.0;
            for (std::size_t p = k; p < n; ++p) {
                double mag = ScalarTraits<R>::magnitude(m(p, k));
                if (mag > best) {
                    best = mag;
                    pivot = p;
                }
            }
        }
        if (pivot == n) return a.zero();
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            negate = !negate;
        }
        const R& mkk = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const R mik = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = ScalarTraits<R>::is_zero(mik) ? R(mkk * m(i, j)) : R(mkk * m(i, j) - mik * m(k, j));
                m(i, j) = ScalarTraits<R>::exact_div(num, prev);
            }
        }
        prev = mkk;
    }
    R d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
}

struct CondensationStats {
    std::size_t levels = 0;
    std::size_t rescues = 0; // entries recomputed by Bareiss because their divisor vanished
};

/**
 * Dodgson condensation.
 *
 * Level k holds every k x k contiguous minor of A (level 0 is an all-ones
 * (n+1)x(n+1) array, level 1 is A). Each step applies the Desnanot-Jacobi
 * identity
 *   L_{k+1}(i,j) = (L_k(i,j) L_k(i+1,j+1) - L_k(i,j+1) L_k(i+1,j)) / L_{k-1}(i+1,j+1).
 * When the divisor is zero (exact) or tiny relative to its level (floating),
 * the entry is computed directly as det_bareiss of the (k+1)-block of A.
 */
template <RingScalar R>
R det_condensation(const Matrix<R>& a, CondensationStats* stats = nullptr) {
    detail::require_square(a, "det_condensation");
    const std::size_t n = a.rows();
    CondensationStats local;
    CondensationStats& st = stats ? *stats : local;
    st = {};
    if (n == 0) return a.one();

    Matrix<R> prev = ones(n + 1, a.zero());
    Matrix<R> cur = a;
    st.levels = 1;
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t size = n - k; // order of the next level
        double divisor_floor = 0.0;
        if constexpr (!is_exact_v<R>) divisor_floor = kCondensationFloatPivotTol * detail::max_magnitude(prev);
        Matrix<R> next(size, size, a.zero());
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) {
                const R& divisor = prev(i + 1, j + 1);
                bool rescue;
                if constexpr (is_exact_v<R>)
                    rescue = ScalarTraits<R>::is_zero(divisor);
                else
                    rescue = !(ScalarTraits<R>::magnitude(divisor) > divisor_floor);
                if (rescue) {
                    next(i, j) = det_bareiss(block(a, MinorIndex{k + 1, i + 1, j + 1}));
                    ++st.rescues;
                    continue;
                }
                R num = R(cur(i, j) * cur(i + 1, j + 1) - cur(i, j + 1) * cur(i + 1, j));
                next(i, j) = ScalarTraits<R>::exact_div(num, divisor);
            }
        prev = std::move(cur);
        cur = std::move(next);
        ++st.levels;
    }
    return cur(0, 0);
}

template <RingScalar R>
R determinant(const Matrix<R>& a, DetAlgo algo) {
    switch (algo) {
    case DetAlgo::cofactor: return det_cofactor(a);
    case DetAlgo::bareiss: return det_bareiss(a);
    case DetAlgo::condensation: return det_condensation(a);
    }
    throw InternalError("determinant: unknown algorithm");
}

/// Determinant of the contiguous block A_r(i,j) (1-based), via Bareiss.
template <RingScalar R>
R minor_det(const Matrix<R>& a, std::size_t r, std::size_t i, std::size_t j) {
    return det_bareiss(block(a, MinorIndex{r, i, j}));
}

/// adj(A)_{ij} = (-1)^{i+j} det(A with row j and column i deleted).
template <RingScalar R>
Matrix<R> adjugate(const Matrix<R>& a) {
    detail::require_square(a, "adjugate");
    const std::size_t n = a.rows();
    if (n == 0) throw UsageError("adjugate: order must be at least 1");
    Matrix<R> adj(n, n, a.zero());
    if (n == 1) {
        adj(0, 0) = a.one();
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            R c = det_bareiss(delete_row_col(a, j, i));
            adj(i, j) = ((i + j) % 2 == 0) ? c : R(-c);
        }
    return adj;
}

/// Sum of all entries of a matrix.
template <RingScalar R>
R entry_sum(const Matrix<R>& a) {
    R total = a.zero();
    for (const auto& v : a.data()) total = R(total + v);
    return total;
}

/// s(X) = 1^T adj(X) 1.
template <RingScalar R>
R s_functional(const Matrix<R>& x) {
    detail::require_square(x, "s_functional");
    if (x.rows() == 0) return x.zero();
    return entry_sum(adjugate(x));
}

} // namespace minorkit
