#pragma once

/**
 * @file identity.hpp
 * @brief Executable certificates for the contiguous-minor identities.
 *
 * Symbolic claims are decided exactly: a claim is verified iff its residual is
 * the zero polynomial in Z[b1..b_{n-1}]. Since every quantity involved has
 * integer coefficients, a zero residual over Z certifies the identity over
 * every field of characteristic other than 2.
 *
 * Numeric (double) claims are smoke tests with an explicit relative tolerance.
 */

#include <cmath>
#include <cstdint>
#include <type_traits>
#include <string>
#include <vector>

#include "minorkit/detkit.hpp"
#include "minorkit/matrix.hpp"
#include "minorkit/report.hpp"
#include "minorkit/rng.hpp"
#include "minorkit/ring.hpp"

namespace minorkit {

inline constexpr std::size_t kDefaultSymbolicMaxOrder = 8;
inline constexpr double kNumericJohnsonTol = 1e-9;
inline constexpr double kRankOneMarginTol = 1e-8;
inline constexpr double kScalingFloatTol = 1e-9;

/// The four (n-1)-minors det A_{n-1}(1,1), (2,2), (1,2), (2,1).
template <RingScalar R>
struct CornerMinors {
    R m11, m22, m12, m21;
};

template <RingScalar R>
CornerMinors<R> corner_minors(const Matrix<R>& a) {
    detail::require_square(a, "corner_minors");
    const std::size_t n = a.rows();
    if (n < 2) throw UsageError("corner_minors: order must be at least 2");
    const std::size_t r = n - 1;
    return {minor_det(a, r, 1, 1), minor_det(a, r, 2, 2), minor_det(a, r, 1, 2), minor_det(a, r, 2, 1)};
}

// ---------------------------------------------------------------------------
// Johnson's identity and its reduction

/// det A_{n-1}(1,2) + det A_{n-1}(2,1) - 2 det A_{n-1}(1,1) for A = J_n + B over Z[b].
CertificateReport verify_johnson_symbolic(std::size_t n, std::size_t max_order = kDefaultSymbolicMaxOrder);

/**
 * Double-precision smoke test: `trials` random Toeplitz A with A + A^T = 2J_n,
 * superdiagonal constants uniform in [-2, 2]. Verified iff every trial has
 * |residual| <= tol * max(1, largest |minor|).
 */
CertificateReport verify_johnson_numeric(std::size_t n, std::size_t trials, std::uint64_t seed,
                                         double tol = kNumericJohnsonTol);

/**
 * With B the generic skew Toeplitz matrix, m = n-1, K = B_m(1,1), C = B_m(1,2):
 * even m checks det C = det K; odd m checks s(C) = s(K) and, with squares
 * formed independently, s(K)^2 = s(C)^2.
 */
CertificateReport verify_reduced_case(std::size_t n, std::size_t max_order = kDefaultSymbolicMaxOrder);

/**
 * Walks the reduction chain at `points` random rational specializations of b:
 * Johnson's residual, det(J+C) + det(J-C) - 2 det(J+K), and the parity
 * formulas for det(J+C) + det(J-C) and det(J+K) must all vanish exactly.
 */
CertificateReport verify_reduction_chain(std::size_t n, std::size_t points, std::uint64_t seed);

/**
 * Values at b1 = 1, b_k = 0 (k >= 2), where C = I - L^2 and K is tridiagonal:
 *   even m:          det K = det C = 1
 *   odd m = 2l + 1:  det C = 1, C^{-1} 1 = (1,1,2,2,...,l,l,l+1), s(C) = (l+1)^2,
 *                    adj K = u u^T with u = (1,0,1,...,0,1), s(K) = (l+1)^2,
 *                    det K_{m-1}(2,2) = 1.
 */
CertificateReport specialization_certificate(std::size_t m);

/// Skew facts on generic_skew_toeplitz(order), symbolically.
CertificateReport verify_skew_facts_symbolic(std::size_t order);

// ---------------------------------------------------------------------------
// Generic lemma checks

namespace detail {

template <RingScalar R>
CertificateReport exact_report(std::string claim, const R& residual, nlohmann::json instance) {
    CertificateReport rep;
    rep.claim = std::move(claim);
    rep.status = ScalarTraits<R>::is_zero(residual) ? Status::verified : Status::refuted;
    rep.residual = ScalarTraits<R>::to_text(residual);
    rep.instance = std::move(instance);
    return rep;
}

template <RingScalar R>
nlohmann::json matrix_text(const Matrix<R>& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(ScalarTraits<R>::to_text(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

/// det(X + tJ) - det(X) - t s(X); exact scalars only.
template <RingScalar R>
    requires(is_exact_v<R>)
CertificateReport verify_rank_one_expansion(const Matrix<R>& x, const R& t) {
    detail::require_square(x, "verify_rank_one_expansion");
    const std::size_t m = x.rows();
    Matrix<R> shifted = x + t * ones(m, x.zero());
    R s = m == 0 ? x.zero() : s_functional(x);
    R residual = R(det_bareiss(shifted) - det_bareiss(x) - t * s);
    return detail::exact_report("rank_one_expansion_m" + std::to_string(m), residual,
                                {{"order", m}, {"t", ScalarTraits<R>::to_text(t)}, {"X", detail::matrix_text(x)}});
}

/**
 * For skew Y of order m: adj(Y)^T = (-1)^{m-1} adj(Y); even m: adj(Y) is skew
 * and s(Y) = 0; odd m: det Y = 0. The residual lists the first failing
 * quantity, or "0" when all hold. Exact scalars only.
 */
template <RingScalar R>
    requires(is_exact_v<R>)
CertificateReport verify_skew_facts(const Matrix<R>& y) {
    if (!is_skew_symmetric(y)) throw UsageError("verify_skew_facts: input is not skew-symmetric");
    const std::size_t m = y.rows();
    if (m == 0) throw UsageError("verify_skew_facts: order must be at least 1");
    const Matrix<R> adj = adjugate(y);
    const Matrix<R> adj_t = adj.transpose();

    CertificateReport rep;
    rep.claim = "skew_facts_m" + std::to_string(m);
    rep.instance = {{"order", m}, {"parity", m % 2 == 0 ? "even" : "odd"}};
    std::string failure;

    const Matrix<R> signed_adj = (m % 2 == 1) ? adj : -adj; // (-1)^{m-1} adj(Y)
    if (!(adj_t == signed_adj)) failure = "adj(Y)^T != (-1)^(m-1) adj(Y)";

    if (m % 2 == 0) {
        R s = entry_sum(adj);
        rep.instance["s"] = ScalarTraits<R>::to_text(s);
        rep.instance["adj_skew"] = is_skew_symmetric(adj);
        if (failure.empty() && !is_skew_symmetric(adj)) failure = "adj(Y) not skew-symmetric";
        if (failure.empty() && !ScalarTraits<R>::is_zero(s)) failure = "s(Y) = " + ScalarTraits<R>::to_text(s);
    } else {
        R d = det_bareiss(y);
        rep.instance["det"] = ScalarTraits<R>::to_text(d);
        if (failure.empty() && !ScalarTraits<R>::is_zero(d)) failure = "det(Y) = " + ScalarTraits<R>::to_text(d);
    }
    rep.status = failure.empty() ? Status::verified : Status::refuted;
    rep.residual = failure.empty() ? "0" : failure;
    return rep;
}

/// det(A) det A_{n-2}(2,2) - (det A_{n-1}(1,1) det A_{n-1}(2,2) - det A_{n-1}(1,2) det A_{n-1}(2,1)).
template <RingScalar R>
R desnanot_jacobi_residual(const Matrix<R>& a) {
    detail::require_square(a, "desnanot_jacobi_residual");
    const std::size_t n = a.rows();
    if (n < 2) throw UsageError("desnanot_jacobi_residual: order must be at least 2");
    auto c = corner_minors(a);
    R center = n == 2 ? a.one() : minor_det(a, n - 2, 2, 2);
    return R(det_bareiss(a) * center - (c.m11 * c.m22 - c.m12 * c.m21));
}

namespace detail {

template <RingScalar R>
double to_double(const R& v) {
    if constexpr (std::is_same_v<R, Rational>) return v.get_d();
    else if constexpr (std::is_same_v<R, Integer>) return v.get_d();
    else if constexpr (std::is_same_v<R, Real>) return v;
    else return std::abs(v);
}

} // namespace detail

/**
 * With D = diag(w), checks det((D^{-1} A D^{-1}) block) * prod_{i in rows} w_i *
 * prod_{j in cols} w_j = det(A block) for every requested contiguous block.
 * Scalars must support division (Rational or Real).
 */
template <RingScalar R>
CertificateReport minor_scaling_check(const Matrix<R>& a, const std::vector<R>& w, const std::vector<MinorIndex>& blocks,
                                      double float_tol = kScalingFloatTol) {
    detail::require_square(a, "minor_scaling_check");
    const std::size_t n = a.rows();
    if (w.size() != n) throw UsageError("minor_scaling_check: weight vector length must equal the order");
    for (const auto& wi : w)
        if (ScalarTraits<R>::is_zero(wi)) throw UsageError("minor_scaling_check: weights must be nonzero");

    Matrix<R> scaled(n, n, a.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            scaled(i, j) = ScalarTraits<R>::exact_div(a(i, j), R(w[i] * w[j]));

    CertificateReport rep;
    rep.claim = "minor_scaling_n" + std::to_string(n);
    rep.instance = {{"order", n}, {"blocks", nlohmann::json::array()}};
    bool ok = true;
    double worst = 0.0;
    std::string exact_residual = "0";
    for (const auto& idx : blocks) {
        R row_prod = a.one(), col_prod = a.one();
        for (std::size_t p = 0; p < idx.r; ++p) {
            row_prod = R(row_prod * w[idx.i - 1 + p]);
            col_prod = R(col_prod * w[idx.j - 1 + p]);
        }
        const R det_a = minor_det(a, idx.r, idx.i, idx.j);
        const R det_b = minor_det(scaled, idx.r, idx.i, idx.j);
        const R residual = R(det_b * row_prod * col_prod - det_a);
        rep.instance["blocks"].push_back({{"r", idx.r}, {"i", idx.i}, {"j", idx.j},
                                          {"det_scaled", ScalarTraits<R>::to_text(det_b)},
                                          {"det", ScalarTraits<R>::to_text(det_a)}});
        if constexpr (is_exact_v<R>) {
            if (!ScalarTraits<R>::is_zero(residual)) {
                ok = false;
                exact_residual = ScalarTraits<R>::to_text(residual);
            }
        } else {
            double rel = ScalarTraits<R>::magnitude(residual) / std::max(1.0, ScalarTraits<R>::magnitude(det_a));
            worst = std::max(worst, rel);
            if (!(rel <= float_tol)) ok = false;
        }
    }
    rep.status = ok ? Status::verified : Status::refuted;
    if constexpr (is_exact_v<R>) {
        rep.residual = exact_residual;
    } else {
        rep.residual = format_double(worst);
        rep.tolerance = float_tol;
    }
    return rep;
}

/// The four corner blocks of size n-1.
inline std::vector<MinorIndex> corner_blocks(std::size_t n) {
    return {{n - 1, 1, 1}, {n - 1, 2, 2}, {n - 1, 1, 2}, {n - 1, 2, 1}};
}

/**
 * A = skew + (alpha/2) w w^T; checks det A_{n-1}(1,1) det A_{n-1}(2,2) =
 * ((det A_{n-1}(1,2) + det A_{n-1}(2,1)) / 2)^2.
 * Exact scalars: the difference must vanish. Real: the square-root margin
 * |sqrt(max(0, m11 m22)) - |(m12 + m21)/2|| must be <= tol * max(1, lhs + rhs).
 */
template <RingScalar R>
CertificateReport verify_bt(const Matrix<R>& skew, const R& alpha, const std::vector<R>& w,
                            double float_tol = kRankOneMarginTol) {
    if (!is_skew_symmetric(skew)) throw UsageError("verify_bt: first argument is not skew-symmetric");
    const std::size_t n = skew.rows();
    if (n < 2) throw UsageError("verify_bt: order must be at least 2");
    if (w.size() != n) throw UsageError("verify_bt: weight vector length must equal the order");
    bool all_zero = true;
    for (const auto& wi : w) all_zero = all_zero && ScalarTraits<R>::is_zero(wi);
    if (all_zero) throw UsageError("verify_bt: w must be nonzero");

    const R two = ScalarTraits<R>::from_int(skew.zero(), 2);
    const R half_alpha = ScalarTraits<R>::exact_div(alpha, two);
    Matrix<R> a = skew;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = R(a(i, j) + half_alpha * w[i] * w[j]);

    const auto c = corner_minors(a);
    const R product = R(c.m11 * c.m22);
    const R mean = ScalarTraits<R>::exact_div(R(c.m12 + c.m21), two);
    const R square = R(mean * mean);

    CertificateReport rep;
    rep.claim = "bt_rank_one_n" + std::to_string(n);
    rep.instance = {{"order", n},
                    {"alpha", ScalarTraits<R>::to_text(alpha)},
                    {"m11", ScalarTraits<R>::to_text(c.m11)},
                    {"m22", ScalarTraits<R>::to_text(c.m22)},
                    {"m12", ScalarTraits<R>::to_text(c.m12)},
                    {"m21", ScalarTraits<R>::to_text(c.m21)}};
    if constexpr (is_exact_v<R>) {
        const R residual = R(product - square);
        rep.status = ScalarTraits<R>::is_zero(residual) ? Status::verified : Status::refuted;
        rep.residual = ScalarTraits<R>::to_text(residual);
    } else {
        const double lhs = std::sqrt(std::max(0.0, detail::to_double(product)));
        const double rhs = std::abs(detail::to_double(mean));
        const double margin = lhs - rhs;
        const double scale = std::max(1.0, lhs + rhs);
        rep.status = std::abs(margin) <= float_tol * scale ? Status::verified : Status::refuted;
        rep.residual = format_double(std::abs(margin));
        rep.tolerance = float_tol;
        rep.instance["lhs"] = format_double(lhs);
        rep.instance["rhs"] = format_double(rhs);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Batches used by the CLI and the acceptance suite

/// Random integer matrix with entries uniform in [lo, hi].
Matrix<Integer> random_integer_matrix(std::size_t rows, std::size_t cols, long lo, long hi, Rng& rng);

/// Random rational with numerator in [-range, range] and denominator in [1, den_max].
Rational random_rational(Rng& rng, long range = 9, long den_max = 5);

/// verify_bt over rationals on `trials` seeded instances (order `dim`), every
/// third instance zeroing some components of w.
std::vector<CertificateReport> verify_bt_batch(std::size_t dim, std::size_t trials, std::uint64_t seed);

/// verify_bt over doubles on `trials` instances of orders 2..max_dim; every
/// third instance zeroes some components of w.
std::vector<CertificateReport> verify_bt_float_batch(std::size_t max_dim, std::size_t trials, std::uint64_t seed,
                                                     double tol = kRankOneMarginTol);

/// Identity suite: skew facts for orders 2..n-1, 50 random exact rank-one
/// expansions, reduced cases for 3..n, and the reduction chain for 3..n.
std::vector<CertificateReport> verify_lemmas(std::size_t n, std::uint64_t seed, std::size_t max_order = kDefaultSymbolicMaxOrder);

} // namespace minorkit
