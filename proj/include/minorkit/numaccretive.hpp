#pragma once

/**
 * @file numaccretive.hpp
 * @brief Floating-point layer for accretive matrices.
 *
 * A real matrix A is accretive when H = (A + A^T)/2 is positive semidefinite,
 * strictly accretive when H is positive definite. This module provides a
 * cyclic Jacobi eigensolver, PSD tests and square roots, the factorization
 * A = H^{1/2} (I + S) H^{1/2} with S skew, and numeric checks of
 *   det A >= 0                      (> 0 when strictly accretive)
 *   Re adj(A) >= 0
 *   sqrt(det A_{n-1}(1,1) det A_{n-1}(2,2)) >= |(det A_{n-1}(1,2) + det A_{n-1}(2,1)) / 2|
 * together with a complex diagnostic showing the last inequality fails for
 * complex A with (A + A^*)/2 >= 0 when minors are taken transpose-style.
 *
 * Tolerances are relative. "scale" for a determinant is the Hadamard bound
 * max(1, prod_i ||row_i||_2); for the minor inequality it is max(1, lhs + rhs).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "minorkit/matrix.hpp"
#include "minorkit/report.hpp"
#include "minorkit/rng.hpp"

namespace minorkit {

inline constexpr double kEigenReconstructionTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kSqrtTol = 1e-8;
inline constexpr double kFactorTol = 1e-8;
inline constexpr double kSkewTol = 1e-9;
inline constexpr double kDetTol = 1e-9;
inline constexpr double kDetProductRelTol = 1e-6;
inline constexpr double kAdjPsdTol = 1e-8;
inline constexpr double kInequalityTol = 1e-8;
inline constexpr double kCofactorRelTol = 1e-9;
inline constexpr double kCounterexamplePsdTol = 1e-6;
inline constexpr double kViolationTol = 1e-6;
inline constexpr std::size_t kMaxJacobiSweeps = 100;

double max_abs(const Matrix<Real>& a);
double max_abs(const Matrix<Complex>& a);
double frobenius(const Matrix<Real>& a);
Matrix<Real> symmetric_part(const Matrix<Real>& a);
Matrix<Real> skew_part(const Matrix<Real>& a);
Matrix<Complex> conjugate_transpose(const Matrix<Complex>& a);
/// max(1, prod_i ||row_i||_2), the natural magnitude of det(a).
double hadamard_scale(const Matrix<Real>& a);
/// Gauss-Jordan inverse with partial pivoting; throws NumericError when singular.
Matrix<Real> invert(const Matrix<Real>& a);

struct EigenResult {
    std::vector<double> values; // ascending
    Matrix<Real> vectors;       // column k pairs with values[k]
    std::size_t sweeps = 0;
};

/// Cyclic Jacobi on the symmetrized input until off-diagonal mass <= 1e-14 ||H||_F.
EigenResult sym_eig(const Matrix<Real>& h);

/// Eigenvalues (ascending) of a Hermitian matrix via its 2n x 2n real embedding [[X, -Y], [Y, X]].
std::vector<double> hermitian_eigenvalues(const Matrix<Complex>& h);

/// lambda_min >= -tol * max(1, lambda_max).
bool psd_check(const Matrix<Real>& h, double tol = kPsdTol);

/// Q diag(sqrt(max(lambda, 0))) Q^T; throws UsageError if psd_check fails.
Matrix<Real> sqrt_psd(const Matrix<Real>& h, double tol = kPsdTol);

struct AccretiveFactorization {
    Matrix<Real> h_sqrt;             // H^{1/2}
    Matrix<Real> s;                  // H^{-1/2} N H^{-1/2}
    double skew_residual = 0;        // ||S^T + S||_max
    double reconstruction_residual;  // ||H^{1/2}(I+S)H^{1/2} - A||_max / max(1, ||A||_max)
    double inverse_residual = 0;     // ||Re((I+S)^{-1}) - (I-S^2)^{-1}||_max
    CertificateReport report;
};

/// Requires H strictly positive definite (lambda_min > 1e-10 lambda_max); otherwise UsageError.
AccretiveFactorization accretive_factorize(const Matrix<Real>& a);

CertificateReport verify_det_positive(const Matrix<Real>& a);
CertificateReport verify_adjugate_accretive(const Matrix<Real>& a);

struct AccretiveWitness {
    Matrix<Complex> matrix;
    bool is_complex = false;
    Complex m11, m22, m12, m21; // det A_{n-1}(1,1), (2,2), (1,2), (2,1)
    double lhs = 0;
    double rhs = 0;
    double margin = 0;
    double scale = 1;
    double clamped = 0;  // magnitude of a negative product clamped to 0 before the root
    bool inequality_holds = false; // margin >= -tol * scale
    bool checks_passed = false;    // every check attached to this witness succeeded
    nlohmann::json notes = nlohmann::json::object();
    std::size_t restart = 0; // search provenance
    std::size_t iter = 0;
};

/// Real inequality with cofactor identifications; throws UsageError when A is not accretive.
AccretiveWitness verify_accretive_inequality(const Matrix<Real>& a, double tol = kInequalityTol);

/// Evaluates the transpose-minor inequality for a complex matrix (lhs uses |m11 m22|).
AccretiveWitness complex_witness(const Matrix<Complex>& a);

/// The published 4x4 complex counterexample.
Matrix<Complex> published_counterexample();
AccretiveWitness reproduce_counterexample();

/**
 * Random restarts plus hill climbing on the normalized margin over complex A =
 * G^* G + K (K skew-Hermitian), so (A + A^*)/2 = G^* G is PSD by construction.
 * Returns every instance with margin < -1e-6 * scale, sorted by
 * (margin / scale, restart, iter). Deterministic for fixed arguments.
 * When `init` is given, restart 0 starts from it and the initial point itself
 * is recorded if it violates.
 */
std::vector<AccretiveWitness> search_complex_violation(std::size_t dim, std::size_t iters, std::uint64_t seed,
                                                       const std::optional<Matrix<Complex>>& init = std::nullopt);

enum class AccretiveKind { strict, boundary, rank_one };

/**
 * H = G^T G (+ I when strict), G standard normal (r x n with r < n for
 * boundary), N skew with entries uniform [-1, 1], A = (H + N) / ||H + N||_max.
 * rank_one uses H = (alpha/2) w w^T with alpha >= 0.
 */
Matrix<Real> random_accretive(std::size_t n, AccretiveKind kind, Rng& rng);

CertificateReport witness_report(const AccretiveWitness& w, const std::string& claim);
nlohmann::json to_json(const AccretiveWitness& w);

/// Reports for `trials` accretive instances of orders 2..max_dim (strict and boundary).
std::vector<CertificateReport> accretive_suite(std::size_t max_dim, std::size_t trials, std::uint64_t seed,
                                               double tol = kInequalityTol);

} // namespace minorkit
