#include "minorkit/numaccretive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "minorkit/detkit.hpp"
#include "minorkit/identity.hpp"
#include "minorkit/matrix_io.hpp"

namespace minorkit {

// ---------------------------------------------------------------------------
// Small dense helpers

double max_abs(const Matrix<Real>& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const Matrix<Complex>& a) {
    double m = 0.0;
    for (const auto& v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

double frobenius(const Matrix<Real>& a) {
    double s = 0.0;
    for (double v : a.data()) s += v * v;
    return std::sqrt(s);
}

Matrix<Real> symmetric_part(const Matrix<Real>& a) { return 0.5 * (a + a.transpose()); }

Matrix<Real> skew_part(const Matrix<Real>& a) { return 0.5 * (a - a.transpose()); }

Matrix<Complex> conjugate_transpose(const Matrix<Complex>& a) {
    Matrix<Complex> t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

double hadamard_scale(const Matrix<Real>& a) {
    double prod = 1.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j) * a(i, j);
        prod *= std::sqrt(row);
    }
    return std::max(1.0, prod);
}

Matrix<Real> invert(const Matrix<Real>& a) {
    detail::require_square(a, "invert");
    const std::size_t n = a.rows();
    Matrix<Real> m = a;
    Matrix<Real> inv = identity<Real>(n);
    const double floor = 1e-300;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
        if (std::abs(m(p, k)) <= floor) throw NumericError("invert: matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(k, j));
                std::swap(inv(p, j), inv(k, j));
            }
        const double d = m(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            m(k, j) /= d;
            inv(k, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0.0) continue;
            const double f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

namespace {

Matrix<Real> diag_conjugate(const EigenResult& e, const std::vector<double>& d) {
    const std::size_t n = e.values.size();
    Matrix<Real> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += e.vectors(i, k) * d[k] * e.vectors(j, k);
            out(i, j) = s;
            out(j, i) = s;
        }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Eigen machinery

EigenResult sym_eig(const Matrix<Real>& h) {
    detail::require_square(h, "sym_eig");
    const std::size_t n = h.rows();
    Matrix<Real> a = symmetric_part(h);
    Matrix<Real> v = identity<Real>(n);
    const double target = 1e-14 * frobenius(a);

    auto off_mass = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    EigenResult res;
    std::size_t sweep = 0;
    while (off_mass() > target) {
        if (sweep == kMaxJacobiSweeps) throw NumericError("sym_eig: no convergence after 100 sweeps");
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }
    res.sweeps = sweep;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
    res.values.resize(n);
    res.vectors = Matrix<Real>(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
    }
    return res;
}

std::vector<double> hermitian_eigenvalues(const Matrix<Complex>& h) {
    detail::require_square(h, "hermitian_eigenvalues");
    const std::size_t n = h.rows();
    Matrix<Real> embed(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double x = h(i, j).real(), y = h(i, j).imag();
            embed(i, j) = x;
            embed(i, j + n) = -y;
            embed(i + n, j) = y;
            embed(i + n, j + n) = x;
        }
    const EigenResult e = sym_eig(embed);
    // every eigenvalue of h appears twice in the embedding
    std::vector<double> vals;
    vals.reserve(n);
    for (std::size_t k = 0; k < 2 * n; k += 2) vals.push_back(0.5 * (e.values[k] + e.values[k + 1]));
    return vals;
}

bool psd_check(const Matrix<Real>& h, double tol) {
    if (h.rows() == 0) return true;
    const EigenResult e = sym_eig(h);
    return e.values.front() >= -tol * std::max(1.0, e.values.back());
}

Matrix<Real> sqrt_psd(const Matrix<Real>& h, double tol) {
    const EigenResult e = sym_eig(h);
    if (h.rows() > 0 && !(e.values.front() >= -tol * std::max(1.0, e.values.back())))
        throw UsageError("sqrt_psd: matrix is not positive semidefinite");
    std::vector<double> roots(e.values.size());
    for (std::size_t k = 0; k < roots.size(); ++k) roots[k] = std::sqrt(std::max(0.0, e.values[k]));
    return diag_conjugate(e, roots);
}

// ---------------------------------------------------------------------------
// Accretive factorization and the determinant / adjugate facts

AccretiveFactorization accretive_factorize(const Matrix<Real>& a) {
    detail::require_square(a, "accretive_factorize");
    const std::size_t n = a.rows();
    const Matrix<Real> h = symmetric_part(a);
    const Matrix<Real> nskew = skew_part(a);
    const EigenResult e = sym_eig(h);
    if (n == 0 || !(e.values.front() > kPsdTol * e.values.back()) || !(e.values.front() > 0.0))
        throw UsageError("accretive_factorize: symmetric part is not strictly positive definite");

    std::vector<double> roots(n), inv_roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        roots[k] = std::sqrt(e.values[k]);
        inv_roots[k] = 1.0 / roots[k];
    }
    AccretiveFactorization f;
    f.h_sqrt = diag_conjugate(e, roots);
    const Matrix<Real> h_inv_sqrt = diag_conjugate(e, inv_roots);
    f.s = h_inv_sqrt * nskew * h_inv_sqrt;
    f.skew_residual = max_abs(f.s + f.s.transpose());

    const Matrix<Real> eye = identity<Real>(n);
    const Matrix<Real> rebuilt = f.h_sqrt * (eye + f.s) * f.h_sqrt;
    f.reconstruction_residual = max_abs(rebuilt - a) / std::max(1.0, max_abs(a));

    const Matrix<Real> inv_plus = invert(eye + f.s);
    const Matrix<Real> inv_diff = invert(eye - f.s * f.s);
    f.inverse_residual = max_abs(symmetric_part(inv_plus) - inv_diff);

    const bool ok = f.skew_residual <= kSkewTol && f.reconstruction_residual <= kFactorTol &&
                    f.inverse_residual <= kFactorTol;
    f.report.claim = "accretive_factorization_n" + std::to_string(n);
    f.report.status = ok ? Status::verified : Status::refuted;
    f.report.residual = format_double(f.reconstruction_residual);
    f.report.tolerance = kFactorTol;
    f.report.instance = {{"order", n},
                         {"skew_residual", format_double(f.skew_residual)},
                         {"inverse_residual", format_double(f.inverse_residual)},
                         {"lambda_min_H", format_double(e.values.front())}};
    return f;
}

CertificateReport verify_det_positive(const Matrix<Real>& a) {
    detail::require_square(a, "verify_det_positive");
    const std::size_t n = a.rows();
    const Matrix<Real> h = symmetric_part(a);
    const EigenResult e = sym_eig(h);
    if (n > 0 && !(e.values.front() >= -kPsdTol * std::max(1.0, e.values.back())))
        throw UsageError("verify_det_positive: symmetric part is not positive semidefinite");

    const double det = det_bareiss(a);
    const double scale = hadamard_scale(a);
    const bool strict = n > 0 && e.values.front() > kPsdTol * e.values.back() && e.values.front() > 0.0;

    CertificateReport rep;
    rep.claim = "det_positive_n" + std::to_string(n);
    rep.tolerance = kDetTol;
    rep.instance = {{"order", n}, {"det", format_double(det)}, {"scale", format_double(scale)}, {"strict", strict}};
    bool ok = det >= -kDetTol * scale;
    if (strict) {
        ok = ok && det > 0.0;
        // det A = det H * prod_k (1 + mu_k^2); -S^2 has each mu_k^2 twice, hence the square roots.
        const AccretiveFactorization f = accretive_factorize(a);
        const EigenResult es = sym_eig(-(f.s * f.s));
        double product = 1.0;
        for (double v : e.values) product *= v;
        for (double nu : es.values) product *= std::sqrt(1.0 + std::max(0.0, nu));
        const double rel = std::abs(product - det) / std::max(std::abs(det), 1e-300);
        rep.instance["product_formula"] = format_double(product);
        rep.instance["product_rel_error"] = format_double(rel);
        ok = ok && rel <= kDetProductRelTol;
    }
    rep.status = ok ? Status::verified : Status::refuted;
    rep.residual = format_double(std::min(0.0, det) / scale);
    return rep;
}

CertificateReport verify_adjugate_accretive(const Matrix<Real>& a) {
    detail::require_square(a, "verify_adjugate_accretive");
    if (!psd_check(symmetric_part(a))) throw UsageError("verify_adjugate_accretive: input is not accretive");
    const Matrix<Real> adj = adjugate(a);
    const Matrix<Real> re_adj = symmetric_part(adj);
    const EigenResult e = sym_eig(re_adj);
    const double floor = -kAdjPsdTol * std::max(1.0, e.values.back());
    CertificateReport rep;
    rep.claim = "adjugate_accretive_n" + std::to_string(a.rows());
    rep.status = e.values.front() >= floor ? Status::verified : Status::refuted;
    rep.residual = format_double(e.values.front());
    rep.tolerance = kAdjPsdTol;
    rep.instance = {{"order", a.rows()},
                    {"lambda_min", format_double(e.values.front())},
                    {"lambda_max", format_double(e.values.back())}};
    return rep;
}

// ---------------------------------------------------------------------------
// The minor inequality

namespace {

Matrix<Complex> complexify(const Matrix<Real>& a) {
    return a.map([](double v) { return Complex(v, 0.0); }, Complex{});
}

bool rel_close(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)}); }

} // namespace

AccretiveWitness verify_accretive_inequality(const Matrix<Real>& a, double tol) {
    detail::require_square(a, "verify_accretive_inequality");
    const std::size_t n = a.rows();
    if (n < 2) throw UsageError("verify_accretive_inequality: order must be at least 2");
    if (!psd_check(symmetric_part(a))) throw UsageError("verify_accretive_inequality: input is not accretive");

    const auto c = corner_minors(a);
    AccretiveWitness w;
    w.matrix = complexify(a);
    w.m11 = c.m11;
    w.m22 = c.m22;
    w.m12 = c.m12;
    w.m21 = c.m21;
    double product = c.m11 * c.m22;
    if (product < 0.0) {
        w.clamped = -product;
        product = 0.0;
    }
    w.lhs = std::sqrt(product);
    w.rhs = std::abs(0.5 * (c.m12 + c.m21));
    w.margin = w.lhs - w.rhs;
    w.scale = std::max(1.0, w.lhs + w.rhs);
    w.inequality_holds = w.margin >= -tol * w.scale;

    const double det_scale = std::max(1.0, hadamard_scale(a));
    const bool minors_nonneg = c.m11 >= -tol * det_scale && c.m22 >= -tol * det_scale;

    // Cofactor identifications of the {1, n} principal block of adj(A).
    const Matrix<Real> adj = adjugate(a);
    const double sign = (n + 1) % 2 == 0 ? 1.0 : -1.0;
    const bool cof11 = rel_close(adj(0, 0), c.m22, kCofactorRelTol);
    const bool cofnn = rel_close(adj(n - 1, n - 1), c.m11, kCofactorRelTol);
    const bool cof1n = rel_close(adj(0, n - 1), sign * c.m12, kCofactorRelTol);
    const bool cofn1 = rel_close(adj(n - 1, 0), sign * c.m21, kCofactorRelTol);

    w.checks_passed = w.inequality_holds && minors_nonneg && cof11 && cofnn && cof1n && cofn1;
    w.notes = {{"minors_nonnegative", minors_nonneg},
               {"cofactor_11", cof11},
               {"cofactor_nn", cofnn},
               {"cofactor_1n", cof1n},
               {"cofactor_n1", cofn1},
               {"tolerance", tol}};
    return w;
}

AccretiveWitness complex_witness(const Matrix<Complex>& a) {
    detail::require_square(a, "complex_witness");
    if (a.rows() < 2) throw UsageError("complex_witness: order must be at least 2");
    const auto c = corner_minors(a);
    AccretiveWitness w;
    w.matrix = a;
    w.is_complex = true;
    w.m11 = c.m11;
    w.m22 = c.m22;
    w.m12 = c.m12;
    w.m21 = c.m21;
    w.lhs = std::sqrt(std::abs(c.m11 * c.m22));
    w.rhs = std::abs(0.5 * (c.m12 + c.m21));
    w.margin = w.lhs - w.rhs;
    w.scale = std::max(1.0, w.lhs + w.rhs);
    w.inequality_holds = w.margin >= -kViolationTol * w.scale;
    return w;
}

Matrix<Complex> published_counterexample() {
    using C = Complex;
    return Matrix<Complex>{
        {C(9.94929343, 1.33276616), C(0.97565055, 0.87236575), C(-2.50825051, 5.42561737), C(1.56748356, -7.27519505)},
        {C(2.97979149, -0.40625902), C(3.79277890, -0.31914688), C(0.54972864, 0.60571431), C(0.32023125, 2.04703155)},
        {C(-1.05662545, -10.34778593), C(1.98753540, -2.33447293), C(9.41578815, -0.76975962),
         C(-7.77317132, -1.83670880)},
        {C(-0.08351591, 4.49741713), C(1.36270989, -0.46531832), C(-8.74961119, 1.90215917),
         C(16.31271805, -0.21461055)},
    };
}

AccretiveWitness reproduce_counterexample() {
    constexpr double kPublishedLhs = 168.78;
    constexpr double kPublishedRhs = 171.91;
    constexpr double kPublishedDigits = 0.01;

    const Matrix<Complex> a = published_counterexample();
    AccretiveWitness w = complex_witness(a);
    const Matrix<Complex> herm = Complex(0.5, 0.0) * (a + conjugate_transpose(a));
    const std::vector<double> spectrum = hermitian_eigenvalues(herm);
    const bool psd = spectrum.front() >= -kCounterexamplePsdTol * spectrum.back();
    const bool violated = w.lhs < w.rhs;
    const bool lhs_ok = std::abs(w.lhs - kPublishedLhs) <= kPublishedDigits;
    const bool rhs_ok = std::abs(w.rhs - kPublishedRhs) <= kPublishedDigits;

    nlohmann::json spec = nlohmann::json::array();
    for (double v : spectrum) spec.push_back(format_double(v));
    w.notes = {{"hermitian_part_spectrum", spec},
               {"hermitian_part_psd", psd},
               {"violates_inequality", violated},
               {"lhs_matches_published", lhs_ok},
               {"rhs_matches_published", rhs_ok}};
    w.checks_passed = psd && violated && lhs_ok && rhs_ok;
    return w;
}

// ---------------------------------------------------------------------------
// Complex search

namespace {

struct SearchState {
    Matrix<Complex> g; // Hermitian part is g^* g
    Matrix<Complex> k; // skew-Hermitian part
};

Matrix<Complex> assemble(const SearchState& s) { return conjugate_transpose(s.g) * s.g + s.k; }

Complex complex_normal(Rng& rng) { return {rng.normal() * M_SQRT1_2, rng.normal() * M_SQRT1_2}; }

// (X - X^*)/2 plus i*Y for real symmetric Y.
Matrix<Complex> random_skew_hermitian(std::size_t n, Rng& rng) {
    Matrix<Complex> x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = complex_normal(rng);
    Matrix<Complex> k = Complex(0.5, 0.0) * (x - conjugate_transpose(x));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double y = rng.normal();
            k(i, j) += Complex(0.0, y);
            if (j != i) k(j, i) += Complex(0.0, y);
        }
    return k;
}

Matrix<Complex> random_complex(std::size_t n, Rng& rng) {
    Matrix<Complex> g(n, n);
    for (auto i = 0u; i < n; ++i)
        for (auto j = 0u; j < n; ++j) g(i, j) = complex_normal(rng);
    return g;
}

// Upper factor R with R^* R = h for Hermitian positive definite h.
std::optional<Matrix<Complex>> cholesky_upper(const Matrix<Complex>& h) {
    const std::size_t n = h.rows();
    Matrix<Complex> l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = h(j, j).real();
        for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l(j, k));
        if (!(diag > 0.0)) return std::nullopt;
        l(j, j) = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = h(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / l(j, j).real();
        }
    }
    return conjugate_transpose(l);
}

SearchState state_from_matrix(const Matrix<Complex>& a) {
    const std::size_t n = a.rows();
    const Matrix<Complex> herm = Complex(0.5, 0.0) * (a + conjugate_transpose(a));
    SearchState s;
    s.k = a - herm;
    // Nudge the diagonal until the Hermitian part factors.
    double jitter = 0.0;
    for (int attempt = 0; attempt < 60; ++attempt) {
        Matrix<Complex> shifted = herm;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += jitter;
        if (auto r = cholesky_upper(shifted)) {
            s.g = *r;
            return s;
        }
        jitter = jitter == 0.0 ? 1e-12 * std::max(1.0, max_abs(herm)) : jitter * 2.0;
    }
    throw UsageError("search_complex_violation: initial matrix has an indefinite Hermitian part");
}

double normalized_margin(const AccretiveWitness& w) { return w.margin / w.scale; }

} // namespace

std::vector<AccretiveWitness> search_complex_violation(std::size_t dim, std::size_t iters, std::uint64_t seed,
                                                       const std::optional<Matrix<Complex>>& init) {
    if (dim < 2) throw UsageError("search_complex_violation: dimension must be at least 2");
    if (init && (init->rows() != dim || init->cols() != dim))
        throw UsageError("search_complex_violation: initial matrix has the wrong order");

    constexpr std::size_t kRestartLength = 250;
    constexpr double kInitialStep = 0.25;
    constexpr double kStepDecay = 0.99;

    std::vector<AccretiveWitness> found;
    std::size_t restart = 0;
    for (std::size_t start = 0; start < iters; start += kRestartLength, ++restart) {
        Rng rng = Rng::stream(seed, restart);
        SearchState state;
        if (restart == 0 && init) {
            state = state_from_matrix(*init);
        } else {
            state.g = random_complex(dim, rng);
            state.k = random_skew_hermitian(dim, rng);
        }
        AccretiveWitness best = complex_witness(assemble(state));
        best.restart = restart;
        best.iter = start;
        if (restart == 0 && init && normalized_margin(best) < -kViolationTol) {
            best.notes["initial_point"] = true;
            found.push_back(best);
        }
        double step = kInitialStep * std::max(1.0, std::sqrt(max_abs(state.g) * max_abs(state.g) + max_abs(state.k)));
        bool improved = false;
        const std::size_t stop = std::min(iters, start + kRestartLength);
        for (std::size_t it = start + 1; it < stop; ++it) {
            SearchState cand = state;
            for (auto i = 0u; i < dim; ++i)
                for (auto j = 0u; j < dim; ++j) cand.g(i, j) += step * 0.1 * complex_normal(rng);
            cand.k = cand.k + Complex(step, 0.0) * random_skew_hermitian(dim, rng);
            AccretiveWitness w = complex_witness(assemble(cand));
            if (normalized_margin(w) < normalized_margin(best)) {
                state = std::move(cand);
                w.restart = restart;
                w.iter = it;
                best = std::move(w);
                improved = true;
            } else {
                step *= kStepDecay;
            }
        }
        if (normalized_margin(best) < -kViolationTol && (improved || !(restart == 0 && init))) found.push_back(best);
    }

    for (auto& w : found) {
        const Matrix<Complex> herm = Complex(0.5, 0.0) * (w.matrix + conjugate_transpose(w.matrix));
        const std::vector<double> spectrum = hermitian_eigenvalues(herm);
        const bool psd = spectrum.front() >= -kCounterexamplePsdTol * std::max(1.0, spectrum.back());
        w.notes["hermitian_part_lambda_min"] = format_double(spectrum.front());
        w.notes["hermitian_part_psd"] = psd;
        w.checks_passed = psd && !w.inequality_holds;
    }
    std::stable_sort(found.begin(), found.end(), [](const AccretiveWitness& x, const AccretiveWitness& y) {
        return std::make_tuple(normalized_margin(x), x.restart, x.iter) <
               std::make_tuple(normalized_margin(y), y.restart, y.iter);
    });
    return found;
}

// ---------------------------------------------------------------------------
// Generators, reports, suites

Matrix<Real> random_accretive(std::size_t n, AccretiveKind kind, Rng& rng) {
    if (n == 0) throw UsageError("random_accretive: order must be positive");
    Matrix<Real> h(n, n);
    if (kind == AccretiveKind::rank_one) {
        const double alpha = rng.uniform(0.0, 4.0);
        std::vector<double> w(n);
        for (auto& v : w) v = rng.normal();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * alpha * w[i] * w[j];
    } else {
        const std::size_t rank =
            kind == AccretiveKind::boundary ? static_cast<std::size_t>(rng.uniform_int(1, static_cast<long>(n) - 1)) : n;
        Matrix<Real> g(std::max<std::size_t>(rank, 1), n);
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.normal();
        if (kind == AccretiveKind::boundary && n == 1) g(0, 0) = 0.0;
        h = g.transpose() * g;
        if (kind == AccretiveKind::strict)
            for (std::size_t i = 0; i < n; ++i) h(i, i) += 1.0;
    }
    Matrix<Real> nskew(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            nskew(i, j) = rng.uniform(-1.0, 1.0);
            nskew(j, i) = -nskew(i, j);
        }
    Matrix<Real> a = h + nskew;
    const double norm = max_abs(a);
    if (norm > 0.0) a = (1.0 / norm) * a;
    return a;
}

nlohmann::json to_json(const AccretiveWitness& w) {
    auto pair = [](const Complex& z) { return nlohmann::json::array({z.real(), z.imag()}); };
    nlohmann::json j;
    if (w.is_complex) {
        j["matrix"] = matrix_to_json(w.matrix);
    } else {
        j["matrix"] = matrix_to_json(w.matrix.map([](const Complex& z) { return z.real(); }, 0.0));
    }
    j["minors"] = {{"m11", pair(w.m11)}, {"m22", pair(w.m22)}, {"m12", pair(w.m12)}, {"m21", pair(w.m21)}};
    j["lhs"] = w.lhs;
    j["rhs"] = w.rhs;
    j["margin"] = w.margin;
    j["scale"] = w.scale;
    j["clamped"] = w.clamped;
    j["inequality_holds"] = w.inequality_holds;
    j["checks_passed"] = w.checks_passed;
    j["restart"] = w.restart;
    j["iter"] = w.iter;
    j["notes"] = w.notes;
    return j;
}

CertificateReport witness_report(const AccretiveWitness& w, const std::string& claim) {
    CertificateReport rep;
    rep.claim = claim;
    rep.status = w.checks_passed ? Status::verified : Status::refuted;
    rep.residual = format_double(w.margin);
    rep.instance = to_json(w);
    if (w.notes.contains("tolerance")) rep.tolerance = w.notes["tolerance"].get<double>();
    return rep;
}

std::vector<CertificateReport> accretive_suite(std::size_t max_dim, std::size_t trials, std::uint64_t seed,
                                               double tol) {
    if (max_dim < 2) throw UsageError("accretive_suite: dimension must be at least 2");
    std::vector<CertificateReport> out;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        const std::size_t n = 2 + t % (max_dim - 1);
        const bool strict = t % 2 == 0;
        const Matrix<Real> a = random_accretive(n, strict ? AccretiveKind::strict : AccretiveKind::boundary, rng);
        const std::string tag = "_t" + std::to_string(t);

        CertificateReport det = verify_det_positive(a);
        det.claim += tag;
        CertificateReport adj = verify_adjugate_accretive(a);
        adj.claim += tag;
        CertificateReport ineq = witness_report(verify_accretive_inequality(a, tol), "accretive_inequality_n" +
                                                                                     std::to_string(n) + tag);
        for (auto* rep : {&det, &adj, &ineq}) {
            rep->seed = seed;
            rep->instance["kind"] = strict ? "strict" : "boundary";
            out.push_back(std::move(*rep));
        }
        if (strict) {
            CertificateReport fac = accretive_factorize(a).report;
            fac.claim += tag;
            fac.seed = seed;
            out.push_back(std::move(fac));
        }
    }
    return out;
}

} // namespace minorkit
