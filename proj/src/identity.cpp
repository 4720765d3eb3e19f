#include "minorkit/identity.hpp"

#include <algorithm>
#include <cmath>

namespace minorkit {

namespace {

void require_order(std::size_t n, std::size_t lo, std::size_t hi, const char* who) {
    if (n < lo || n > hi)
        throw UsageError(std::string(who) + ": order " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
}

nlohmann::json poly_summary(const MultiPoly& p) {
    return {{"terms", p.size()}, {"degree", p.degree()}};
}

// Collects named checks; the residual is the first failure, or "0".
class CheckList {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && first_failure_.empty()) first_failure_ = what;
        all_ok_ = all_ok_ && ok;
    }
    void fill(CertificateReport& rep) const {
        rep.status = all_ok_ ? Status::verified : Status::refuted;
        rep.residual = all_ok_ ? "0" : first_failure_;
    }

private:
    bool all_ok_ = true;
    std::string first_failure_;
};

std::string text(const Rational& q) { return ScalarTraits<Rational>::to_text(q); }

} // namespace

CertificateReport verify_johnson_symbolic(std::size_t n, std::size_t max_order) {
    require_order(n, 2, max_order, "verify_johnson_symbolic");
    const Matrix<MultiPoly> a = johnson_family(n);
    const std::size_t r = n - 1;
    const MultiPoly m11 = minor_det(a, r, 1, 1);
    const MultiPoly m12 = minor_det(a, r, 1, 2);
    const MultiPoly m21 = minor_det(a, r, 2, 1);
    const MultiPoly residual = m12 + m21 - m11 * Integer(2);

    CertificateReport rep = detail::exact_report("johnson_symbolic_n" + std::to_string(n), residual,
                                                 {{"n", n},
                                                  {"nvars", n - 1},
                                                  {"det_A11", poly_summary(m11)},
                                                  {"det_A12", poly_summary(m12)},
                                                  {"det_A21", poly_summary(m21)}});
    if (n <= 3) {
        rep.instance["det_A11_text"] = m11.to_string();
        rep.instance["det_A12_text"] = m12.to_string();
        rep.instance["det_A21_text"] = m21.to_string();
    }
    return rep;
}

CertificateReport verify_johnson_numeric(std::size_t n, std::size_t trials, std::uint64_t seed, double tol) {
    if (n < 2) throw UsageError("verify_johnson_numeric: order must be at least 2");
    double worst = 0.0;
    std::size_t worst_trial = 0;
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        std::vector<Real> b(n - 1);
        for (auto& v : b) v = rng.uniform(-2.0, 2.0);
        const Matrix<Real> a = ones<Real>(n) + skew_toeplitz(b);
        const auto c = corner_minors(a);
        const double residual = std::abs(c.m12 + c.m21 - 2.0 * c.m11);
        const double scale =
            std::max({1.0, std::abs(c.m11), std::abs(c.m22), std::abs(c.m12), std::abs(c.m21)});
        const double rel = residual / scale;
        if (t == 0 || rel > worst) {
            worst = rel;
            worst_trial = t;
        }
        if (!(rel <= tol)) ok = false;
    }
    CertificateReport rep;
    rep.claim = "johnson_numeric_n" + std::to_string(n);
    rep.status = ok ? Status::verified : Status::refuted;
    rep.residual = format_double(worst);
    rep.instance = {{"n", n}, {"trials", trials}, {"worst_trial", worst_trial}, {"b_range", {-2.0, 2.0}}};
    rep.seed = seed;
    rep.tolerance = tol;
    return rep;
}

CertificateReport verify_reduced_case(std::size_t n, std::size_t max_order) {
    require_order(n, 3, max_order, "verify_reduced_case");
    const std::size_t m = n - 1;
    const Matrix<MultiPoly> b = generic_skew_toeplitz(n);
    const Matrix<MultiPoly> k = block(b, {m, 1, 1});
    const Matrix<MultiPoly> c = block(b, {m, 1, 2});

    CertificateReport rep;
    rep.claim = "reduced_case_n" + std::to_string(n);
    rep.instance = {{"n", n}, {"m", m}, {"parity", m % 2 == 0 ? "even" : "odd"}};
    if (m % 2 == 0) {
        const MultiPoly det_k = det_bareiss(k);
        const MultiPoly det_c = det_bareiss(c);
        const MultiPoly residual = det_c - det_k;
        rep.instance["det_K"] = poly_summary(det_k);
        rep.instance["det_C"] = poly_summary(det_c);
        if (n <= 5) rep.instance["det_K_text"] = det_k.to_string();
        rep.status = residual.is_zero() ? Status::verified : Status::refuted;
        rep.residual = residual.to_string();
    } else {
        const MultiPoly s_k = s_functional(k);
        const MultiPoly s_c = s_functional(c);
        const MultiPoly linear = s_c - s_k;
        const MultiPoly square = s_k * s_k - s_c * s_c;
        rep.instance["s_K"] = poly_summary(s_k);
        rep.instance["s_C"] = poly_summary(s_c);
        rep.instance["square_residual"] = square.to_string();
        rep.status = linear.is_zero() && square.is_zero() ? Status::verified : Status::refuted;
        rep.residual = linear.is_zero() ? square.to_string() : linear.to_string();
    }
    return rep;
}

Rational random_rational(Rng& rng, long range, long den_max) {
    Rational q(rng.uniform_int(-range, range), rng.uniform_int(1, den_max));
    q.canonicalize();
    return q;
}

Matrix<Integer> random_integer_matrix(std::size_t rows, std::size_t cols, long lo, long hi, Rng& rng) {
    Matrix<Integer> a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform_int(lo, hi);
    return a;
}

CertificateReport verify_reduction_chain(std::size_t n, std::size_t points, std::uint64_t seed) {
    if (n < 3) throw UsageError("verify_reduction_chain: order must be at least 3");
    const std::size_t m = n - 1;
    const bool even = m % 2 == 0;
    CheckList checks;
    for (std::size_t p = 0; p < points; ++p) {
        Rng rng = Rng::stream(seed, p);
        std::vector<Rational> bvals(n - 1);
        for (auto& v : bvals) v = random_rational(rng);
        const Matrix<Rational> b = skew_toeplitz(bvals);
        const Matrix<Rational> a = ones<Rational>(n) + b;
        const Matrix<Rational> k = block(b, {m, 1, 1});
        const Matrix<Rational> c = block(b, {m, 1, 2});
        const Matrix<Rational> j = ones<Rational>(m);
        const std::string at = " at point " + std::to_string(p);

        checks.expect(block(a, {m, 2, 1}) == j - c.transpose(), "A_m(2,1) != J - C^T" + at);
        const Rational johnson =
            minor_det(a, m, 1, 2) + minor_det(a, m, 2, 1) - Rational(2) * minor_det(a, m, 1, 1);
        const Rational det_jc_plus = det_bareiss(j + c);
        const Rational det_jc_minus = det_bareiss(j - c);
        const Rational det_jk = det_bareiss(j + k);
        const Rational target = det_jc_plus + det_jc_minus - Rational(2) * det_jk;
        checks.expect(johnson == 0, "johnson residual " + text(johnson) + at);
        checks.expect(target == 0, "det(J+C)+det(J-C)-2det(J+K) = " + text(target) + at);
        checks.expect(johnson == target, "johnson and reduced residuals differ" + at);

        const Rational sum_jc = det_jc_plus + det_jc_minus;
        if (even) {
            const Rational det_c = det_bareiss(c), det_k = det_bareiss(k);
            checks.expect(sum_jc == Rational(2) * det_c, "det(J+C)+det(J-C) != 2det(C)" + at);
            checks.expect(det_jk == det_k, "det(J+K) != det(K)" + at);
            checks.expect(det_c == det_k, "det(C) != det(K)" + at);
        } else {
            const Rational s_c = s_functional(c), s_k = s_functional(k);
            checks.expect(sum_jc == Rational(2) * s_c, "det(J+C)+det(J-C) != 2s(C)" + at);
            checks.expect(det_jk == s_k, "det(J+K) != s(K)" + at);
            checks.expect(s_c == s_k, "s(C) != s(K)" + at);
        }
    }
    CertificateReport rep;
    rep.claim = "reduction_chain_n" + std::to_string(n);
    rep.instance = {{"n", n}, {"m", m}, {"points", points}, {"parity", even ? "even" : "odd"}};
    rep.seed = seed;
    checks.fill(rep);
    return rep;
}

CertificateReport specialization_certificate(std::size_t m) {
    if (m < 2) throw UsageError("specialization_certificate: m must be at least 2");
    std::vector<Rational> bvals(m, Rational(0));
    bvals[0] = 1;
    const Matrix<Rational> b = skew_toeplitz(bvals); // order n = m + 1
    const Matrix<Rational> k = block(b, {m, 1, 1});
    const Matrix<Rational> c = block(b, {m, 1, 2});
    const Matrix<Rational> eye = identity<Rational>(m);
    const Matrix<Rational> shift = lower_shift<Rational>(m);

    CertificateReport rep;
    rep.claim = "specialization_m" + std::to_string(m);
    rep.instance = {{"m", m}, {"parity", m % 2 == 0 ? "even" : "odd"}};
    CheckList checks;

    checks.expect(c == eye - shift * shift, "C != I - L^2");
    checks.expect(k == shift.transpose() - shift, "K is not tridiagonal (1 above, -1 below)");

    const Rational det_c = det_bareiss(c);
    const Rational det_k = det_bareiss(k);
    rep.instance["det_C"] = text(det_c);
    rep.instance["det_K"] = text(det_k);
    checks.expect(det_c == 1, "det(C) = " + text(det_c));

    if (m % 2 == 0) {
        checks.expect(det_k == 1, "det(K) = " + text(det_k));
    } else {
        const std::size_t l = (m - 1) / 2;
        const Rational expected_s((l + 1) * (l + 1));
        checks.expect(det_k == 0, "det(K) = " + text(det_k) + " for odd m");

        // C^{-1} = adj(C) / det(C)
        const Matrix<Rational> adj_c = adjugate(c);
        std::vector<Rational> cinv_one(m, Rational(0));
        nlohmann::json cinv_json = nlohmann::json::array();
        for (std::size_t i = 0; i < m; ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < m; ++j) row += adj_c(i, j);
            cinv_one[i] = det_c == 0 ? Rational(0) : Rational(row / det_c);
            cinv_json.push_back(text(cinv_one[i]));
            const Rational expected = i + 1 == m ? Rational(l + 1) : Rational(i / 2 + 1);
            checks.expect(cinv_one[i] == expected, "(C^{-1} 1)_" + std::to_string(i + 1) + " = " + text(cinv_one[i]));
        }
        rep.instance["Cinv_one"] = cinv_json;

        const Rational s_c = entry_sum(adj_c);
        rep.instance["s_C"] = text(s_c);
        checks.expect(s_c == expected_s, "s(C) = " + text(s_c));

        const Matrix<Rational> adj_k = adjugate(k);
        Matrix<Rational> uut(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) uut(i, j) = (i % 2 == 0 && j % 2 == 0) ? 1 : 0;
        checks.expect(adj_k == uut, "adj(K) != u u^T");
        rep.instance["adj_K"] = detail::matrix_text(adj_k);

        const Rational s_k = entry_sum(adj_k);
        rep.instance["s_K"] = text(s_k);
        checks.expect(s_k == expected_s, "s(K) = " + text(s_k));

        const Rational inner = minor_det(k, m - 1, 2, 2);
        rep.instance["det_K_inner"] = text(inner);
        checks.expect(inner == 1, "det K_{m-1}(2,2) = " + text(inner));
        rep.instance["expected_s"] = text(expected_s);
    }
    checks.fill(rep);
    return rep;
}

CertificateReport verify_skew_facts_symbolic(std::size_t order) {
    CertificateReport rep = verify_skew_facts(generic_skew_toeplitz(order));
    rep.claim = "skew_facts_symbolic_m" + std::to_string(order);
    return rep;
}

std::vector<CertificateReport> verify_bt_batch(std::size_t dim, std::size_t trials, std::uint64_t seed) {
    if (dim < 2) throw UsageError("verify_bt_batch: dimension must be at least 2");
    std::vector<CertificateReport> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        Matrix<Rational> skew(dim, dim);
        std::vector<Rational> w(dim);
        const char* kind;
        if (t % 3 == 1) {
            // Toeplitz skew part with w = 1: the A + A^T = alpha J_n setting.
            std::vector<Rational> bvals(dim - 1);
            for (auto& v : bvals) v = random_rational(rng);
            skew = skew_toeplitz(bvals);
            std::fill(w.begin(), w.end(), Rational(1));
            kind = "toeplitz_ones";
        } else {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j) {
                    skew(i, j) = random_rational(rng);
                    skew(j, i) = -skew(i, j);
                }
            for (auto& v : w) v = random_rational(rng);
            kind = "general";
            if (t % 3 == 2) {
                // Zero out roughly half the components, keeping one nonzero.
                for (std::size_t i = 0; i < dim; ++i)
                    if (rng.uniform_int(0, 1) == 0) w[i] = 0;
                w[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(dim) - 1))] = 1;
                kind = "zero_components";
            }
        }
        const Rational alpha = random_rational(rng, 5, 3);
        CertificateReport rep = verify_bt(skew, alpha, w);
        rep.claim = "bt_rank_one_n" + std::to_string(dim) + "_t" + std::to_string(t);
        rep.instance["kind"] = kind;
        nlohmann::json wj = nlohmann::json::array();
        for (const auto& v : w) wj.push_back(text(v));
        rep.instance["w"] = wj;
        rep.instance["skew"] = detail::matrix_text(skew);
        rep.seed = seed;
        rep.tolerance = 0.0;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<CertificateReport> verify_bt_float_batch(std::size_t max_dim, std::size_t trials, std::uint64_t seed,
                                                     double tol) {
    if (max_dim < 2) throw UsageError("verify_bt_float_batch: dimension must be at least 2");
    std::vector<CertificateReport> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        const std::size_t n = 2 + t % (max_dim - 1);
        Matrix<Real> skew(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                skew(i, j) = rng.uniform(-1.0, 1.0);
                skew(j, i) = -skew(i, j);
            }
        std::vector<Real> w(n);
        for (auto& v : w) v = rng.normal();
        if (t % 3 == 2) {
            for (std::size_t i = 0; i < n; ++i)
                if (rng.uniform_int(0, 1) == 0) w[i] = 0.0;
            w[static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1))] = 1.0;
        }
        const Real alpha = rng.uniform(0.1, 2.0);
        CertificateReport rep = verify_bt(skew, alpha, w, tol);
        rep.claim = "bt_rank_one_float_n" + std::to_string(n) + "_t" + std::to_string(t);
        rep.instance["kind"] = t % 3 == 2 ? "zero_components" : "general";
        rep.seed = seed;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<CertificateReport> verify_lemmas(std::size_t n, std::uint64_t seed, std::size_t max_order) {
    require_order(n, 3, max_order, "verify_lemmas");
    std::vector<CertificateReport> out;

    for (std::size_t order = 2; order < n; ++order) out.push_back(verify_skew_facts_symbolic(order));

    constexpr std::size_t kRankOneInstances = 50;
    for (std::size_t k = 0; k < kRankOneInstances; ++k) {
        // Stream indices 0..49 belong to the rank-one instances.
        Rng rng = Rng::stream(seed, k);
        const std::size_t m = k % 6 + 1;
        const Matrix<Integer> x = random_integer_matrix(m, m, -9, 9, rng);
        const Integer t = rng.uniform_int(-5, 5);
        CertificateReport rep = verify_rank_one_expansion(x, t);
        rep.claim = "rank_one_expansion_k" + std::to_string(k);
        rep.seed = seed;
        out.push_back(std::move(rep));
    }

    for (std::size_t order = 3; order <= n; ++order) {
        out.push_back(verify_reduced_case(order, max_order));
        out.push_back(verify_reduction_chain(order, 10, derive_seed(seed, 1000 + order)));
    }
    return out;
}

} // namespace minorkit
