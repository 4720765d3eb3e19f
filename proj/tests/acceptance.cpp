/**
 * @file acceptance.cpp
 * @brief Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
 *
 * Tolerances are the library defaults, restated here so a change to either
 * side shows up as a failure.
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "minorkit/cli.hpp"
#include "minorkit/detkit.hpp"
#include "minorkit/identity.hpp"
#include "minorkit/numaccretive.hpp"
#include "oracle.hpp"

using namespace minorkit;

namespace {

constexpr std::uint64_t kSeed = kDefaultSeed;
constexpr double kSymbolicBudgetSeconds = 60.0;
constexpr double kRankOneTol = 1e-8;
constexpr double kDetTolPinned = 1e-9;
constexpr double kAdjTolPinned = 1e-8;
constexpr double kInequalityTolPinned = 1e-8;
constexpr double kFactorTolPinned = 1e-8;
constexpr double kPublishedDigits = 0.01;
constexpr double kCounterexamplePsd = 1e-6;

static_assert(kRankOneMarginTol == kRankOneTol);
static_assert(kDetTol == kDetTolPinned);
static_assert(kAdjPsdTol == kAdjTolPinned);
static_assert(kInequalityTol == kInequalityTolPinned);
static_assert(kFactorTol == kFactorTolPinned);
static_assert(kCounterexamplePsdTol == kCounterexamplePsd);

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// 1. Symbolic Johnson certificate, n = 2..8, within the time budget.
Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t k = 2; k <= 8; ++k) {
        const CertificateReport r = verify_johnson_symbolic(k);
        if (!r.verified() || r.residual != "0") fail(o, "n=" + std::to_string(k) + " residual " + r.residual);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > kSymbolicBudgetSeconds) fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = "n=2..8 zero residual in " + std::to_string(secs) + " s";
    return o;
}

// 2. Reduced cases for n = 3..8 from the lemma suite, plus an oracle check of
//    det(C)^2 + t^2 (s(K)^2 - s(C)^2) for odd m at rational points.
Outcome criterion2() {
    Outcome o;
    const auto reports = verify_lemmas(8, kSeed);
    std::size_t seen = 0;
    for (const auto& r : reports) {
        if (!starts_with(r.claim, "reduced_case_n")) continue;
        ++seen;
        if (!r.verified()) fail(o, r.claim + " refuted: " + r.residual);
        if (r.instance.value("parity", "") == "odd" && r.instance.value("square_residual", "?") != "0")
            fail(o, r.claim + " square residual nonzero");
    }
    if (seen != 6) fail(o, "expected 6 reduced-case reports, got " + std::to_string(seen));

    Rng rng = Rng::stream(kSeed, 9000);
    for (std::size_t n : {4u, 6u, 8u}) {
        const std::size_t m = n - 1;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> point(n - 1);
            for (auto& v : point) v = random_rational(rng);
            const Rational t = random_rational(rng);
            const Matrix<Rational> b = evaluate(generic_skew_toeplitz(n), point);
            const Matrix<Rational> k = oracle::cut(b, m, 1, 1), c = oracle::cut(b, m, 1, 2);
            Matrix<Rational> bt = b;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) bt(i, j) += t;
            const Rational m11 = oracle::gauss_det(oracle::cut(bt, m, 1, 1));
            const Rational m12 = oracle::gauss_det(oracle::cut(bt, m, 1, 2));
            const Rational m21 = oracle::gauss_det(oracle::cut(bt, m, 2, 1));
            const Rational det_c = oracle::gauss_det(c);
            const Rational s_k = oracle::sum_all(oracle::adjugate(k)), s_c = oracle::sum_all(oracle::adjugate(c));
            if (m11 * m11 - m12 * m21 != det_c * det_c + t * t * (s_k * s_k - s_c * s_c))
                fail(o, "t-expansion mismatch at n=" + std::to_string(n));
            if (s_k * s_k != s_c * s_c) fail(o, "oracle square identity fails at n=" + std::to_string(n));
        }
    }
    if (o.pass) o.detail = "n=3..8 exact, odd-m t-expansion matches oracle";
    return o;
}

// 3. Specialization values, checked in the report and by the oracle.
Outcome criterion3() {
    Outcome o;
    for (std::size_t m = 2; m <= 7; ++m) {
        const CertificateReport r = specialization_certificate(m);
        if (!r.verified()) fail(o, r.claim + " refuted: " + r.residual);
        std::vector<Rational> point(m, Rational(0));
        point[0] = 1;
        const Matrix<Rational> b = evaluate(generic_skew_toeplitz(m + 1), point);
        const Matrix<Rational> k = oracle::cut(b, m, 1, 1), c = oracle::cut(b, m, 1, 2);
        if (m % 2 == 0) {
            if (oracle::gauss_det(k) != 1 || oracle::gauss_det(c) != 1) fail(o, "m=" + std::to_string(m) + " det != 1");
            if (r.instance.value("det_K", "") != "1" || r.instance.value("det_C", "") != "1")
                fail(o, "m=" + std::to_string(m) + " report det != 1");
        } else {
            const long l = static_cast<long>(m - 1) / 2;
            const Rational want = (l + 1) * (l + 1);
            const Matrix<Rational> adj_k = oracle::adjugate(k);
            if (oracle::sum_all(oracle::adjugate(c)) != want || oracle::sum_all(adj_k) != want)
                fail(o, "m=" + std::to_string(m) + " s values");
            if (r.instance.value("s_C", "") != want.get_str() || r.instance.value("s_K", "") != want.get_str())
                fail(o, "m=" + std::to_string(m) + " report s values");
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    const int u = (i % 2 == 0 && j % 2 == 0) ? 1 : 0;
                    if (adj_k(i, j) != u) fail(o, "m=" + std::to_string(m) + " adj K != u u^T");
                }
        }
    }
    if (o.pass) o.detail = "odd m: s = ((m+1)/2)^2, adj K = u u^T; even m: det = 1";
    return o;
}

// 4. Three engines agree on 200 random integer matrices; Desnanot-Jacobi residual zero.
Outcome criterion4() {
    Outcome o;
    std::size_t dj_checked = 0;
    for (std::size_t t = 0; t < 200; ++t) {
        Rng rng = Rng::stream(kSeed, 4000 + t);
        const std::size_t n = 1 + t % 6;
        Matrix<Integer> a = random_integer_matrix(n, n, -9, 9, rng);
        if (t % 10 == 9 && n >= 3) a(n / 2, n / 2) = 0; // vanishing interior divisor
        const Integer c = det_cofactor(a), b = det_bareiss(a), d = det_condensation(a);
        if (c != b || b != d || d != oracle::leibniz(a)) fail(o, "engines disagree at trial " + std::to_string(t));
        if (n >= 2) {
            ++dj_checked;
            if (desnanot_jacobi_residual(a) != 0) fail(o, "Desnanot-Jacobi residual at trial " + std::to_string(t));
        }
    }
    if (o.pass) o.detail = "200 instances, orders 1-6; DJ zero on " + std::to_string(dj_checked) + " of order >= 2";
    return o;
}

// 5. Rank-one expansion on 50 exact instances; skew facts symbolically for orders 2..7.
Outcome criterion5() {
    Outcome o;
    const auto reports = verify_lemmas(8, kSeed);
    std::size_t expansions = 0;
    for (const auto& r : reports) {
        if (!starts_with(r.claim, "rank_one_expansion_k")) continue;
        ++expansions;
        if (!r.verified() || r.residual != "0") fail(o, r.claim + " residual " + r.residual);
    }
    if (expansions != 50) fail(o, "expected 50 expansions, got " + std::to_string(expansions));
    for (std::size_t order = 2; order <= 7; ++order) {
        const CertificateReport r = verify_skew_facts_symbolic(order);
        if (!r.verified()) fail(o, r.claim + " refuted: " + r.residual);
    }
    if (o.pass) o.detail = "50 expansions zero residual; skew facts hold for orders 2-7";
    return o;
}

// 6. Rank-one symmetric part: exact over Q, numeric margin in double.
Outcome criterion6() {
    Outcome o;
    std::size_t zero_component = 0;
    for (const auto& r : verify_bt_batch(5, 50, kSeed)) {
        if (!r.verified()) fail(o, r.claim + " residual " + r.residual);
        if (r.instance.value("kind", "") == "zero_components") ++zero_component;
    }
    if (zero_component == 0) fail(o, "no instance with zero components in w");
    double worst = 0.0;
    for (const auto& r : verify_bt_float_batch(10, 100, kSeed, kRankOneTol)) {
        if (!r.verified()) fail(o, r.claim + " margin " + r.residual);
        worst = std::max(worst, std::stod(r.residual));
    }
    if (o.pass)
        o.detail = "50 exact (" + std::to_string(zero_component) + " with zero w entries), 100 float, worst margin " +
                   format_double(worst);
    return o;
}

// 7. Accretive suite: 200 seeded instances, strict and boundary, n <= 8.
Outcome criterion7() {
    Outcome o;
    const auto reports = accretive_suite(8, 200, kSeed, kInequalityTolPinned);
    std::size_t det = 0, adj = 0, ineq = 0, fac = 0;
    for (const auto& r : reports) {
        if (!r.verified()) fail(o, r.claim + " refuted: " + r.residual);
        if (starts_with(r.claim, "det_positive")) ++det;
        if (starts_with(r.claim, "adjugate_accretive")) ++adj;
        if (starts_with(r.claim, "accretive_inequality")) ++ineq;
        if (starts_with(r.claim, "accretive_factorization")) ++fac;
    }
    if (det != 200 || adj != 200 || ineq != 200 || fac != 100) fail(o, "unexpected report counts");
    if (o.pass) o.detail = "200 instances: det, Re adj, inequality, 100 factorizations";
    return o;
}

// 8. The complex counterexample.
Outcome criterion8() {
    Outcome o;
    const AccretiveWitness w = reproduce_counterexample();
    if (std::abs(w.lhs - 168.78) > kPublishedDigits) fail(o, "lhs " + format_double(w.lhs));
    if (std::abs(w.rhs - 171.91) > kPublishedDigits) fail(o, "rhs " + format_double(w.rhs));
    if (!(w.lhs < w.rhs)) fail(o, "lhs >= rhs");
    const Matrix<Complex> a = published_counterexample();
    const std::vector<double> spec = hermitian_eigenvalues(Complex(0.5, 0.0) * (a + conjugate_transpose(a)));
    if (spec.front() < -kCounterexamplePsd * spec.back()) fail(o, "Hermitian part not PSD");
    if (!w.checks_passed) fail(o, "witness checks failed");
    if (o.pass) {
        std::ostringstream os;
        os.precision(6);
        os << std::fixed << "lhs " << w.lhs << " rhs " << w.rhs << " lambda_min " << std::scientific << spec.front();
        o.detail = os.str();
    }
    return o;
}

// 9. Byte-identical output for identical invocations.
Outcome criterion9() {
    Outcome o;
    const std::vector<std::vector<std::string>> invocations = {
        {"verify", "johnson", "--n", "6"},
        {"verify", "johnson", "--n", "8", "--mode", "numeric", "--trials", "50"},
        {"verify", "lemmas", "--n", "6"},
        {"verify", "bt", "--dim", "5", "--trials", "50"},
        {"verify", "bt", "--scalar", "real", "--dim", "10", "--trials", "50"},
        {"verify", "specialization", "--m", "7"},
        {"verify", "accretive", "--dim", "6", "--trials", "50"},
        {"repro", "remark45"},
        {"search", "complex", "--dim", "4", "--iters", "2000"},
        {"verify", "accretive", "--trials", "20", "--format", "text"},
    };
    for (const auto& args : invocations) {
        std::ostringstream a, b, err;
        const int ca = run_cli(args, a, err), cb = run_cli(args, b, err);
        if (ca != cb || a.str() != b.str() || a.str().empty()) fail(o, "differs: " + args[0] + " " + args[1]);
    }
    if (o.pass) o.detail = std::to_string(invocations.size()) + " invocations byte-identical";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"symbolic Johnson certificate", criterion1}, {"reduced-case certificates", criterion2},
        {"specialization values", criterion3},        {"oracle equivalence", criterion4},
        {"lemma suite", criterion5},                  {"rank-one equality", criterion6},
        {"accretive suite", criterion7},              {"complex counterexample", criterion8},
        {"determinism", criterion9},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failures;
        std::printf("[%s] criterion %d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
