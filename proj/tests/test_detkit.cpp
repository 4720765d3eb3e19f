/**
 * @file test_detkit.cpp
 * @brief Determinant engines, adjugate and s-functional against the oracles.
 */

#include "doctest.h"
#include "minorkit/detkit.hpp"
#include "minorkit/identity.hpp"
#include "oracle.hpp"

using namespace minorkit;

namespace {

const Matrix<Integer> kFrozen = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};

} // namespace

TEST_CASE("det_cofactor") {
    CHECK(det_cofactor(identity<Integer>(3)) == 1);
    CHECK(det_cofactor(Matrix<Integer>{{0, 1}, {-1, 0}}) == 1);
    CHECK(det_cofactor(kFrozen) == -3);
    CHECK(oracle::leibniz(kFrozen) == -3);
    CHECK_THROWS_AS(det_cofactor(identity<Integer>(8)), UsageError);
    CHECK_THROWS_AS(det_cofactor(Matrix<Integer>(2, 3)), UsageError);
}

TEST_CASE("det_bareiss") {
    CHECK(det_bareiss(Matrix<Integer>{{2, 0}, {0, 3}}) == 6);
    CHECK(det_bareiss(kFrozen) == -3);
    CHECK(det_bareiss(generic_skew_toeplitz(3)).is_zero());
    CHECK(det_bareiss(Matrix<Integer>(0, 0)) == 1);
    Rng rng = Rng::stream(31, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix<Integer> a = random_integer_matrix(5, 5, -9, 9, rng);
        CHECK(det_bareiss(a) == oracle::leibniz(a));
        CHECK(det_bareiss(a) == det_cofactor(a));
    }
    // leading zero forces a row swap
    CHECK(det_bareiss(Matrix<Integer>{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}) ==
          oracle::leibniz(Matrix<Integer>{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}));
}

TEST_CASE("det_condensation") {
    CHECK(det_condensation(kFrozen) == -3);
    CHECK(det_condensation(ones<Integer>(3)) == 0);
    Rng rng = Rng::stream(32, 0);
    std::size_t rescued = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Matrix<Integer> a = random_integer_matrix(6, 6, -9, 9, rng);
        if (trial % 3 == 0) {
            // zero central entries, so interior divisors vanish
            a(2, 2) = 0;
            a(3, 3) = 0;
            a(2, 3) = 0;
        }
        CondensationStats stats;
        const Integer d = det_condensation(a, &stats);
        rescued += stats.rescues;
        CHECK(d == det_bareiss(a));
        CHECK(d == oracle::gauss_det(to_rational(a)));
    }
    CHECK(rescued > 0);

    // every interior divisor zero
    Matrix<Integer> z = {{1, 2, 3, 4}, {5, 0, 0, 6}, {7, 0, 0, 8}, {9, 1, 2, 3}};
    CondensationStats stats;
    CHECK(det_condensation(z, &stats) == oracle::leibniz(z));
    CHECK(stats.rescues > 0);
}

TEST_CASE("engines agree on polynomial matrices") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto a = johnson_family(n);
        const MultiPoly ref = oracle::leibniz(a);
        CHECK(det_cofactor(a) == ref);
        CHECK(det_bareiss(a) == ref);
        CHECK(det_condensation(a) == ref);
    }
}

TEST_CASE("floating engines") {
    const Matrix<Real> a = {{4.0, 1.0, 2.0}, {1.0, 3.0, 0.5}, {2.0, 0.5, 5.0}};
    const double ref = oracle::lu_det(a);
    CHECK(det_bareiss(a) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(det_condensation(a) == doctest::Approx(ref).epsilon(1e-12));
    const Matrix<Real> z = {{1.0, 2.0, 3.0}, {4.0, 0.0, 6.0}, {7.0, 8.0, 10.0}};
    CondensationStats stats;
    CHECK(det_condensation(z, &stats) == doctest::Approx(det_bareiss(z)));
    CHECK(stats.rescues > 0);
}

TEST_CASE("adjugate") {
    CHECK(adjugate(identity<Integer>(3)) == identity<Integer>(3));
    const Matrix<Integer> y = {{0, 1}, {-1, 0}};
    CHECK(adjugate(y) == Matrix<Integer>{{0, -1}, {1, 0}});
    CHECK(is_skew_symmetric(adjugate(y)));
    CHECK(adjugate(Matrix<Integer>{{7}}) == Matrix<Integer>{{1}});
    CHECK_THROWS_AS(adjugate(Matrix<Integer>(0, 0)), UsageError);

    Rng rng = Rng::stream(33, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix<Integer> a = random_integer_matrix(4, 4, -9, 9, rng);
        const Matrix<Integer> adj = adjugate(a);
        CHECK(adj == oracle::adjugate(a));
        CHECK(a * adj == det_bareiss(a) * identity<Integer>(4));
    }
}

TEST_CASE("s_functional") {
    CHECK(s_functional(identity<Integer>(2)) == 2);
    CHECK(s_functional(Matrix<Integer>{{0, 1}, {-1, 0}}) == 0);
    // m = 3 specialization block C = I - L^2
    const Matrix<Integer> c = identity<Integer>(3) - lower_shift<Integer>(3) * lower_shift<Integer>(3);
    CHECK(s_functional(c) == 4);
    CHECK(oracle::sum_all(oracle::adjugate(c)) == 4);
}

TEST_CASE("minor_det and algorithm names") {
    CHECK(minor_det(kFrozen, 2, 2, 2) == 5 * 10 - 6 * 8);
    CHECK(minor_det(kFrozen, 2, 1, 2) == oracle::leibniz(oracle::cut(kFrozen, 2, 1, 2)));
    CHECK(parse_det_algo("condensation") == DetAlgo::condensation);
    CHECK(to_string(DetAlgo::bareiss) == "bareiss");
    CHECK_THROWS_AS(parse_det_algo("gauss"), UsageError);
}
