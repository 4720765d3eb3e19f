/**
 * @file test_matrix.cpp
 * @brief Dense matrices and the structured constructors.
 */

#include "doctest.h"
#include "minorkit/identity.hpp"
#include "minorkit/matrix.hpp"
#include "oracle.hpp"

using namespace minorkit;

namespace {

MultiPoly bv(std::size_t nvars, std::size_t i) { return MultiPoly::variable(nvars, i); }
MultiPoly cst(std::size_t nvars, long v) { return MultiPoly(nvars, Integer(v)); }

} // namespace

TEST_CASE("shape invariants") {
    Rng rng = Rng::stream(21, 0);
    const Matrix<Integer> a = random_integer_matrix(3, 5, -9, 9, rng);
    CHECK(a.data().size() == 15);
    CHECK(a.transpose().rows() == 5);
    CHECK(a.transpose().transpose() == a);
    CHECK_THROWS_AS(Matrix<Integer>::from_data(2, 2, {1, 2, 3}, Integer(0)), UsageError);
    CHECK_THROWS_AS((Matrix<Integer>{{1, 2}, {3}}), UsageError);
}

TEST_CASE("toeplitz_build") {
    const Matrix<Integer> a = toeplitz_build(ToeplitzSpec<Integer>{2, {3, 1, 2}});
    CHECK(a == Matrix<Integer>{{1, 2}, {3, 1}});
    CHECK(toeplitz_build(ToeplitzSpec<Integer>{3, {1, 1, 1, 1, 1}}) == ones<Integer>(3));
    CHECK_THROWS_AS(toeplitz_build(ToeplitzSpec<Integer>{3, {1, 1}}), UsageError);

    Rng rng = Rng::stream(22, 0);
    std::vector<Integer> diags(11);
    for (auto& d : diags) d = rng.uniform_int(-50, 50);
    const Matrix<Integer> t = toeplitz_build(ToeplitzSpec<Integer>{6, diags});
    for (std::size_t i = 0; i + 1 < 6; ++i)
        for (std::size_t j = 0; j + 1 < 6; ++j) CHECK(t(i, j) == t(i + 1, j + 1));
    CHECK(is_toeplitz(t));
}

TEST_CASE("generic_skew_toeplitz") {
    CHECK_THROWS_AS(generic_skew_toeplitz(1), UsageError);
    const auto b2 = generic_skew_toeplitz(2);
    CHECK(b2 == Matrix<MultiPoly>{{cst(1, 0), bv(1, 1)}, {-bv(1, 1), cst(1, 0)}});
    const auto b3 = generic_skew_toeplitz(3);
    const std::size_t v = 2;
    CHECK(b3 == Matrix<MultiPoly>{{cst(v, 0), bv(v, 1), bv(v, 2)},
                                  {-bv(v, 1), cst(v, 0), bv(v, 1)},
                                  {-bv(v, 2), -bv(v, 1), cst(v, 0)}});
    const auto b7 = generic_skew_toeplitz(7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            CHECK(b7(i, j) == -b7(j, i));
            if (i + 1 < 7 && j + 1 < 7) CHECK(b7(i, j) == b7(i + 1, j + 1));
        }
}

TEST_CASE("johnson_family") {
    const auto a2 = johnson_family(2);
    CHECK(a2 == Matrix<MultiPoly>{{cst(1, 1), cst(1, 1) + bv(1, 1)}, {cst(1, 1) - bv(1, 1), cst(1, 1)}});
    const auto a5 = johnson_family(5);
    const Matrix<MultiPoly> two_j = MultiPoly(4, 2) * ones<MultiPoly>(5, MultiPoly(4));
    CHECK(is_zero_matrix(a5 + a5.transpose() - two_j));
    CHECK(is_toeplitz(a5));

    // Specialization b = (1, 0, 0, 0): ones plus a single skew superdiagonal.
    const Matrix<Rational> spec = evaluate(a5, {1, 0, 0, 0});
    Matrix<Rational> rebuilt = ones<Rational>(5);
    for (std::size_t i = 0; i + 1 < 5; ++i) {
        rebuilt(i, i + 1) += 1;
        rebuilt(i + 1, i) -= 1;
    }
    CHECK(spec == rebuilt);
}

TEST_CASE("block") {
    const Matrix<Integer> i3 = identity<Integer>(3);
    CHECK(block(i3, {2, 1, 2}) == Matrix<Integer>{{0, 0}, {1, 0}});
    CHECK_THROWS_AS(block(i3, {3, 2, 1}), UsageError);
    CHECK_THROWS_AS(block(i3, {1, 0, 1}), UsageError);

    Rng rng = Rng::stream(23, 0);
    std::vector<Integer> diags(9);
    for (auto& d : diags) d = rng.uniform_int(-9, 9);
    const Matrix<Integer> t = toeplitz_build(ToeplitzSpec<Integer>{5, diags});
    CHECK(block(t, {4, 1, 1}) == block(t, {4, 2, 2}));
    CHECK(block(t, {3, 2, 1}) == oracle::cut(t, 3, 2, 1));

    const auto b4 = generic_skew_toeplitz(4);
    CHECK(block(b4, {3, 2, 1}) == -block(b4, {3, 1, 2}).transpose());
}

TEST_CASE("structured") {
    CHECK(structured<Integer>(StructuredKind::ones, 2) == Matrix<Integer>{{1, 1}, {1, 1}});
    const Matrix<Integer> l = lower_shift<Integer>(3);
    CHECK(is_zero_matrix(l * l * l));
    CHECK_FALSE(is_zero_matrix(l * l));
    CHECK(identity<Integer>(3) - l * l == Matrix<Integer>{{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}});
    const Matrix<Integer> l2 = lower_shift<Integer>(2);
    CHECK(l2 * l2.transpose() == Matrix<Integer>{{0, 0}, {0, 1}});
}

TEST_CASE("matmul") {
    Rng rng = Rng::stream(24, 0);
    const Matrix<Integer> a = random_integer_matrix(4, 4, -9, 9, rng);
    CHECK(identity<Integer>(4) * a == a);
    CHECK(a * identity<Integer>(4) == a);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix<Integer> x = random_integer_matrix(3, 3, -9, 9, rng);
        const Matrix<Integer> y = random_integer_matrix(3, 3, -9, 9, rng);
        // entrywise expansion
        Matrix<Integer> xy(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k) xy(i, j) += x(i, k) * y(k, j);
        CHECK(x * y == xy);
        CHECK((x * y).transpose() == y.transpose() * x.transpose());
    }
    CHECK_THROWS_AS(matmul(random_integer_matrix(2, 3, 0, 1, rng), random_integer_matrix(2, 3, 0, 1, rng)),
                    UsageError);
}

TEST_CASE("skew_toeplitz") {
    const Matrix<Integer> s = skew_toeplitz<Integer>({1, 2});
    CHECK(s == Matrix<Integer>{{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}});
    CHECK(is_skew_symmetric(s));
    CHECK(is_toeplitz(s));
}
