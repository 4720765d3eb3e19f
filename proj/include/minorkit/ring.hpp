#pragma once

/**
 * @file ring.hpp
 * @brief The commutative-ring contract every matrix scalar satisfies.
 *
 * Supported scalars:
 *   Integer   arbitrary precision (GMP mpz)
 *   Rational  reduced p/q with q > 0 (GMP mpq)
 *   MultiPoly sparse polynomial over Z in b1..bk
 *   Real      double
 *   Complex   std::complex<double>
 *
 * Generic code talks to a scalar through ScalarTraits<R>. zero/one are built
 * "like" an existing element because MultiPoly carries its variable count.
 * Exact scalars divide only when the quotient is exact; a remainder is an
 * InternalError. Floating scalars carry no exactness guarantee and are kept
 * out of symbolic code paths (see is_exact).
 */

#include <cmath>
#include <complex>
#include <concepts>
#include <sstream>
#include <string>

#include <gmpxx.h>

#include "minorkit/errors.hpp"
#include "minorkit/multipoly.hpp"

namespace minorkit {

using Real = double;
using Complex = std::complex<double>;

template <typename R>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
    static constexpr bool is_exact = true;
    static constexpr const char* tag = "int";
    static Integer zero_like(const Integer&) { return 0; }
    static Integer one_like(const Integer&) { return 1; }
    static bool is_zero(const Integer& a) { return a == 0; }
    static Integer exact_div(const Integer& a, const Integer& b) {
        if (b == 0) throw InternalError("Integer exact_div: division by zero");
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            throw InternalError("Integer exact_div: nonzero remainder");
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Integer from_int(const Integer&, long v) { return v; }
    static std::string to_text(const Integer& a) { return a.get_str(); }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr const char* tag = "rat";
    static Rational zero_like(const Rational&) { return 0; }
    static Rational one_like(const Rational&) { return 1; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational exact_div(const Rational& a, const Rational& b) {
        if (b == 0) throw InternalError("Rational exact_div: division by zero");
        return Rational(a / b);
    }
    static Rational from_int(const Rational&, long v) { return v; }
    static std::string to_text(const Rational& a) {
        Rational c = a;
        c.canonicalize();
        return c.get_str();
    }
};

template <>
struct ScalarTraits<MultiPoly> {
    static constexpr bool is_exact = true;
    static constexpr const char* tag = "poly";
    static MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.nvars()); }
    static MultiPoly one_like(const MultiPoly& p) { return MultiPoly(p.nvars(), 1); }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return a.divide_exact(b); }
    static MultiPoly from_int(const MultiPoly& p, long v) { return MultiPoly(p.nvars(), v); }
    static std::string to_text(const MultiPoly& a) { return a.to_string(); }
};

template <>
struct ScalarTraits<Real> {
    static constexpr bool is_exact = false;
    static constexpr const char* tag = "real";
    static Real zero_like(const Real&) { return 0.0; }
    static Real one_like(const Real&) { return 1.0; }
    static bool is_zero(const Real& a) { return a == 0.0; }
    static Real exact_div(const Real& a, const Real& b) { return a / b; }
    static Real from_int(const Real&, long v) { return static_cast<Real>(v); }
    static double magnitude(const Real& a) { return std::abs(a); }
    static std::string to_text(const Real& a) {
        std::ostringstream os;
        os.precision(17);
        os << a;
        return os.str();
    }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool is_exact = false;
    static constexpr const char* tag = "complex";
    static Complex zero_like(const Complex&) { return {0.0, 0.0}; }
    static Complex one_like(const Complex&) { return {1.0, 0.0}; }
    static bool is_zero(const Complex& a) { return a == Complex{}; }
    static Complex exact_div(const Complex& a, const Complex& b) { return a / b; }
    static Complex from_int(const Complex&, long v) { return {static_cast<double>(v), 0.0}; }
    static double magnitude(const Complex& a) { return std::abs(a); }
    static std::string to_text(const Complex& a) {
        std::ostringstream os;
        os.precision(17);
        os << '(' << a.real() << ',' << a.imag() << ')';
        return os.str();
    }
};

/// Scalars usable as matrix entries.
template <typename R>
concept RingScalar = requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ScalarTraits<R>::zero_like(a) } -> std::same_as<R>;
    { ScalarTraits<R>::one_like(a) } -> std::same_as<R>;
    { ScalarTraits<R>::is_zero(a) } -> std::same_as<bool>;
    { ScalarTraits<R>::exact_div(a, b) } -> std::same_as<R>;
};

template <typename R>
inline constexpr bool is_exact_v = ScalarTraits<R>::is_exact;

template <typename R>
concept FloatScalar = RingScalar<R> && !ScalarTraits<R>::is_exact;

} // namespace minorkit
