#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over the integers in variables b1..bk.
 *
 * Terms are kept as a vector sorted by descending graded-lexicographic order
 * (total degree first, then the exponent of b1, b2, ...). No stored coefficient
 * is zero, so two polynomials are equal iff their term vectors are identical.
 *
 * Coefficients are arbitrary precision (GMP). Exponents are 8-bit; any product
 * that would overflow an exponent throws InternalError.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace minorkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector with a cached total degree.
class Monomial {
public:
    static constexpr std::size_t kMaxVars = 16;
    using Exponent = std::uint8_t;

    Monomial() = default;

    /// b_{var+1}^power (var is 0-based).
    static Monomial variable(std::size_t var, unsigned power = 1);

    unsigned degree() const { return degree_; }
    unsigned exponent(std::size_t var) const { return exps_[var]; }

    /// Product; throws InternalError on exponent overflow.
    Monomial operator*(const Monomial& other) const;

    bool divides(const Monomial& other) const;
    /// other / *this; precondition divides(other).
    Monomial quotient_of(const Monomial& other) const;

    /// Graded-lexicographic comparison.
    std::strong_ordering operator<=>(const Monomial& other) const {
        if (degree_ != other.degree_) return degree_ <=> other.degree_;
        return exps_ <=> other.exps_;
    }
    bool operator==(const Monomial& other) const = default;

    std::size_t hash() const;

private:
    std::array<Exponent, kMaxVars> exps_{};
    std::uint16_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class MultiPoly {
public:
    using Term = std::pair<Monomial, Integer>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars);
    /// Constant polynomial.
    MultiPoly(std::size_t nvars, const Integer& c);

    /// The variable b_{index} (1-based, matching the b1..bk naming).
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    /// Builds a canonical polynomial from arbitrary (possibly repeated, possibly zero) terms.
    static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(const MultiPoly& lhs, const Integer& c);

    bool operator==(const MultiPoly& other) const;

    /// Exact division: throws InternalError unless the remainder is zero.
    MultiPoly divide_exact(const MultiPoly& divisor) const;

    /// Evaluates at a rational point; assignment.size() must equal nvars().
    Rational evaluate(const std::vector<Rational>& assignment) const;

    /// Text form "c * b1^e1 b2^e2 + ..." in canonical (descending) order; zero is "0".
    std::string to_string() const;
    /// Parses the text form; nvars must cover every variable that appears.
    static MultiPoly parse(std::string_view text, std::size_t nvars);
    /// Largest variable index that appears (0 when constant).
    std::size_t max_variable_index() const;

private:
    void require_same_ring(const MultiPoly& other, const char* op) const;

    std::size_t nvars_ = 0;
    std::vector<Term> terms_; // descending grlex, nonzero coefficients
};

bool poly_is_zero(const MultiPoly& p);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& assignment);

} // namespace minorkit
