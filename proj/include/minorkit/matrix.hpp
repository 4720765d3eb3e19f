#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over any RingScalar, plus the structured
 *        constructors used throughout: Toeplitz from diagonal constants, J_n,
 *        I_n, the nilpotent lower shift, the generic skew-symmetric Toeplitz
 *        matrix over Z[b1..b_{n-1}], and the family A = J_n + B.
 *
 * Every matrix remembers a zero element of its scalar ring so that empty
 * matrices and polynomial matrices still know which ring they live in.
 *
 * Public block indices are 1-based to match A_r(i,j) notation:
 * block(A, {r, i, j}) returns rows i..i+r-1 and columns j..j+r-1.
 */

#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/errors.hpp"
#include "minorkit/ring.hpp"

namespace minorkit {

template <RingScalar R>
class Matrix {
public:
    using value_type = R;

    Matrix() : zero_{} {}

    Matrix(std::size_t rows, std::size_t cols, const R& zero = R{})
        : rows_(rows), cols_(cols), zero_(ScalarTraits<R>::zero_like(zero)), data_(rows * cols, zero_) {}

    /// Row-wise literal, e.g. Matrix<Integer>{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<R>> rows) : zero_{} {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw UsageError("Matrix: ragged initializer list");
            for (const auto& v : row) data_.push_back(v);
        }
        if (!data_.empty()) zero_ = ScalarTraits<R>::zero_like(data_.front());
    }

    /// Takes ownership of a row-major buffer; data.size() must equal rows*cols.
    static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<R> data, const R& zero) {
        if (data.size() != rows * cols)
            throw UsageError("Matrix: data length " + std::to_string(data.size()) + " != rows*cols " +
                             std::to_string(rows * cols));
        Matrix m(0, 0, zero);
        m.rows_ = rows;
        m.cols_ = cols;
        m.data_ = std::move(data);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const R& zero() const { return zero_; }
    R one() const { return ScalarTraits<R>::one_like(zero_); }

    /// 0-based element access.
    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<R>& data() const { return data_; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = R(-v);
        return r;
    }

    Matrix& operator+=(const Matrix& rhs) {
        require_same_shape(rhs, "add");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = R(data_[k] + rhs.data_[k]);
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        require_same_shape(rhs, "sub");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = R(data_[k] - rhs.data_[k]);
        return *this;
    }
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

    /// Entrywise scalar multiple.
    friend Matrix operator*(const R& c, Matrix m) {
        for (auto& v : m.data_) v = R(c * v);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

    /// Applies f to every entry, yielding a matrix over another ring.
    template <typename F>
    auto map(F&& f, const std::invoke_result_t<F, const R&>& zero) const {
        using S = std::invoke_result_t<F, const R&>;
        std::vector<S> out;
        out.reserve(data_.size());
        for (const auto& v : data_) out.push_back(f(v));
        return Matrix<S>::from_data(rows_, cols_, std::move(out), zero);
    }

    friend Matrix matmul(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw UsageError("matmul: dimension mismatch (" + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                             std::to_string(b.cols_) + ")");
        Matrix c(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (ScalarTraits<R>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = R(c(i, j) + aik * b(k, j));
            }
        return c;
    }

private:
    void require_same_shape(const Matrix& rhs, const char* op) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw UsageError(std::string("Matrix ") + op + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    R zero_;
    std::vector<R> data_;
};

template <RingScalar R>
Matrix<R> transpose(const Matrix<R>& a) {
    return a.transpose();
}

/// Top-left corner (1-based) and size of a contiguous square block A_r(i,j).
struct MinorIndex {
    std::size_t r = 0;
    std::size_t i = 1;
    std::size_t j = 1;
};

/// Diagonal constants c_{-(n-1)}, ..., c_{n-1}; entry a_{ij} = c_{j-i}.
template <RingScalar R>
struct ToeplitzSpec {
    std::size_t n = 0;
    std::vector<R> diags;

    /// c_k for -(n-1) <= k <= n-1.
    const R& at(long k) const { return diags[static_cast<std::size_t>(k + static_cast<long>(n) - 1)]; }
};

template <RingScalar R>
Matrix<R> toeplitz_build(const ToeplitzSpec<R>& spec) {
    if (spec.n == 0) throw UsageError("toeplitz_build: order must be positive");
    if (spec.diags.size() != 2 * spec.n - 1)
        throw UsageError("toeplitz_build: expected " + std::to_string(2 * spec.n - 1) + " diagonal constants, got " +
                         std::to_string(spec.diags.size()));
    Matrix<R> a(spec.n, spec.n, spec.diags.front());
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            a(i, j) = spec.at(static_cast<long>(j) - static_cast<long>(i));
    return a;
}

/// True iff a_{ij} = a_{i+1,j+1} wherever both exist.
template <RingScalar R>
bool is_toeplitz(const Matrix<R>& a) {
    for (std::size_t i = 0; i + 1 < a.rows(); ++i)
        for (std::size_t j = 0; j + 1 < a.cols(); ++j)
            if (!(a(i, j) == a(i + 1, j + 1))) return false;
    return true;
}

template <RingScalar R>
bool is_skew_symmetric(const Matrix<R>& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(a(i, j) == R(-a(j, i)))) return false;
    return true;
}

template <RingScalar R>
bool is_zero_matrix(const Matrix<R>& a) {
    for (const auto& v : a.data())
        if (!ScalarTraits<R>::is_zero(v)) return false;
    return true;
}

/// A_r(i,j) with 1-based i, j.
template <RingScalar R>
Matrix<R> block(const Matrix<R>& a, MinorIndex idx) {
    if (idx.r > a.rows() || idx.r > a.cols() || idx.i < 1 || idx.j < 1 || idx.i + idx.r - 1 > a.rows() ||
        idx.j + idx.r - 1 > a.cols())
        throw UsageError("block: index (r=" + std::to_string(idx.r) + ", i=" + std::to_string(idx.i) +
                         ", j=" + std::to_string(idx.j) + ") out of range for " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    Matrix<R> b(idx.r, idx.r, a.zero());
    for (std::size_t p = 0; p < idx.r; ++p)
        for (std::size_t q = 0; q < idx.r; ++q) b(p, q) = a(idx.i - 1 + p, idx.j - 1 + q);
    return b;
}

/// Removes one row and one column (0-based).
template <RingScalar R>
Matrix<R> delete_row_col(const Matrix<R>& a, std::size_t row, std::size_t col) {
    Matrix<R> out(a.rows() - 1, a.cols() - 1, a.zero());
    for (std::size_t i = 0, oi = 0; i < a.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, oj = 0; j < a.cols(); ++j) {
            if (j == col) continue;
            out(oi, oj++) = a(i, j);
        }
        ++oi;
    }
    return out;
}

enum class StructuredKind { ones, identity, lower_shift };

template <RingScalar R>
Matrix<R> structured(StructuredKind kind, std::size_t n, const R& zero = R{}) {
    Matrix<R> m(n, n, zero);
    const R one = ScalarTraits<R>::one_like(zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool set = false;
            switch (kind) {
            case StructuredKind::ones: set = true; break;
            case StructuredKind::identity: set = i == j; break;
            case StructuredKind::lower_shift: set = i == j + 1; break;
            }
            if (set) m(i, j) = one;
        }
    return m;
}

template <RingScalar R>
Matrix<R> ones(std::size_t n, const R& zero = R{}) {
    return structured(StructuredKind::ones, n, zero);
}

template <RingScalar R>
Matrix<R> identity(std::size_t n, const R& zero = R{}) {
    return structured(StructuredKind::identity, n, zero);
}

template <RingScalar R>
Matrix<R> lower_shift(std::size_t n, const R& zero = R{}) {
    return structured(StructuredKind::lower_shift, n, zero);
}

/// Numeric skew-symmetric Toeplitz matrix with superdiagonal constants b[0..n-2].
template <RingScalar R>
Matrix<R> skew_toeplitz(const std::vector<R>& b, const R& zero = R{}) {
    const std::size_t n = b.size() + 1;
    Matrix<R> m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = b[j - i - 1];
            m(j, i) = R(-b[j - i - 1]);
        }
    return m;
}

/// Skew-symmetric Toeplitz matrix over Z[b1..b_{n-1}] with b_k on the k-th superdiagonal.
Matrix<MultiPoly> generic_skew_toeplitz(std::size_t n);

/// J_n + generic_skew_toeplitz(n): the general Toeplitz A with A + A^T = 2 J_n.
Matrix<MultiPoly> johnson_family(std::size_t n);

/// Entrywise specialization of a polynomial matrix at a rational point.
Matrix<Rational> evaluate(const Matrix<MultiPoly>& a, const std::vector<Rational>& point);

/// Lifts an integer matrix into another exact ring.
Matrix<Rational> to_rational(const Matrix<Integer>& a);

} // namespace minorkit
