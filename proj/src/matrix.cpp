#include "minorkit/matrix.hpp"

namespace minorkit {

Matrix<MultiPoly> generic_skew_toeplitz(std::size_t n) {
    if (n < 2) throw UsageError("generic_skew_toeplitz: order must be at least 2");
    const std::size_t nvars = n - 1;
    std::vector<MultiPoly> b;
    b.reserve(nvars);
    for (std::size_t k = 1; k <= nvars; ++k) b.push_back(MultiPoly::variable(nvars, k));
    return skew_toeplitz(b, MultiPoly(nvars));
}

Matrix<MultiPoly> johnson_family(std::size_t n) {
    if (n < 2) throw UsageError("johnson_family: order must be at least 2");
    return ones(n, MultiPoly(n - 1)) + generic_skew_toeplitz(n);
}

Matrix<Rational> evaluate(const Matrix<MultiPoly>& a, const std::vector<Rational>& point) {
    return a.map([&](const MultiPoly& p) { return p.evaluate(point); }, Rational(0));
}

Matrix<Rational> to_rational(const Matrix<Integer>& a) {
    return a.map([](const Integer& v) { return Rational(v); }, Rational(0));
}

} // namespace minorkit
