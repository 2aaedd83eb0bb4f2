#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace winokit {

// Exact rational scalar. boost::multiprecision keeps it canonical
// (denominator > 0, gcd(|num|, den) = 1) after every operation.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Text form used in every JSON format: "a/b", integers shortened to "a".
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline Rational pow(const Rational& q, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

// Interpolation point: finite rational or the point at infinity.
struct Point {
    bool infinite = false;
    Rational value;  // meaningful only when !infinite

    static Point infinity() { return Point{true, Rational(0)}; }
    static Point finite(Rational v) { return Point{false, std::move(v)}; }
    bool operator==(const Point& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

inline RationalMatrix identity(std::size_t n) {
    RationalMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

inline RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

// Nearest rational a/b with 1 <= b <= d_max, |a| <= bound_factor*b.
// Ties: smaller denominator, then smaller |numerator|.
Rational snap_to_rational(double x, int d_max = 10, int numerator_bound_factor = 5);

// All canonical a/b with b <= d_max, |a| <= 5b, |x - a/b| <= radius,
// sorted by distance then denominator.
std::vector<Rational> rationals_within(double x, double radius, int d_max);

// Exact X with A*X = B. Throws std::domain_error when A is singular.
RationalMatrix exact_solve(const RationalMatrix& A, const RationalMatrix& B);

// Entry-wise nearest float64. Throws std::range_error on overflow.
std::vector<std::vector<double>> to_float64(const RationalMatrix& M);

}  // namespace winokit
