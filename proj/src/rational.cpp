#include "winokit/rational.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace winokit {

Rational snap_to_rational(double x, int d_max, int numerator_bound_factor) {
    if (!std::isfinite(x)) throw std::invalid_argument("snap_to_rational: non-finite input");
    if (d_max < 1) throw std::invalid_argument("snap_to_rational: d_max < 1");
    bool have = false;
    Rational best;
    double best_dist = 0;
    for (int b = 1; b <= d_max; ++b) {
        long long a0 = static_cast<long long>(std::llround(x * b));
        for (long long a = a0 - 1; a <= a0 + 1; ++a) {
            if (std::llabs(a) > static_cast<long long>(numerator_bound_factor) * b) continue;
            Rational q{BigInt(a), BigInt(b)};
            double d = std::abs(x - to_double(q));
            if (!have || d < best_dist ||
                (d == best_dist && (den(q) < den(best) ||
                                    (den(q) == den(best) && abs(num(q)) < abs(num(best)))))) {
                have = true;
                best = q;
                best_dist = d;
            }
        }
    }
    if (!have) throw std::invalid_argument("snap_to_rational: empty candidate set");
    return best;
}

std::vector<Rational> rationals_within(double x, double radius, int d_max) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationals_within: non-finite input");
    if (radius <= 0) throw std::invalid_argument("rationals_within: radius <= 0");
    std::vector<std::pair<double, Rational>> hits;
    for (int b = 1; b <= d_max; ++b) {
        long long lo = static_cast<long long>(std::floor((x - radius) * b)) - 1;
        long long hi = static_cast<long long>(std::ceil((x + radius) * b)) + 1;
        for (long long a = lo; a <= hi; ++a) {
            if (std::llabs(a) > 5LL * b) continue;
            if (std::gcd(static_cast<long long>(std::llabs(a)), static_cast<long long>(b)) != 1)
                continue;
            Rational q{BigInt(a), BigInt(b)};
            double d = std::abs(x - to_double(q));
            if (d <= radius) hits.emplace_back(d, q);
        }
    }
    std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first < r.first;
        return den(l.second) < den(r.second);
    });
    std::vector<Rational> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.push_back(h.second);
    return out;
}

RationalMatrix exact_solve(const RationalMatrix& A, const RationalMatrix& B) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("exact_solve: A not square");
    if (B.rows() != n) throw std::invalid_argument("exact_solve: row count mismatch");
    RationalMatrix a = A, b = B;
    for (std::size_t c = 0; c < n; ++c) {
        // Pivot choice is correctness-neutral in exact arithmetic; pick the
        // largest float image for a deterministic order.
        std::size_t piv = c;
        double piv_mag = -1;
        for (std::size_t r = c; r < n; ++r) {
            if (a(r, c) == 0) continue;
            double mag = std::abs(to_double(a(r, c)));
            if (mag > piv_mag) {
                piv_mag = mag;
                piv = r;
            }
        }
        if (piv_mag < 0) throw std::domain_error("exact_solve: singular matrix");
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(c, j), b(piv, j));
        }
        Rational inv = Rational(1) / a(c, c);
        for (std::size_t j = 0; j < n; ++j) a(c, j) *= inv;
        for (std::size_t j = 0; j < b.cols(); ++j) b(c, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(c, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(r, j) -= f * b(c, j);
        }
    }
    return b;
}

std::vector<std::vector<double>> to_float64(const RationalMatrix& M) {
    std::vector<std::vector<double>> out(M.rows(), std::vector<double>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            double v = to_double(M(i, j));
            if (!std::isfinite(v)) throw std::range_error("to_float64: entry out of range");
            out[i][j] = v;
        }
    return out;
}

}  // namespace winokit
