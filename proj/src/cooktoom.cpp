#include "winokit/cooktoom.hpp"

#include <stdexcept>

namespace winokit {

void PointConfiguration::validate() const {
    if (m < 1 || r < 1) throw std::invalid_argument("tile dimensions must be positive");
    if (static_cast<int>(finite_points.size()) != n() - 1)
        throw std::invalid_argument("expected n-1 finite points");
    for (std::size_t i = 0; i < finite_points.size(); ++i)
        for (std::size_t j = i + 1; j < finite_points.size(); ++j)
            if (finite_points[i] == finite_points[j])
                throw std::invalid_argument("duplicate interpolation point " +
                                            to_string(finite_points[i]));
}

RationalMatrix build_vandermonde(const std::vector<Rational>& pts, int cols,
                                 bool with_infinity_row) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw std::invalid_argument("duplicate interpolation point");
    std::size_t rows = pts.size() + (with_infinity_row ? 1 : 0);
    RationalMatrix V(rows, cols);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int j = 0; j < cols; ++j) V(i, j) = pow(pts[i], j);
    if (with_infinity_row) V(pts.size(), cols - 1) = 1;
    return V;
}

std::vector<Rational> lagrange_factors(const std::vector<Rational>& pts) {
    std::vector<Rational> F;
    F.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Rational f(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            Rational d = pts[i] - pts[j];
            if (d == 0) throw std::invalid_argument("duplicate interpolation point");
            f *= d;
        }
        F.push_back(f);
    }
    return F;
}

ConvolutionTensor convolution_tensor(int m, int r) {
    if (m < 1 || r < 1) throw std::invalid_argument("convolution_tensor: bad dims");
    return ConvolutionTensor{m, r, m + r - 1};
}

TransformTriple construct_transforms(const PointConfiguration& config) {
    config.validate();
    const int m = config.m, r = config.r, n = config.n();
    const auto& pts = config.finite_points;

    RationalMatrix AT(m, n);
    for (int i = 0; i < m; ++i) {
        for (int p = 0; p < n - 1; ++p) AT(i, p) = pow(pts[p], i);
        AT(i, n - 1) = (i == m - 1) ? 1 : 0;
    }

    auto F = lagrange_factors(pts);
    RationalMatrix G(n, r);
    for (int p = 0; p < n - 1; ++p)
        for (int k = 0; k < r; ++k) G(p, k) = pow(pts[p], k) / F[p];
    G(n - 1, r - 1) = 1;

    // Stack the tensor identity over (i,k): M[(i,k),p] = AT[i][p]*G[p][k],
    // solve M * BT = T exactly via normal equations (consistent and full rank
    // for distinct points; rank deficiency surfaces as a singular solve).
    RationalMatrix M(m * r, n), T(m * r, n);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < r; ++k) {
            int row = i * r + k;
            for (int p = 0; p < n; ++p) M(row, p) = AT(i, p) * G(p, k);
            if (i + k < n) T(row, i + k) = 1;
        }
    RationalMatrix MtM(n, n), MtT(n, n);
    for (int a = 0; a < n; ++a)
        for (int q = 0; q < m * r; ++q) {
            if (M(q, a) == 0) continue;
            for (int b = 0; b < n; ++b) MtM(a, b) += M(q, a) * M(q, b);
            for (int j = 0; j < n; ++j) MtT(a, j) += M(q, a) * T(q, j);
        }
    RationalMatrix BT;
    try {
        BT = exact_solve(MtM, MtT);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("non-realizable point configuration");
    }

    TransformTriple t{AT, G, BT};
    if (!verify_exact(t, m, r).exact_zero)
        throw std::invalid_argument("non-realizable point configuration");
    return t;
}

VerificationReport verify_exact(const TransformTriple& t, int m, int r) {
    const int n = m + r - 1;
    if (t.at.rows() != static_cast<std::size_t>(m) || t.at.cols() != static_cast<std::size_t>(n) ||
        t.g.rows() != static_cast<std::size_t>(n) || t.g.cols() != static_cast<std::size_t>(r) ||
        t.bt.rows() != static_cast<std::size_t>(n) || t.bt.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("verify_exact: shape mismatch");
    VerificationReport rep;
    rep.max_residual = 0;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < r; ++k)
            for (int j = 0; j < n; ++j) {
                Rational got(0);
                for (int p = 0; p < n; ++p) got += t.at(i, p) * t.g(p, k) * t.bt(p, j);
                Rational want = (i + k == j) ? 1 : 0;
                Rational res = abs(got - want);
                if (res > rep.max_residual) rep.max_residual = res;
                ++rep.checked_entries;
            }
    rep.exact_zero = (rep.max_residual == 0);
    return rep;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

TransformTriple kron_expand(const TransformTriple& t, std::size_t entry_cap) {
    auto entries = [](const RationalMatrix& m) { return m.rows() * m.cols(); };
    if (entries(t.at) * entries(t.at) > entry_cap || entries(t.g) * entries(t.g) > entry_cap ||
        entries(t.bt) * entries(t.bt) > entry_cap)
        throw std::length_error("kron_expand: entry cap exceeded");
    return TransformTriple{kron(t.at, t.at), kron(t.g, t.g), kron(t.bt, t.bt)};
}

static Grid matmul_f64(const Grid& a, const Grid& b) {
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Grid c(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][p] * b[p][j];
    return c;
}

static Grid transpose(const Grid& a) {
    Grid t(a[0].size(), std::vector<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Grid winograd_apply_2d(const Grid& at, const Grid& g, const Grid& bt, const Grid& kernel,
                       const Grid& tile) {
    std::size_t n = bt.size();
    if (g[0].size() != kernel.size() || kernel.size() != kernel[0].size() || tile.size() != n ||
        tile[0].size() != n)
        throw std::invalid_argument("winograd_apply_2d: shape mismatch");
    Grid U = matmul_f64(matmul_f64(g, kernel), transpose(g));
    Grid V = matmul_f64(matmul_f64(bt, tile), transpose(bt));
    Grid H(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H[i][j] = U[i][j] * V[i][j];
    return matmul_f64(matmul_f64(at, H), transpose(at));
}

}  // namespace winokit
