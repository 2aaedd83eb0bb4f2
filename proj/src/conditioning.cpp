#include "winokit/conditioning.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <limits>

namespace winokit {

static Eigen::MatrixXd to_eigen(const Grid& g) {
    Eigen::MatrixXd m(g.size(), g[0].size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[0].size(); ++j) m(i, j) = g[i][j];
    return m;
}

static double kappa2_eigen(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    double smin = s(s.size() - 1);
    if (smin <= 0) return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

double spectral_norm(const Grid& g) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(g));
    return svd.singularValues()(0);
}

double kappa(const Grid& g, Norm norm) {
    Eigen::MatrixXd m = to_eigen(g);
    if (norm == Norm::two) return kappa2_eigen(m);
    if (m.rows() != m.cols())
        throw std::invalid_argument("kappa: non-square input needs the 2-norm");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();
    Eigen::MatrixXd inv = lu.inverse();
    auto n1 = [](const Eigen::MatrixXd& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); };
    auto ninf = [](const Eigen::MatrixXd& a) { return a.cwiseAbs().rowwise().sum().maxCoeff(); };
    switch (norm) {
        case Norm::one: return n1(m) * n1(inv);
        case Norm::inf: return ninf(m) * ninf(inv);
        case Norm::fro: return m.norm() * inv.norm();
        default: return 0;  // unreachable
    }
}

static NormMap all_norms(const Grid& g, bool square) {
    NormMap nm;
    nm.two = kappa(g, Norm::two);
    if (square) {
        nm.one = kappa(g, Norm::one);
        nm.inf = kappa(g, Norm::inf);
        nm.fro = kappa(g, Norm::fro);
    }
    return nm;
}

static MatrixStats entry_stats(const Grid& g) {
    MatrixStats s;
    for (const auto& row : g)
        for (double v : row) {
            s.max_abs_entry = std::max(s.max_abs_entry, std::abs(v));
            if (v == 0) ++s.zero_count;
        }
    return s;
}

ConditioningReport analyze(const PointConfiguration& config) {
    config.validate();
    ConditioningReport rep;
    const int nf = config.n() - 1;
    Grid V = to_float64(build_vandermonde(config.finite_points, nf, false));
    auto triple = construct_transforms(config);
    Grid A = to_float64(triple.at), G = to_float64(triple.g), B = to_float64(triple.bt);

    rep.kappa_v = all_norms(V, true);
    rep.kappa_at = all_norms(A, A.size() == A[0].size());
    rep.kappa_g = all_norms(G, G.size() == G[0].size());
    rep.kappa_bt = all_norms(B, true);
    rep.norm_product = spectral_norm(A) * spectral_norm(B) * spectral_norm(G);
    rep.kappa_v_2d = rep.kappa_v.two * rep.kappa_v.two;
    rep.stats_at = entry_stats(A);
    rep.stats_g = entry_stats(G);
    rep.stats_bt = entry_stats(B);
    return rep;
}

double verify_kron_squaring(const Grid& g) {
    Eigen::MatrixXd m = to_eigen(g);
    Eigen::MatrixXd k(m.rows() * m.rows(), m.cols() * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            k.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = m(i, j) * m;
    double k1 = kappa2_eigen(m);
    return kappa2_eigen(k) / (k1 * k1);
}

ChebyshevBaseline chebyshev_baseline(int n_points, double scale_lo, double scale_hi,
                                     double shift_lo, double shift_hi, double grid_step) {
    if (n_points < 2) throw std::invalid_argument("chebyshev_baseline: need >= 2 points");
    ChebyshevBaseline best;
    best.best_kappa2 = std::numeric_limits<double>::infinity();
    std::vector<double> raw(n_points);
    for (int k = 1; k <= n_points; ++k)
        raw[k - 1] = std::cos((2.0 * k - 1.0) / (2.0 * n_points) * M_PI);
    best.raw_points = raw;

    Eigen::MatrixXd V(n_points, n_points);
    for (double a = scale_lo; a <= scale_hi + 1e-9; a += grid_step) {
        for (double b = shift_lo; b <= shift_hi + 1e-9; b += grid_step) {
            double min_abs = std::numeric_limits<double>::infinity();
            for (int i = 0; i < n_points; ++i) min_abs = std::min(min_abs, std::abs(a * raw[i] + b));
            if (min_abs > 0.05) continue;  // must keep a node near zero
            for (int i = 0; i < n_points; ++i) {
                double p = a * raw[i] + b, v = 1.0;
                for (int j = 0; j < n_points; ++j) {
                    V(i, j) = v;
                    v *= p;
                }
            }
            double k2 = kappa2_eigen(V);
            if (k2 < best.best_kappa2) {
                best.best_kappa2 = k2;
                best.best_scale = a;
                best.best_shift = b;
            }
        }
    }
    if (!std::isfinite(best.best_kappa2))
        throw std::runtime_error("chebyshev_baseline: empty feasible grid");
    return best;
}

RationalMatrix legendre_coeff_matrix(int ncols) {
    RationalMatrix P(ncols, ncols);
    P(0, 0) = 1;
    if (ncols > 1) P(1, 1) = 1;
    // (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
    for (int j = 1; j + 1 < ncols; ++j)
        for (int i = 0; i < ncols; ++i) {
            Rational t(0);
            if (i > 0) t += Rational(2 * j + 1) * P(i - 1, j);
            t -= Rational(j) * P(i, j - 1);
            P(i, j + 1) = t / Rational(j + 1);
        }
    return P;
}

double legendre_kappa(const PointConfiguration& config) {
    config.validate();
    const int nf = config.n() - 1;
    RationalMatrix V = build_vandermonde(config.finite_points, nf, false);
    RationalMatrix L = matmul(V, legendre_coeff_matrix(nf));
    return kappa(to_float64(L), Norm::two);
}

}  // namespace winokit
