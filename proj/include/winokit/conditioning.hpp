#pragma once

#include <map>
#include <string>

#include "winokit/cooktoom.hpp"

namespace winokit {

enum class Norm { one, two, inf, fro };

struct NormMap {
    double one = 0, two = 0, inf = 0, fro = 0;
};

struct MatrixStats {
    double max_abs_entry = 0;
    std::size_t zero_count = 0;
};

struct ConditioningReport {
    NormMap kappa_v, kappa_at, kappa_bt, kappa_g;
    double norm_product = 0;  // ||A||_2 * ||B||_2 * ||G||_2
    double kappa_v_2d = 0;    // kappa_2(V)^2
    MatrixStats stats_at, stats_bt, stats_g;
};

struct ChebyshevBaseline {
    std::vector<double> raw_points;
    double best_scale = 0, best_shift = 0;
    double best_kappa2 = 0;
};

// kappa in the given norm; 2-norm = sigma_max/sigma_min (non-square allowed),
// others need a square matrix. +inf sentinel when sigma_min underflows.
double kappa(const Grid& matrix, Norm norm = Norm::two);

double spectral_norm(const Grid& matrix);

ConditioningReport analyze(const PointConfiguration& config);

// kappa2(M kron M) / kappa2(M)^2; 1.0 within 1e-6 for well-scaled inputs.
double verify_kron_squaring(const Grid& matrix);

// Affine scan a*x + b over Chebyshev first-kind nodes, constrained to keep a
// node near zero (min |point| <= 0.05), minimizing kappa2 of the Vandermonde.
ChebyshevBaseline chebyshev_baseline(int n_points, double scale_lo = 0.5, double scale_hi = 5.0,
                                     double shift_lo = -2.0, double shift_hi = 2.0,
                                     double grid_step = 0.005);

// kappa2 of L = V*P with P the Legendre-to-monomial coefficient matrix.
double legendre_kappa(const PointConfiguration& config);

// Column j of P = monomial coefficients of P_j.
RationalMatrix legendre_coeff_matrix(int ncols);

}  // namespace winokit
