#pragma once

#include <array>
#include <vector>

#include "winokit/rational.hpp"

namespace winokit {

// Tile (m, r) plus the n-1 finite interpolation points; the n-th point is
// always infinity.
struct PointConfiguration {
    int m = 0, r = 0;
    std::vector<Rational> finite_points;

    int n() const { return m + r - 1; }
    void validate() const;  // throws on bad sizes or duplicate points
};

struct TransformTriple {
    RationalMatrix at;  // m x n
    RationalMatrix g;   // n x r
    RationalMatrix bt;  // n x n
};

// T[i][k][j] = 1 iff i + k = j.
struct ConvolutionTensor {
    int m = 0, r = 0, n = 0;
    int at(int i, int k, int j) const { return i + k == j ? 1 : 0; }
};

struct VerificationReport {
    bool exact_zero = false;
    Rational max_residual;  // 0 when exact
    std::size_t checked_entries = 0;
};

// Row i = [p_i^0 .. p_i^{cols-1}]; optional trailing [0,..,0,1] infinity row.
// Conditioning callers use cols = n-1 and no infinity row.
RationalMatrix build_vandermonde(const std::vector<Rational>& finite_points, int cols,
                                 bool with_infinity_row = false);

// F_i = prod_{j != i} (p_i - p_j); empty product = 1.
std::vector<Rational> lagrange_factors(const std::vector<Rational>& finite_points);

ConvolutionTensor convolution_tensor(int m, int r);

// A^T column p = powers of alpha_p (infinity column = e_m); G row p =
// powers / F_p (infinity row = e_r); B^T is the unique exact solution of the
// stacked tensor identity. Output always satisfies verify_exact.
TransformTriple construct_transforms(const PointConfiguration& config);

VerificationReport verify_exact(const TransformTriple& triple, int m, int r);

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

// (A^T x A^T, G x G, B^T x B^T); throws std::length_error past the entry cap.
TransformTriple kron_expand(const TransformTriple& t, std::size_t entry_cap = 1u << 24);

using Grid = std::vector<std::vector<double>>;

// y = A^T [(G g G) . (B^T d B)] A in float64, the unquantized baseline.
Grid winograd_apply_2d(const Grid& at, const Grid& g, const Grid& bt, const Grid& kernel,
                       const Grid& tile);

}  // namespace winokit
