#include "winokit/lowprec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "winokit/rng.hpp"

namespace winokit {

double round_fp16(double x) {
    if (!std::isfinite(x)) return x;
    if (x == 0.0) return x;
    int e = std::ilogb(std::abs(x));
    if (e < -14) e = -14;                   // subnormal range, fixed quantum 2^-24
    double q = std::ldexp(1.0, e - 10);     // ulp at this binade
    double y = std::nearbyint(x / q) * q;   // x/q and *q exact; nearbyint is RNE
    if (std::abs(y) > 65504.0) return std::copysign(std::numeric_limits<double>::infinity(), x);
    return y;
}

Grid quantize_int8(const Grid& t, Granularity g) {
    Grid out = t;
    auto quant_span = [](std::vector<double*>& vals) {
        double mx = 0;
        for (double* v : vals) mx = std::max(mx, std::abs(*v));
        double s = mx / 127.0;
        if (s == 0) s = 1.0;
        for (double* v : vals) {
            double q = std::nearbyint(*v / s);
            *v = std::clamp(q, -128.0, 127.0) * s;
        }
    };
    if (g == Granularity::per_tensor) {
        std::vector<double*> all;
        for (auto& row : out)
            for (auto& v : row) all.push_back(&v);
        quant_span(all);
    } else {
        for (auto& row : out) {
            std::vector<double*> rv;
            for (auto& v : row) rv.push_back(&v);
            quant_span(rv);
        }
    }
    return out;
}

Grid direct_conv2d_f64(const Grid& tile, const Grid& kernel, int m) {
    const int r = static_cast<int>(kernel.size());
    const int n = static_cast<int>(tile.size());
    if (n != m + r - 1 || static_cast<int>(tile[0].size()) != n ||
        static_cast<int>(kernel[0].size()) != r)
        throw std::invalid_argument("direct_conv2d_f64: shape mismatch");
    Grid out(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double s = 0;
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) s += kernel[a][b] * tile[i + a][j + b];
            out[i][j] = s;
        }
    return out;
}

using FGrid = std::vector<std::vector<float>>;

static FGrid to_f32(const Grid& g) {
    FGrid out(g.size(), std::vector<float>(g[0].size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[0].size(); ++j) out[i][j] = static_cast<float>(g[i][j]);
    return out;
}

static FGrid matmul_f32(const FGrid& a, const FGrid& b) {
    FGrid c(a.size(), std::vector<float>(b[0].size(), 0.0f));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

static FGrid transpose_f32(const FGrid& a) {
    FGrid t(a[0].size(), std::vector<float>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

static Grid map_fp16(const Grid& g) {
    Grid out = g;
    for (auto& row : out)
        for (auto& v : row) v = round_fp16(v);
    return out;
}

Grid winograd_tile_conv_quantized(const Grid& at, const Grid& g, const Grid& bt,
                                  const Grid& kernel, const Grid& tile, const QuantSpec& spec) {
    Grid A, G, B, K, D;
    if (spec.precision == Precision::fp16) {
        A = map_fp16(at);
        G = map_fp16(g);
        B = map_fp16(bt);
        K = map_fp16(kernel);
        D = map_fp16(tile);
    } else {
        A = quantize_int8(at, spec.granularity);
        G = quantize_int8(g, spec.granularity);
        B = quantize_int8(bt, spec.granularity);
        K = quantize_int8(kernel, spec.granularity);
        D = quantize_int8(tile, spec.granularity);
    }
    FGrid Gf = to_f32(G), Bf = to_f32(B), Af = to_f32(A);
    FGrid U = matmul_f32(matmul_f32(Gf, to_f32(K)), transpose_f32(Gf));
    FGrid V = matmul_f32(matmul_f32(Bf, to_f32(D)), transpose_f32(Bf));
    FGrid H(U.size(), std::vector<float>(U[0].size()));
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = 0; j < U[0].size(); ++j) H[i][j] = U[i][j] * V[i][j];
    FGrid Y = matmul_f32(matmul_f32(Af, H), transpose_f32(Af));
    Grid out(Y.size(), std::vector<double>(Y[0].size()));
    for (std::size_t i = 0; i < Y.size(); ++i)
        for (std::size_t j = 0; j < Y[0].size(); ++j) out[i][j] = static_cast<double>(Y[i][j]);
    return out;
}

static Grid random_grid(CounterRng& rng, int rows, int cols) {
    Grid g(rows, std::vector<double>(cols));
    for (auto& row : g)
        for (auto& v : row) v = rng.uniform(-1.0, 1.0);
    return g;
}

static double frob(const Grid& g) {
    double s = 0;
    for (const auto& row : g)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

TileErrorReport measure_tile_error(const PointConfiguration& config, const QuantSpec& spec,
                                   int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("measure_tile_error: samples >= 1 required");
    if (spec.precision == Precision::fp16 && spec.granularity == Granularity::per_channel)
        throw std::invalid_argument("measure_tile_error: fp16 has no per-channel mode");
    config.validate();
    const int m = config.m, r = config.r, n = config.n();
    auto triple = construct_transforms(config);
    Grid A = to_float64(triple.at), G = to_float64(triple.g), B = to_float64(triple.bt);

    TileErrorReport rep;
    rep.m = m;
    rep.r = r;
    rep.spec = spec;
    rep.samples = samples;
    rep.seed = seed;

    std::vector<double> errs;
    errs.reserve(samples);
    std::uint64_t attempt = 0;
    while (static_cast<int>(errs.size()) < samples) {
        // one pure stream per attempt: order-independent and deterministic
        CounterRng rng(seed, 0xe44, attempt++);
        Grid tile = random_grid(rng, n, n);
        Grid kernel = random_grid(rng, r, r);
        Grid ref = direct_conv2d_f64(tile, kernel, m);
        double nref = frob(ref);
        if (nref < rep.l2_skip_epsilon) continue;  // resample near-zero outputs
        Grid y = winograd_tile_conv_quantized(A, G, B, kernel, tile, spec);
        double diff = 0;
        bool saturated = false;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (!std::isfinite(y[i][j])) saturated = true;
                double d = y[i][j] - ref[i][j];
                diff += d * d;
            }
        double e = std::sqrt(diff) / nref;
        if (saturated || !std::isfinite(e)) {
            e = 1.0;  // overflow sentinel: capped contribution
            ++rep.saturated_samples;
        }
        errs.push_back(e);
    }
    double sum = 0;
    for (double e : errs) {
        sum += e;
        rep.max_rel_l2 = std::max(rep.max_rel_l2, e);
    }
    rep.mean_rel_l2 = sum / samples;
    std::vector<double> sorted = errs;
    std::sort(sorted.begin(), sorted.end());
    rep.median_rel_l2 = samples % 2 ? sorted[samples / 2]
                                    : 0.5 * (sorted[samples / 2 - 1] + sorted[samples / 2]);
    return rep;
}

ScaleValidationReport scale_validation(const PointConfiguration& standard_config,
                                       const PointConfiguration& discovered_config,
                                       const QuantSpec& spec, int samples, std::uint64_t seed) {
    if (standard_config.m != discovered_config.m || standard_config.r != discovered_config.r)
        throw std::invalid_argument("scale_validation: tile mismatch");
    const int m = standard_config.m, r = standard_config.r, n = standard_config.n();

    struct Side {
        Grid A, G, B;
        double sum = 0;
    };
    auto prep = [&](const PointConfiguration& c) {
        auto t = construct_transforms(c);
        return Side{to_float64(t.at), to_float64(t.g), to_float64(t.bt)};
    };
    Side sides[2] = {prep(standard_config), prep(discovered_config)};

    ScaleValidationReport rep;
    rep.m = m;
    rep.r = r;
    rep.spec = spec;
    rep.samples = samples;
    rep.seed = seed;

    for (int s = 0; s < samples; ++s) {
        CounterRng rng(seed, 0x5ca1e, s);
        Grid tile = random_grid(rng, n, n);
        Grid kernel = random_grid(rng, r, r);
        Grid ref = direct_conv2d_f64(tile, kernel, m);
        for (auto& side : sides) {
            Grid y = winograd_tile_conv_quantized(side.A, side.G, side.B, kernel, tile, spec);
            double acc = 0;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    acc += std::abs(y[i][j] - ref[i][j]) /
                           std::max(std::abs(ref[i][j]), rep.elementwise_epsilon);
            side.sum += acc / (m * m);
        }
    }
    rep.standard_error = sides[0].sum / samples;
    rep.discovered_error = sides[1].sum / samples;
    rep.improvement_ratio = rep.discovered_error > 0 ? rep.standard_error / rep.discovered_error
                                                     : std::numeric_limits<double>::infinity();
    return rep;
}

}  // namespace winokit
