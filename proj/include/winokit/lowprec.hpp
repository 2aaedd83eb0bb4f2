#pragma once

#include <cstdint>

#include "winokit/cooktoom.hpp"

namespace winokit {

enum class Precision { fp16, int8 };
enum class Granularity { per_tensor, per_channel };

struct QuantSpec {
    Precision precision = Precision::int8;
    Granularity granularity = Granularity::per_tensor;  // int8 only
};

struct TileErrorReport {
    int m = 0, r = 0;
    QuantSpec spec;
    int samples = 0;
    std::uint64_t seed = 0;
    double mean_rel_l2 = 0, median_rel_l2 = 0, max_rel_l2 = 0;
    int saturated_samples = 0;
    double l2_skip_epsilon = 1e-12;  // documented denominator guard
};

struct ScaleValidationReport {
    int m = 0, r = 0;
    QuantSpec spec;
    int samples = 0;
    std::uint64_t seed = 0;
    double standard_error = 0, discovered_error = 0;
    double improvement_ratio = 0;
    double elementwise_epsilon = 1e-30;  // documented denominator guard
};

// Nearest binary16 value as a float64 (round-to-nearest-even, subnormals
// supported); past 65504 saturates to +/-infinity, the overflow sentinel.
double round_fp16(double x);

// Per-tensor: s = max|t| / 127; per-channel: one scale per leading-axis row.
// Values round-to-nearest-even, clamp to [-128, 127], dequantize.
Grid quantize_int8(const Grid& t, Granularity g);

// FP64 valid correlation: out[i][j] = sum_k kernel .* tile[i:i+r, j:j+r].
Grid direct_conv2d_f64(const Grid& tile, const Grid& kernel, int m);

// fp16: transforms and inputs through round_fp16, all products accumulate in
// float32. int8: transforms and inputs quantize/dequantize, float32 products.
Grid winograd_tile_conv_quantized(const Grid& at, const Grid& g, const Grid& bt,
                                  const Grid& kernel, const Grid& tile, const QuantSpec& spec);

TileErrorReport measure_tile_error(const PointConfiguration& config, const QuantSpec& spec,
                                   int samples, std::uint64_t seed);

ScaleValidationReport scale_validation(const PointConfiguration& standard_config,
                                       const PointConfiguration& discovered_config,
                                       const QuantSpec& spec, int samples, std::uint64_t seed);

}  // namespace winokit
