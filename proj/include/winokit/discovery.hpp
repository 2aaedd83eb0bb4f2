#pragma once

#include <optional>
#include <string>

#include "winokit/cooktoom.hpp"

namespace winokit {

struct ESConfig {
    int population = 50;
    int generations = 100;
    int restarts = 3;
    double sigma_init = 0.5;
    double sigma_lo = 0.01, sigma_hi = 2.0;
    double elite_fraction = 0.25;
    double sigma_up = 1.1, sigma_down = 0.9;
    double success_threshold = 0.2;
    double lambda1 = 0.001, lambda2 = 0.0001;
    std::uint64_t seed = 42;
};

struct FitnessBreakdown {
    double tensor_error = 0;
    double magnitude_penalty = 0;
    double conditioning_penalty = 0;
    double total = 0;
};

struct DiscoveryResult {
    PointConfiguration config;
    double kappa2_v = 0;
    bool verified = false;
    std::string mode;  // es | symmetric | dtype_aware | pipeline
    std::uint64_t seed = 0;
    double runtime_seconds = 0;
    std::vector<std::string> provenance;
};

enum class DtypeKind { float16, bfloat16, int8 };

struct DtypeConstraint {
    DtypeKind kind = DtypeKind::float16;
};

struct DiscoverOptions {
    std::uint64_t seed = 42;
    int d_max = 6;       // symmetric enumeration / neighborhood repair
    int snap_d_max = 10; // snap-to-rational stage
    std::optional<DtypeConstraint> dtype;
    std::string cache_dir;  // empty = no cache
    ESConfig es;
};

constexpr double kFitnessSentinel = 1e12;

// Float-arithmetic fitness of a continuous candidate; near-duplicate points
// (gap < 1e-6) or non-finite intermediates return the sentinel total.
FitnessBreakdown fitness(const std::vector<double>& points, int m, int r, double lambda1 = 0.001,
                         double lambda2 = 0.0001);

// Algorithm: per restart mu ~ N(0, 0.5 I); population mu + sigma*eps; elite =
// top 25% mean; sigma *= 1.1 if success rate > 0.2 else 0.9, clamped.
// Returns the best-fitness vector across restarts. Deterministic per seed.
std::vector<double> es_search(int m, int r, const ESConfig& cfg);

// Snap coordinates; on duplicates/verification failure enumerate neighborhood
// combinations (cap 1e5, seeded random subsample beyond) and take minimal
// kappa2(V) among valid configurations.
DiscoveryResult snap_and_verify(const std::vector<double>& points, int m, int r, int d_max = 10,
                                std::uint64_t seed = 42);

// Enumerate {0} + symmetric pairs (p, -p) from positive canonical rationals
// with denominator <= d_max and value <= 5, ascending; cap 1e6 combinations;
// minimal-kappa2 exactly verified configuration wins.
DiscoveryResult symmetric_search(int m, int r, int d_max = 6);

bool is_representable(const Rational& q, const DtypeConstraint& c);

// Nearest representable value to x under the constraint.
Rational nearest_representable(double x, const DtypeConstraint& c);

// ES with representability penalty (weight 0.1) and 30% representable-snapped
// offspring coordinates, final snap restricted to representable rationals;
// plus a representable symmetric enumeration stage. Best verified result wins.
DiscoveryResult dtype_aware_search(int m, int r, const DtypeConstraint& c, const ESConfig& cfg);

// mode: pipeline | es | symmetric | dtype_aware. Pipeline runs symmetric
// first and falls back to ES + snap. Results cached on disk when cache_dir is
// set, keyed by (m, r, mode, d_max, dtype, seed); hits are re-verified.
DiscoveryResult discover(int m, int r, const std::string& mode, const DiscoverOptions& opts);

struct ReproSummary {
    double mean_kappa = 0, std_kappa = 0, cv_percent = 0, min_kappa = 0, max_kappa = 0;
    std::vector<double> kappas;
    std::vector<std::uint64_t> seeds;
    std::vector<std::uint64_t> failed_seeds;
};

ReproSummary reproducibility_study(int m, int r, const std::vector<std::uint64_t>& seeds,
                                   const DiscoverOptions& base = {});

}  // namespace winokit
