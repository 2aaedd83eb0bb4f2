#include "winokit/discovery.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>

#include "winokit/rng.hpp"

namespace winokit {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

static double kappa2_points(const std::vector<double>& pts) {
    const int n = static_cast<int>(pts.size());
    Eigen::MatrixXd V(n, n);
    for (int i = 0; i < n; ++i) {
        double v = 1.0;
        for (int j = 0; j < n; ++j) {
            V(i, j) = v;
            v *= pts[i];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(V);
    const auto& s = svd.singularValues();
    if (s(n - 1) <= 1e-300) return std::numeric_limits<double>::infinity();
    return s(0) / s(n - 1);
}

static double kappa2_rational_points(const std::vector<Rational>& pts) {
    std::vector<double> d;
    d.reserve(pts.size());
    for (const auto& q : pts) d.push_back(to_double(q));
    return kappa2_points(d);
}

FitnessBreakdown fitness(const std::vector<double>& points, int m, int r, double lambda1,
                         double lambda2) {
    FitnessBreakdown fb;
    const int n = m + r - 1;
    const int nf = n - 1;
    auto sentinel = [&]() {
        fb.total = kFitnessSentinel;
        return fb;
    };
    if (static_cast<int>(points.size()) != nf) return sentinel();
    for (double p : points)
        if (!std::isfinite(p)) return sentinel();
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j)
            if (std::abs(points[i] - points[j]) < 1e-6) return sentinel();

    // float images of the exact construction formulas
    Eigen::MatrixXd AT = Eigen::MatrixXd::Zero(m, n);
    for (int i = 0; i < m; ++i) {
        for (int p = 0; p < nf; ++p) AT(i, p) = std::pow(points[p], i);
        if (i == m - 1) AT(i, n - 1) = 1.0;
    }
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, r);
    for (int p = 0; p < nf; ++p) {
        double F = 1.0;
        for (int j = 0; j < nf; ++j)
            if (j != p) F *= points[p] - points[j];
        if (std::abs(F) < 1e-12 || !std::isfinite(F)) return sentinel();
        for (int k = 0; k < r; ++k) G(p, k) = std::pow(points[p], k) / F;
    }
    G(n - 1, r - 1) = 1.0;

    Eigen::MatrixXd M(m * r, n), T = Eigen::MatrixXd::Zero(m * r, n);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < r; ++k) {
            for (int p = 0; p < n; ++p) M(i * r + k, p) = AT(i, p) * G(p, k);
            if (i + k < n) T(i * r + k, i + k) = 1.0;
        }
    Eigen::MatrixXd BT = M.colPivHouseholderQr().solve(T);
    if (!BT.allFinite()) return sentinel();
    fb.tensor_error = (M * BT - T).norm();

    double ss = 0;
    for (double p : points) ss += p * p;
    fb.magnitude_penalty = lambda1 * ss / nf;

    double kv = kappa2_points(points);
    fb.conditioning_penalty = lambda2 * std::log10(kv + 1.0);
    fb.total = fb.tensor_error + fb.magnitude_penalty + fb.conditioning_penalty;
    if (!std::isfinite(fb.total)) return sentinel();
    return fb;
}

std::vector<double> es_search(int m, int r, const ESConfig& cfg) {
    const int nf = m + r - 2;
    const int elite = std::max(1, static_cast<int>(cfg.population * cfg.elite_fraction));
    double best_f = std::numeric_limits<double>::infinity();
    std::vector<double> best_p(nf, 0.0);

    for (int rs = 0; rs < cfg.restarts; ++rs) {
        std::vector<double> mu(nf);
        {
            CounterRng init(cfg.seed, 0x1111, rs);
            for (int i = 0; i < nf; ++i) mu[i] = cfg.sigma_init * init.normal();
        }
        double sigma = cfg.sigma_init;
        double prev_best = std::numeric_limits<double>::infinity();
        for (int g = 0; g < cfg.generations; ++g) {
            std::vector<std::vector<double>> cand(cfg.population);
            std::vector<double> fit(cfg.population);
            for (int i = 0; i < cfg.population; ++i) {
                CounterRng rng(cfg.seed, rs + 1, g + 1, i + 1);
                cand[i].resize(nf);
                for (int d = 0; d < nf; ++d) cand[i][d] = mu[d] + sigma * rng.normal();
                fit[i] = fitness(cand[i], m, r, cfg.lambda1, cfg.lambda2).total;
            }
            std::vector<int> order(cfg.population);
            for (int i = 0; i < cfg.population; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return fit[a] < fit[b]; });
            std::fill(mu.begin(), mu.end(), 0.0);
            for (int e = 0; e < elite; ++e)
                for (int d = 0; d < nf; ++d) mu[d] += cand[order[e]][d] / elite;

            int successes = 0;
            for (int i = 0; i < cfg.population; ++i)
                if (fit[i] < prev_best) ++successes;
            double rate = static_cast<double>(successes) / cfg.population;
            sigma *= (rate > cfg.success_threshold) ? cfg.sigma_up : cfg.sigma_down;
            sigma = std::clamp(sigma, cfg.sigma_lo, cfg.sigma_hi);

            double gen_best = fit[order[0]];
            if (gen_best < best_f) {
                best_f = gen_best;
                best_p = cand[order[0]];
            }
            prev_best = std::min(prev_best, gen_best);
        }
    }
    return best_p;
}

static DiscoveryResult make_result(PointConfiguration cfg, const std::string& mode,
                                   std::uint64_t seed) {
    DiscoveryResult res;
    res.kappa2_v = kappa2_rational_points(cfg.finite_points);
    res.verified = verify_exact(construct_transforms(cfg), cfg.m, cfg.r).exact_zero;
    res.config = std::move(cfg);
    res.mode = mode;
    res.seed = seed;
    return res;
}

static bool all_distinct(const std::vector<Rational>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return false;
    return true;
}

// Pick the minimal-kappa exactly-verified combination from per-coordinate
// candidate lists; enumerates at most `cap` combinations.
static std::optional<PointConfiguration> best_combination(
    const std::vector<std::vector<Rational>>& cands, int m, int r, std::size_t cap,
    std::uint64_t seed) {
    const int nf = static_cast<int>(cands.size());
    double total = 1;
    for (const auto& c : cands) total *= static_cast<double>(c.size());

    std::vector<std::pair<double, std::vector<Rational>>> valid;
    auto consider = [&](const std::vector<Rational>& pts) {
        if (!all_distinct(pts)) return;
        double k = kappa2_rational_points(pts);
        if (!std::isfinite(k)) return;
        valid.emplace_back(k, pts);
    };

    if (total <= static_cast<double>(cap)) {
        std::vector<std::size_t> idx(nf, 0);
        std::vector<Rational> pts(nf);
        while (true) {
            for (int i = 0; i < nf; ++i) pts[i] = cands[i][idx[i]];
            consider(pts);
            int i = nf - 1;
            while (i >= 0 && ++idx[i] == cands[i].size()) idx[i--] = 0;
            if (i < 0) break;
        }
    } else {
        // space too large: seeded uniform subsample
        CounterRng rng(seed, 0x5a5a);
        std::vector<Rational> pts(nf);
        for (std::size_t s = 0; s < cap; ++s) {
            for (int i = 0; i < nf; ++i) pts[i] = cands[i][rng.below(cands[i].size())];
            consider(pts);
        }
    }
    std::sort(valid.begin(), valid.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, pts] : valid) {
        PointConfiguration cfg{m, r, pts};
        try {
            if (verify_exact(construct_transforms(cfg), m, r).exact_zero) return cfg;
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

DiscoveryResult snap_and_verify(const std::vector<double>& points, int m, int r, int d_max,
                                std::uint64_t seed) {
    auto t0 = Clock::now();
    std::vector<Rational> snapped;
    snapped.reserve(points.size());
    for (double x : points) snapped.push_back(snap_to_rational(x, d_max, 5));

    DiscoveryResult res;
    if (all_distinct(snapped)) {
        try {
            PointConfiguration cfg{m, r, snapped};
            res = make_result(cfg, "es", seed);
            res.provenance.push_back("snap: direct");
        } catch (const std::exception&) {
            res.verified = false;
        }
    }
    if (!res.verified) {
        std::vector<std::vector<Rational>> cands;
        for (double x : points) {
            auto c = rationals_within(x, 1.2, d_max);
            if (c.empty()) c.push_back(snap_to_rational(x, d_max, 5));
            cands.push_back(std::move(c));
        }
        auto cfg = best_combination(cands, m, r, 100000, seed);
        if (!cfg) throw std::runtime_error("snap_and_verify: no valid configuration found");
        res = make_result(*cfg, "es", seed);
        res.provenance.push_back("snap: neighborhood repair");
    }
    res.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

static std::vector<Rational> positive_rationals(int d_max, int limit = 5) {
    std::vector<Rational> out;
    for (int b = 1; b <= d_max; ++b)
        for (int a = 1; a <= limit * b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

static DiscoveryResult symmetric_from_candidates(int m, int r, const std::vector<Rational>& cands,
                                                 const std::string& mode) {
    auto t0 = Clock::now();
    const int nf = m + r - 2;
    const bool with_zero = (nf % 2 == 1);
    const int npairs = with_zero ? (nf - 1) / 2 : nf / 2;
    const std::size_t cap = 1000000;

    double best_k = std::numeric_limits<double>::infinity();
    std::vector<Rational> best_pts;
    std::size_t count = 0;

    std::vector<int> idx(npairs);
    for (int i = 0; i < npairs; ++i) idx[i] = i;
    std::vector<Rational> pts;
    if (npairs > static_cast<int>(cands.size()))
        throw std::runtime_error("symmetric_search: not enough candidates");
    bool more = npairs > 0;
    if (npairs == 0) {  // degenerate: only the zero point
        pts = {Rational(0)};
        best_k = kappa2_rational_points(pts);
        best_pts = pts;
    }
    while (more && count < cap) {
        pts.clear();
        if (with_zero) pts.push_back(Rational(0));
        for (int i = 0; i < npairs; ++i) {
            pts.push_back(cands[idx[i]]);
            pts.push_back(-cands[idx[i]]);
        }
        double k = kappa2_rational_points(pts);
        ++count;
        if (k < best_k) {
            best_k = k;
            best_pts = pts;
        }
        // next lexicographic combination
        int i = npairs - 1;
        while (i >= 0 && idx[i] == static_cast<int>(cands.size()) - npairs + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < npairs; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (best_pts.empty()) throw std::runtime_error("symmetric_search: no valid configuration");

    PointConfiguration cfg{m, r, best_pts};
    DiscoveryResult res = make_result(cfg, mode, 0);
    if (!res.verified) throw std::runtime_error("symmetric_search: best candidate failed verification");
    res.provenance.push_back("symmetric: " + std::to_string(count) + " combinations");
    res.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

DiscoveryResult symmetric_search(int m, int r, int d_max) {
    return symmetric_from_candidates(m, r, positive_rationals(d_max), "symmetric");
}

bool is_representable(const Rational& q, const DtypeConstraint& c) {
    BigInt n = num(q), d = den(q);
    auto pow2_exp = [](BigInt v) -> int {  // -1 when not a power of two
        int e = 0;
        while (v % 2 == 0) {
            v /= 2;
            ++e;
        }
        return v == 1 ? e : -1;
    };
    switch (c.kind) {
        case DtypeKind::float16:
            return pow2_exp(d) >= 0 && pow2_exp(d) <= 10 && abs(n) <= 2048;
        case DtypeKind::bfloat16:
            return pow2_exp(d) >= 0 && pow2_exp(d) <= 7 && abs(n) <= 256;
        case DtypeKind::int8: return d == 1 && n >= -128 && n <= 127;
    }
    return false;
}

Rational nearest_representable(double x, const DtypeConstraint& c) {
    if (c.kind == DtypeKind::int8) {
        long long a = std::llround(std::clamp(x, -128.0, 127.0));
        return Rational(a);
    }
    const int kmax = c.kind == DtypeKind::float16 ? 10 : 7;
    const long long nmax = c.kind == DtypeKind::float16 ? 2048 : 256;
    bool have = false;
    Rational best;
    double best_d = 0;
    for (int k = 0; k <= kmax; ++k) {
        double scale = std::ldexp(1.0, k);
        long long a = std::llround(x * scale);
        a = std::clamp(a, -nmax, nmax);
        Rational q(BigInt(a), BigInt(1) << k);
        double d = std::abs(x - to_double(q));
        if (!have || d < best_d) {
            have = true;
            best = q;
            best_d = d;
        }
    }
    return best;
}

static DiscoveryResult dtype_symmetric_stage(int m, int r, const DtypeConstraint& c) {
    std::vector<Rational> cands;
    if (c.kind == DtypeKind::int8) {
        for (int a = 1; a <= 5; ++a) cands.emplace_back(a);
    } else {
        for (int b : {1, 2, 4, 8})
            for (int a = 1; a <= 5 * b; ++a) {
                Rational q(a, b);
                if (den(q) == b && is_representable(q, c)) cands.push_back(q);
            }
        std::sort(cands.begin(), cands.end());
    }
    return symmetric_from_candidates(m, r, cands, "dtype_aware");
}

DiscoveryResult dtype_aware_search(int m, int r, const DtypeConstraint& c, const ESConfig& cfg) {
    auto t0 = Clock::now();
    const int nf = m + r - 2;
    const int elite = std::max(1, static_cast<int>(cfg.population * cfg.elite_fraction));

    auto repr_penalty = [&](const std::vector<double>& p) {
        double s = 0;
        for (double x : p) s += std::abs(x - to_double(nearest_representable(x, c)));
        return s / nf;
    };

    double best_f = std::numeric_limits<double>::infinity();
    std::vector<double> best_p(nf, 0.0);
    for (int rs = 0; rs < cfg.restarts; ++rs) {
        std::vector<double> mu(nf);
        {
            CounterRng init(cfg.seed, 0x2222, rs);
            for (int i = 0; i < nf; ++i) mu[i] = cfg.sigma_init * init.normal();
        }
        double sigma = cfg.sigma_init;
        double prev_best = std::numeric_limits<double>::infinity();
        for (int g = 0; g < cfg.generations; ++g) {
            std::vector<std::vector<double>> cand(cfg.population);
            std::vector<double> fit(cfg.population);
            for (int i = 0; i < cfg.population; ++i) {
                CounterRng rng(cfg.seed, rs + 1, g + 1, i + 1);
                cand[i].resize(nf);
                for (int d = 0; d < nf; ++d) {
                    double v = mu[d] + sigma * rng.normal();
                    // 30% of offspring coordinates snap to representable values
                    if (rng.next_double() < 0.3) v = to_double(nearest_representable(v, c));
                    cand[i][d] = v;
                }
                fit[i] = fitness(cand[i], m, r, cfg.lambda1, cfg.lambda2).total +
                         0.1 * repr_penalty(cand[i]);
            }
            std::vector<int> order(cfg.population);
            for (int i = 0; i < cfg.population; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return fit[a] < fit[b]; });
            std::fill(mu.begin(), mu.end(), 0.0);
            for (int e = 0; e < elite; ++e)
                for (int d = 0; d < nf; ++d) mu[d] += cand[order[e]][d] / elite;
            int successes = 0;
            for (int i = 0; i < cfg.population; ++i)
                if (fit[i] < prev_best) ++successes;
            sigma *= (static_cast<double>(successes) / cfg.population > cfg.success_threshold)
                         ? cfg.sigma_up
                         : cfg.sigma_down;
            sigma = std::clamp(sigma, cfg.sigma_lo, cfg.sigma_hi);
            if (fit[order[0]] < best_f) {
                best_f = fit[order[0]];
                best_p = cand[order[0]];
            }
            prev_best = std::min(prev_best, fit[order[0]]);
        }
    }

    // final snap restricted to representable rationals
    std::optional<DiscoveryResult> es_result;
    {
        std::vector<std::vector<Rational>> cands;
        for (double x : best_p) {
            std::vector<Rational> cs{nearest_representable(x, c)};
            for (int k = 2; k <= 3; ++k)
                for (long long off = -4; off <= 4; ++off) {
                    long long a = std::llround(x * (1 << k)) + off;
                    Rational q(BigInt(a), BigInt(1) << k);
                    if (is_representable(q, c) && std::find(cs.begin(), cs.end(), q) == cs.end())
                        cs.push_back(q);
                }
            cands.push_back(std::move(cs));
        }
        auto cfg_opt = best_combination(cands, m, r, 100000, cfg.seed);
        if (cfg_opt) {
            es_result = make_result(*cfg_opt, "dtype_aware", cfg.seed);
            es_result->provenance.push_back("dtype: es + representable snap");
        }
    }

    std::optional<DiscoveryResult> sym_result;
    try {
        sym_result = dtype_symmetric_stage(m, r, c);
        sym_result->seed = cfg.seed;
        sym_result->provenance.push_back("dtype: representable symmetric enumeration");
    } catch (const std::exception&) {
    }

    DiscoveryResult res;
    if (es_result && (!sym_result || es_result->kappa2_v <= sym_result->kappa2_v)) {
        res = *es_result;
        if (sym_result)
            res.provenance.push_back("dtype: symmetric stage kappa " +
                                     std::to_string(sym_result->kappa2_v));
    } else if (sym_result) {
        res = *sym_result;
        if (es_result)
            res.provenance.push_back("dtype: es stage kappa " +
                                     std::to_string(es_result->kappa2_v));
    } else {
        throw std::runtime_error("dtype_aware_search: no valid configuration found");
    }
    res.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

// ---- cache ----

static json result_to_json(const DiscoveryResult& r) {
    json j;
    j["tile"] = {{"m", r.config.m}, {"r", r.config.r}};
    json pts = json::array();
    for (const auto& p : r.config.finite_points) pts.push_back(to_string(p));
    j["points"] = pts;
    j["kappa2_v"] = r.kappa2_v;
    j["verified"] = r.verified;
    j["mode"] = r.mode;
    j["seed"] = r.seed;
    j["runtime_seconds"] = r.runtime_seconds;
    j["provenance"] = r.provenance;
    return j;
}

static DiscoveryResult result_from_json(const json& j) {
    DiscoveryResult r;
    r.config.m = j.at("tile").at("m").get<int>();
    r.config.r = j.at("tile").at("r").get<int>();
    for (const auto& s : j.at("points")) r.config.finite_points.push_back(parse_rational(s));
    r.kappa2_v = j.at("kappa2_v").get<double>();
    r.verified = j.at("verified").get<bool>();
    r.mode = j.at("mode").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.runtime_seconds = j.value("runtime_seconds", 0.0);
    r.provenance = j.value("provenance", std::vector<std::string>{});
    return r;
}

static fs::path cache_path(const std::string& dir, int m, int r, const std::string& mode,
                           const DiscoverOptions& o) {
    std::string dtype = "none";
    if (o.dtype) {
        switch (o.dtype->kind) {
            case DtypeKind::float16: dtype = "float16"; break;
            case DtypeKind::bfloat16: dtype = "bfloat16"; break;
            case DtypeKind::int8: dtype = "int8"; break;
        }
    }
    return fs::path(dir) / ("discover_m" + std::to_string(m) + "_r" + std::to_string(r) + "_" +
                            mode + "_d" + std::to_string(o.d_max) + "_" + dtype + "_s" +
                            std::to_string(o.seed) + ".json");
}

static void cache_store(const fs::path& p, const DiscoveryResult& r) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream f(tmp);
        f << result_to_json(r).dump(2) << "\n";
    }
    fs::rename(tmp, p, ec);  // atomic publish
}

DiscoveryResult discover(int m, int r, const std::string& mode, const DiscoverOptions& opts) {
    if (m < 1 || r < 1 || m + r - 2 > 12)
        throw std::invalid_argument("discover: unsupported tile (n-1 must be <= 12)");
    auto t0 = Clock::now();

    std::vector<std::string> pre_provenance;
    fs::path cpath;
    if (!opts.cache_dir.empty()) {
        cpath = cache_path(opts.cache_dir, m, r, mode, opts);
        if (fs::exists(cpath)) {
            try {
                std::ifstream f(cpath);
                DiscoveryResult cached = result_from_json(json::parse(f));
                if (cached.config.m == m && cached.config.r == r &&
                    verify_exact(construct_transforms(cached.config), m, r).exact_zero) {
                    cached.provenance.push_back("cache-hit");
                    return cached;
                }
                pre_provenance.push_back("cache entry failed re-verification; re-running");
            } catch (const std::exception&) {
                pre_provenance.push_back("cache entry corrupt; re-running");
            }
        }
    }

    DiscoveryResult res;
    if (mode == "symmetric") {
        res = symmetric_search(m, r, opts.d_max);
        res.seed = opts.seed;
    } else if (mode == "es") {
        ESConfig es = opts.es;
        es.seed = opts.seed;
        auto pts = es_search(m, r, es);
        res = snap_and_verify(pts, m, r, opts.snap_d_max, opts.seed);
    } else if (mode == "dtype_aware") {
        if (!opts.dtype) throw std::invalid_argument("discover: dtype_aware needs a constraint");
        ESConfig es = opts.es;
        es.seed = opts.seed;
        res = dtype_aware_search(m, r, *opts.dtype, es);
    } else if (mode == "pipeline") {
        std::optional<DiscoveryResult> sym;
        try {
            sym = symmetric_search(m, r, opts.d_max);
        } catch (const std::exception& e) {
            pre_provenance.push_back(std::string("symmetric stage failed: ") + e.what());
        }
        if (sym) {
            res = *sym;
            res.seed = opts.seed;
        } else {
            ESConfig es = opts.es;
            es.seed = opts.seed;
            auto pts = es_search(m, r, es);
            res = snap_and_verify(pts, m, r, opts.snap_d_max, opts.seed);
            res.provenance.push_back("pipeline: es fallback");
        }
        res.mode = "pipeline";
    } else {
        throw std::invalid_argument("discover: unknown mode " + mode);
    }

    res.provenance.insert(res.provenance.begin(), pre_provenance.begin(), pre_provenance.end());
    res.runtime_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!cpath.empty()) cache_store(cpath, res);
    return res;
}

ReproSummary reproducibility_study(int m, int r, const std::vector<std::uint64_t>& seeds,
                                   const DiscoverOptions& base) {
    if (seeds.size() < 2) throw std::invalid_argument("reproducibility_study: need >= 2 seeds");
    ReproSummary s;
    for (auto seed : seeds) {
        DiscoverOptions o = base;
        o.seed = seed;
        o.cache_dir.clear();
        try {
            auto res = discover(m, r, "es", o);
            s.kappas.push_back(res.kappa2_v);
            s.seeds.push_back(seed);
        } catch (const std::exception&) {
            s.failed_seeds.push_back(seed);
        }
    }
    if (s.kappas.empty()) throw std::runtime_error("reproducibility_study: all seeds failed");
    double sum = 0;
    for (double k : s.kappas) sum += k;
    s.mean_kappa = sum / s.kappas.size();
    double ss = 0;
    for (double k : s.kappas) ss += (k - s.mean_kappa) * (k - s.mean_kappa);
    s.std_kappa = std::sqrt(ss / s.kappas.size());
    s.cv_percent = s.mean_kappa != 0 ? 100.0 * s.std_kappa / s.mean_kappa : 0.0;
    s.min_kappa = *std::min_element(s.kappas.begin(), s.kappas.end());
    s.max_kappa = *std::max_element(s.kappas.begin(), s.kappas.end());
    return s;
}

}  // namespace winokit
