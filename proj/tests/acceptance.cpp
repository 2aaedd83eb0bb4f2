// Acceptance gate: 12 numbered criteria, one PASS/FAIL line each.
// Run all with no arguments, or a single one with --criterion N.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "winokit/catalog.hpp"
#include "winokit/conditioning.hpp"
#include "winokit/cooktoom.hpp"
#include "winokit/discovery.hpp"
#include "winokit/lowprec.hpp"
#include "winokit/rng.hpp"

using namespace winokit;
using Clock = std::chrono::steady_clock;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void within(double got, double want, double rel, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: got %.6g want %.6g (+/-%g%%)", what.c_str(), got,
                      want, rel * 100);
        expect(std::isfinite(got) && std::abs(got - want) <= rel * std::abs(want), buf);
    }
};

double kappa_v(const std::string& name) {
    auto e = *catalog_lookup(name);
    return kappa(to_float64(build_vandermonde(e.config.finite_points, e.config.n() - 1)),
                 Norm::two);
}

// 1: kappa2(V) regression, standard points, within 2%, < 1 s
void crit1(Checker& c) {
    auto t0 = Clock::now();
    c.within(kappa_v("std-F23"), 3.2, 0.02, "F(2,3) std");
    c.within(kappa_v("std-F43"), 42.5, 0.02, "F(4,3) std");
    c.within(kappa_v("std-F63"), 2075, 0.02, "F(6,3) std");
    c.within(kappa_v("std-F83"), 1.969e5, 0.02, "F(8,3) std");
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s >= 1s");
}

// 2: kappa2(V) regression, discovered points, within 2%, < 1 s
void crit2(Checker& c) {
    auto t0 = Clock::now();
    c.within(kappa_v("disc-F23"), 3.2, 0.02, "F(2,3) disc");
    c.within(kappa_v("disc-F43"), 14.5, 0.02, "F(4,3) disc");
    c.within(kappa_v("disc-F63"), 77, 0.02, "F(6,3) disc");
    c.within(kappa_v("disc-F83"), 474, 0.02, "F(8,3) disc");
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s >= 1s");
}

// 3: exact verification of every catalog configuration, < 30 s total
void crit3(Checker& c) {
    auto t0 = Clock::now();
    for (const auto& e : catalog()) {
        auto rep = verify_exact(construct_transforms(e.config), e.config.m, e.config.r);
        c.expect(rep.exact_zero && rep.max_residual == 0, e.name + " residual nonzero");
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 30.0, "runtime " + std::to_string(secs) + "s >= 30s");
}

// 4: discovery reproduces the reference configurations / thresholds, <= 2 min per tile
void crit4(Checker& c) {
    auto sym = symmetric_search(4, 3, 6);
    std::vector<Rational> got = sym.config.finite_points;
    std::sort(got.begin(), got.end());
    std::vector<Rational> want{{-7, 6}, {-5, 6}, {0}, {5, 6}, {7, 6}};
    c.expect(got == want, "F(4,3) symmetric points differ");

    const std::vector<std::tuple<int, int, double>> caps{
        {4, 3, 15.0}, {6, 3, 85.0}, {8, 3, 520.0}, {4, 5, 200.0}, {6, 5, 2200.0}};
    for (auto [m, r, cap] : caps) {
        auto t0 = Clock::now();
        DiscoverOptions opts;
        auto res = discover(m, r, "pipeline", opts);
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        char tag[64];
        std::snprintf(tag, sizeof tag, "F(%d,%d) pipeline", m, r);
        c.expect(res.verified, std::string(tag) + " unverified");
        c.expect(res.kappa2_v <= cap,
                 std::string(tag) + " kappa " + std::to_string(res.kappa2_v) + " > cap");
        c.expect(secs <= 120.0, std::string(tag) + " runtime " + std::to_string(secs) + "s");
    }
}

// 5: ES reproducibility over seeds
void crit5(Checker& c) {
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
    DiscoverOptions base;

    // F(4,3): identical snapped configurations across all seeds
    std::vector<std::vector<Rational>> configs;
    for (auto s : seeds) {
        DiscoverOptions o = base;
        o.seed = s;
        auto res = discover(4, 3, "es", o);
        auto pts = res.config.finite_points;
        std::sort(pts.begin(), pts.end());
        configs.push_back(pts);
    }
    for (std::size_t i = 1; i < configs.size(); ++i)
        c.expect(configs[i] == configs[0],
                 "F(4,3) seed " + std::to_string(seeds[i]) + " snapped config differs");

    for (auto [m, r] : {std::pair{6, 3}, {8, 3}}) {
        auto s = reproducibility_study(m, r, seeds, base);
        char buf[96];
        std::snprintf(buf, sizeof buf, "F(%d,%d) CV %.2f%% > 5%%", m, r, s.cv_percent);
        c.expect(s.failed_seeds.empty(), "seeds failed");
        c.expect(s.cv_percent <= 5.0, buf);
    }
}

// 6: Kronecker squaring identity and 2D report values
void crit6(Checker& c) {
    for (const char* name : {"disc-F43", "disc-F63", "std-F43", "std-F63"}) {
        auto e = *catalog_lookup(name);
        auto t = construct_transforms(e.config);
        Grid V = to_float64(build_vandermonde(e.config.finite_points, e.config.n() - 1));
        for (auto [g, tag] : {std::pair<Grid, const char*>{V, "V"},
                              {to_float64(t.at), "AT"},
                              {to_float64(t.g), "G"}}) {
            double ratio = verify_kron_squaring(g);
            c.expect(std::abs(ratio - 1.0) <= 1e-6,
                     std::string(name) + " " + tag + " kron ratio off by " +
                         std::to_string(ratio - 1.0));
        }
    }
    c.within(analyze(catalog_lookup("disc-F63")->config).kappa_v_2d, 5873, 0.03,
             "disc F(6,3) 2D");
    c.within(analyze(catalog_lookup("std-F63")->config).kappa_v_2d, 2074.51 * 2074.51, 0.03,
             "std F(6,3) 2D");
}

// 7: transform-matrix conditioning table and norm products
void crit7(Checker& c) {
    struct Row {
        const char* std_name;
        const char* disc_name;
        double a_std, a_disc, b_std, b_disc, g_std, g_disc;
    };
    const Row rows[] = {
        {"std-F43", "disc-F43", 11.3, 4.3, 20.1, 10.4, 4.0, 2.3},
        {"std-F63", "disc-F63", 406, 19, 430, 56, 26, 3.1},
        {"std-F83", "disc-F83", 30300, 112, 16800, 242, 355, 3.3},
    };
    for (const auto& row : rows) {
        auto rs = analyze(catalog_lookup(row.std_name)->config);
        auto rd = analyze(catalog_lookup(row.disc_name)->config);
        c.within(rs.kappa_at.two, row.a_std, 0.05, std::string(row.std_name) + " kA");
        c.within(rd.kappa_at.two, row.a_disc, 0.05, std::string(row.disc_name) + " kA");
        c.within(rs.kappa_bt.two, row.b_std, 0.05, std::string(row.std_name) + " kB");
        c.within(rd.kappa_bt.two, row.b_disc, 0.05, std::string(row.disc_name) + " kB");
        c.within(rs.kappa_g.two, row.g_std, 0.05, std::string(row.std_name) + " kG");
        c.within(rd.kappa_g.two, row.g_disc, 0.05, std::string(row.disc_name) + " kG");
    }
    c.within(analyze(catalog_lookup("std-F63")->config).norm_product, 1.2e4, 0.05,
             "std F(6,3) norm product");
    c.within(analyze(catalog_lookup("disc-F63")->config).norm_product, 89, 0.05,
             "disc F(6,3) norm product");
}

// 8: Chebyshev baseline values and discovered superiority
void crit8(Checker& c) {
    const std::vector<std::tuple<const char*, int, double>> rows{
        {"disc-F43", 5, 15.9}, {"disc-F63", 7, 87.0}, {"disc-F83", 9, 493.0}};
    for (auto [name, nf, want] : rows) {
        auto cheb = chebyshev_baseline(nf);
        c.within(cheb.best_kappa2, want, 0.03, std::string("chebyshev n-1=") + std::to_string(nf));
        c.expect(kappa_v(name) < cheb.best_kappa2, std::string(name) + " does not beat chebyshev");
    }
}

// 9: INT8 tile error bands (100 samples, per-tensor, fixed seed)
void crit9(Checker& c) {
    const QuantSpec spec{Precision::int8, Granularity::per_tensor};
    const std::uint64_t seed = 42;
    auto s43 = measure_tile_error(catalog_lookup("std-F43")->config, spec, 100, seed);
    auto d43 = measure_tile_error(catalog_lookup("disc-F43")->config, spec, 100, seed);
    c.expect(s43.mean_rel_l2 >= 0.04 && s43.mean_rel_l2 <= 0.12,
             "F(4,3) std mean " + std::to_string(s43.mean_rel_l2) + " outside [0.04, 0.12]");
    c.expect(d43.mean_rel_l2 >= 0.01 && d43.mean_rel_l2 <= 0.04,
             "F(4,3) disc mean " + std::to_string(d43.mean_rel_l2) + " outside [0.01, 0.04]");
    c.expect(s43.mean_rel_l2 / d43.mean_rel_l2 >= 2.5,
             "F(4,3) improvement " + std::to_string(s43.mean_rel_l2 / d43.mean_rel_l2) + " < 2.5");
    auto s63 = measure_tile_error(catalog_lookup("std-F63")->config, spec, 100, seed);
    auto d63 = measure_tile_error(catalog_lookup("disc-F63")->config, spec, 100, seed);
    c.expect(s63.mean_rel_l2 > 1.0, "F(6,3) std mean " + std::to_string(s63.mean_rel_l2) + " <= 1");
    c.expect(d63.mean_rel_l2 < 0.25,
             "F(6,3) disc mean " + std::to_string(d63.mean_rel_l2) + " >= 0.25");
}

// 10: FP16 tile error bands for F(6,3)
void crit10(Checker& c) {
    const QuantSpec spec{Precision::fp16, Granularity::per_tensor};
    auto s = measure_tile_error(catalog_lookup("std-F63")->config, spec, 100, 42);
    auto d = measure_tile_error(catalog_lookup("disc-F63")->config, spec, 100, 42);
    c.expect(d.mean_rel_l2 < s.mean_rel_l2, "discovered not better");
    c.expect(s.mean_rel_l2 / d.mean_rel_l2 >= 1.5,
             "ratio " + std::to_string(s.mean_rel_l2 / d.mean_rel_l2) + " < 1.5");
    for (auto [rep, tag] : {std::pair<const TileErrorReport&, const char*>{s, "std"}, {d, "disc"}})
        c.expect(rep.mean_rel_l2 >= 2e-4 && rep.mean_rel_l2 <= 3e-3,
                 std::string("F(6,3) ") + tag + " mean " + std::to_string(rep.mean_rel_l2) +
                     " outside [2e-4, 3e-3]");
}

// 11: dtype-aware search returns dyadic, well-conditioned, fp16-exact points
void crit11(Checker& c) {
    ESConfig cfg;
    cfg.seed = 42;
    DtypeConstraint fp16{DtypeKind::float16};
    auto res = dtype_aware_search(4, 3, fp16, cfg);
    c.expect(res.verified, "unverified");
    c.expect(res.kappa2_v <= 16.0, "kappa " + std::to_string(res.kappa2_v) + " > 16");
    for (const auto& p : res.config.finite_points) {
        c.expect(is_representable(p, fp16), to_string(p) + " not dyadic-representable");
        double x = to_double(p);
        c.expect(round_fp16(x) == x, to_string(p) + " does not survive fp16 round-trip");
    }
}

// 12: property suite
void crit12(Checker& c) {
    // exact-core field laws
    CounterRng rng(314);
    for (int t = 0; t < 100; ++t) {
        auto draw = [&]() {
            return Rational(static_cast<long long>(rng.below(41)) - 20,
                            1 + static_cast<long long>(rng.below(12)));
        };
        Rational a = draw(), b = draw(), x = draw();
        c.expect((a + b) * x == a * x + b * x, "distributivity");
        if (a != 0) c.expect(a / a == 1, "inverse");
    }
    // exact_solve round-trip
    for (int n = 2; n <= 6; ++n) {
        RationalMatrix A(n, n), B(n, n);
        bool done = false;
        while (!done) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    A(i, j) = Rational(static_cast<long long>(rng.below(19)) - 9,
                                       1 + static_cast<long long>(rng.below(4)));
                    B(i, j) = Rational(static_cast<long long>(rng.below(19)) - 9);
                }
            try {
                c.expect(matmul(A, exact_solve(A, B)) == B, "exact_solve round-trip");
                done = true;
            } catch (const std::domain_error&) {
            }
        }
    }
    // construct-then-verify over random distinct rational point sets
    int done = 0;
    while (done < 200) {
        int m = 2 + static_cast<int>(rng.below(5));
        int r = 2 + static_cast<int>(rng.below(3));
        int nf = m + r - 2;
        if (nf > 9) continue;
        std::vector<Rational> p;
        while (static_cast<int>(p.size()) < nf) {
            Rational q(static_cast<long long>(rng.below(21)) - 10,
                       1 + static_cast<long long>(rng.below(6)));
            if (std::find(p.begin(), p.end(), q) == p.end()) p.push_back(q);
        }
        c.expect(verify_exact(construct_transforms({m, r, p}), m, r).exact_zero,
                 "random construct/verify");
        ++done;
    }
    // full-precision oracle agreement
    for (const char* name : {"std-F43", "disc-F63"}) {
        auto e = *catalog_lookup(name);
        auto t = construct_transforms(e.config);
        auto A = to_float64(t.at), G = to_float64(t.g), B = to_float64(t.bt);
        const int n = e.config.n(), r = e.config.r, m = e.config.m;
        Grid tile(n, std::vector<double>(n)), ker(r, std::vector<double>(r));
        for (auto& row : tile)
            for (auto& v : row) v = rng.uniform(-1, 1);
        for (auto& row : ker)
            for (auto& v : row) v = rng.uniform(-1, 1);
        Grid y = winograd_apply_2d(A, G, B, ker, tile);
        Grid ref = direct_conv2d_f64(tile, ker, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                c.expect(std::abs(y[i][j] - ref[i][j]) <=
                             1e-10 * std::max(1.0, std::abs(ref[i][j])),
                         std::string(name) + " oracle mismatch");
    }
    // quantizer half-step bound
    Grid t(5, std::vector<double>(5));
    for (auto& row : t)
        for (auto& v : row) v = rng.uniform(-4, 4);
    double mx = 0;
    for (auto& row : t)
        for (auto& v : row) mx = std::max(mx, std::abs(v));
    Grid q = quantize_int8(t, Granularity::per_tensor);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            c.expect(std::abs(q[i][j] - t[i][j]) <= 0.5 * mx / 127.0 + 1e-15,
                     "quantizer half-step bound");
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    const std::map<int, std::pair<const char*, std::function<void(Checker&)>>> criteria{
        {1, {"standard-point kappa regression", crit1}},
        {2, {"discovered-point kappa regression", crit2}},
        {3, {"exact verification of catalog", crit3}},
        {4, {"discovery thresholds per tile", crit4}},
        {5, {"seeded search reproducibility", crit5}},
        {6, {"kronecker squaring / 2D values", crit6}},
        {7, {"transform conditioning + norm products", crit7}},
        {8, {"chebyshev baseline comparison", crit8}},
        {9, {"int8 tile error bands", crit9}},
        {10, {"fp16 tile error bands", crit10}},
        {11, {"dtype-aware discovery", crit11}},
        {12, {"property suite", crit12}},
    };

    int failures = 0;
    for (const auto& [id, entry] : criteria) {
        if (only != 0 && id != only) continue;
        Checker c;
        try {
            entry.second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %2d [%s] %s%s%s\n", id, c.ok ? "PASS" : "FAIL", entry.first,
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
