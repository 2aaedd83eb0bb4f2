#include "doctest.h"
#include "winokit/discovery.hpp"
#include "winokit/rational.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace winokit;

static std::vector<Rational> pts(std::initializer_list<const char*> lits) {
    std::vector<Rational> out;
    for (const char* s : lits) out.push_back(parse_rational(s));
    return out;
}

TEST_CASE("fitness of exact configurations is tiny") {
    auto fb = fitness({0, 1, -1, 2, -2}, 4, 3);
    CHECK(fb.tensor_error < 1e-9);
    CHECK(fb.total < 0.02);
    auto fd = fitness({0, 5.0 / 6, -5.0 / 6, 7.0 / 6, -7.0 / 6}, 4, 3);
    CHECK(fd.tensor_error < 1e-9);
    CHECK(fd.total < fb.total);  // smaller magnitudes + better conditioning
}

TEST_CASE("fitness sentinel cases") {
    CHECK(fitness({0, 1, 1 + 1e-8, 2, -2}, 4, 3).total == kFitnessSentinel);
    CHECK(fitness({0, 1, -1}, 4, 3).total == kFitnessSentinel);  // wrong arity
    CHECK(fitness({0, 1, std::nan(""), 2, -2}, 4, 3).total == kFitnessSentinel);
}

TEST_CASE("fitness lambda monotonicity") {
    std::vector<double> p{0, 1, -1, 2, -2};
    double base = fitness(p, 4, 3, 0.001, 0.0001).total;
    CHECK(fitness(p, 4, 3, 0.01, 0.0001).total > base);
    CHECK(fitness(p, 4, 3, 0.001, 0.001).total > base);
}

TEST_CASE("es_search deterministic per seed") {
    ESConfig cfg;
    cfg.population = 12;
    cfg.generations = 8;
    cfg.restarts = 1;
    cfg.seed = 7;
    auto a = es_search(2, 3, cfg);
    auto b = es_search(2, 3, cfg);
    CHECK(a == b);
    cfg.seed = 8;
    CHECK(es_search(2, 3, cfg) != a);
}

TEST_CASE("es_search finds near-exact candidates") {
    ESConfig cfg;
    cfg.seed = 42;
    auto p = es_search(2, 3, cfg);
    CHECK(fitness(p, 2, 3).tensor_error < 1e-6);
}

TEST_CASE("snap_and_verify recovers the discovered F(4,3) set") {
    auto res = snap_and_verify({0.0, 0.8333, -0.8333, 1.1667, -1.1667}, 4, 3, 10, 42);
    CHECK(res.verified);
    std::vector<Rational> got = res.config.finite_points;
    std::sort(got.begin(), got.end());
    std::vector<Rational> want = pts({"-7/6", "-5/6", "0", "5/6", "7/6"});
    CHECK(got == want);
    CHECK(res.kappa2_v == doctest::Approx(14.5456).epsilon(0.001));
}

TEST_CASE("snap_and_verify repairs duplicate snaps") {
    // both middle values snap to 1 directly; repair must separate them
    auto res = snap_and_verify({0.0, 0.999, 1.001}, 2, 3, 10, 42);
    CHECK(res.verified);
    CHECK(res.config.finite_points.size() == 3);
}

TEST_CASE("symmetric_search matches known optima") {
    auto r43 = symmetric_search(4, 3, 6);
    CHECK(r43.verified);
    CHECK(r43.kappa2_v == doctest::Approx(14.5456).epsilon(0.001));

    auto r63 = symmetric_search(6, 3, 6);
    CHECK(r63.kappa2_v == doctest::Approx(76.6387).epsilon(0.001));

    auto r83 = symmetric_search(8, 3, 6);
    CHECK(r83.kappa2_v == doctest::Approx(474.101).epsilon(0.001));
}

TEST_CASE("is_representable") {
    DtypeConstraint fp16{DtypeKind::float16};
    DtypeConstraint bf16{DtypeKind::bfloat16};
    DtypeConstraint i8{DtypeKind::int8};
    CHECK(is_representable(Rational(3, 4), fp16));
    CHECK(is_representable(Rational(-7, 8), fp16));
    CHECK_FALSE(is_representable(Rational(5, 6), fp16));
    CHECK(is_representable(Rational(1, 1024), fp16));
    CHECK_FALSE(is_representable(Rational(1, 2048), fp16));
    CHECK(is_representable(Rational(1, 128), bf16));
    CHECK_FALSE(is_representable(Rational(1, 256), bf16));
    CHECK(is_representable(Rational(-128), i8));
    CHECK(is_representable(Rational(127), i8));
    CHECK_FALSE(is_representable(Rational(128), i8));
    CHECK_FALSE(is_representable(Rational(-2, 129), i8));
}

TEST_CASE("nearest_representable") {
    DtypeConstraint fp16{DtypeKind::float16};
    CHECK(nearest_representable(0.75, fp16) == Rational(3, 4));
    double x = 5.0 / 6.0;
    Rational q = nearest_representable(x, fp16);
    CHECK(is_representable(q, fp16));
    CHECK(std::abs(to_double(q) - x) < 1e-3);
    DtypeConstraint i8{DtypeKind::int8};
    CHECK(nearest_representable(2.4, i8) == Rational(2));
    CHECK(nearest_representable(200.0, i8) == Rational(127));
}

TEST_CASE("dtype_aware_search F(4,3) fp16") {
    ESConfig cfg;
    cfg.seed = 42;
    DtypeConstraint fp16{DtypeKind::float16};
    auto res = dtype_aware_search(4, 3, fp16, cfg);
    CHECK(res.verified);
    for (const auto& p : res.config.finite_points) CHECK(is_representable(p, fp16));
    CHECK(res.kappa2_v < 17.0);
}

TEST_CASE("discover pipeline and cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "winokit_cache_test";
    fs::remove_all(dir);

    DiscoverOptions opts;
    opts.cache_dir = dir.string();
    auto first = discover(4, 3, "pipeline", opts);
    CHECK(first.verified);
    CHECK(first.kappa2_v == doctest::Approx(14.5456).epsilon(0.001));

    auto second = discover(4, 3, "pipeline", opts);
    CHECK(second.config.finite_points == first.config.finite_points);
    bool hit = false;
    for (const auto& s : second.provenance) hit |= s == "cache-hit";
    CHECK(hit);

    // corrupt entry falls back to a fresh run and records it
    bool corrupted = false;
    for (const auto& e : fs::directory_iterator(dir)) {
        std::ofstream f(e.path());
        f << "{not json";
        corrupted = true;
    }
    CHECK(corrupted);
    auto third = discover(4, 3, "pipeline", opts);
    CHECK(third.verified);
    bool warned = false;
    for (const auto& s : third.provenance) warned |= s.find("corrupt") != std::string::npos;
    CHECK(warned);
    fs::remove_all(dir);
}

TEST_CASE("discover rejects bad input") {
    DiscoverOptions opts;
    CHECK_THROWS_AS(discover(4, 3, "bogus", opts), std::invalid_argument);
    CHECK_THROWS_AS(discover(12, 8, "symmetric", opts), std::invalid_argument);
    CHECK_THROWS_AS(discover(4, 3, "dtype_aware", opts), std::invalid_argument);
}

TEST_CASE("reproducibility study") {
    DiscoverOptions opts;
    opts.es.population = 20;
    opts.es.generations = 20;
    opts.es.restarts = 1;
    auto s = reproducibility_study(2, 3, {1, 2, 3}, opts);
    CHECK(s.kappas.size() == 3);
    CHECK(s.mean_kappa > 0);
    CHECK(s.min_kappa <= s.max_kappa);
    CHECK(s.cv_percent >= 0);
    CHECK_THROWS_AS(reproducibility_study(2, 3, {1}, opts), std::invalid_argument);
}
