#include "doctest.h"
#include "winokit/catalog.hpp"
#include "winokit/conditioning.hpp"
#include "winokit/rng.hpp"

using namespace winokit;

static Grid grid_identity(int n) {
    Grid g(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) g[i][i] = 1.0;
    return g;
}

TEST_CASE("kappa identity") {
    for (auto norm : {Norm::one, Norm::two, Norm::inf, Norm::fro}) {
        double k = kappa(grid_identity(4), norm);
        if (norm == Norm::fro)
            CHECK(k == doctest::Approx(4.0));  // ||I||_F ||I||_F = n
        else
            CHECK(k == doctest::Approx(1.0));
    }
}

TEST_CASE("kappa2 of catalog Vandermonde matrices") {
    auto kv = [](const char* name) {
        auto e = *catalog_lookup(name);
        int nf = e.config.n() - 1;
        return kappa(to_float64(build_vandermonde(e.config.finite_points, nf)), Norm::two);
    };
    CHECK(kv("std-F43") == doctest::Approx(42.5).epsilon(0.02));
    CHECK(kv("disc-F63") == doctest::Approx(77).epsilon(0.02));
    CHECK(kv("std-F83") == doctest::Approx(1.969e5).epsilon(0.02));
}

TEST_CASE("kappa shape error for non-2-norms") {
    Grid rect(2, std::vector<double>(3, 1.0));
    CHECK_THROWS_AS(kappa(rect, Norm::one), std::invalid_argument);
    CHECK(std::isfinite(kappa(rect, Norm::two)));
}

TEST_CASE("analyze abg conditioning") {
    auto rep_std = analyze(catalog_lookup("std-F63")->config);
    CHECK(rep_std.kappa_v.two == doctest::Approx(2075).epsilon(0.02));
    CHECK(rep_std.kappa_at.two == doctest::Approx(406).epsilon(0.05));
    CHECK(rep_std.kappa_bt.two == doctest::Approx(430).epsilon(0.05));
    CHECK(rep_std.kappa_g.two == doctest::Approx(26).epsilon(0.05));
    CHECK(rep_std.kappa_v_2d == doctest::Approx(2074.51 * 2074.51).epsilon(0.01));

    auto rep_disc = analyze(catalog_lookup("disc-F63")->config);
    CHECK(rep_disc.kappa_v.two == doctest::Approx(76.64).epsilon(0.02));
    CHECK(rep_disc.kappa_v_2d == doctest::Approx(5873).epsilon(0.03));
}

TEST_CASE("analyze identical std/disc for F(2,3)") {
    auto a = analyze(catalog_lookup("std-F23")->config);
    auto b = analyze(catalog_lookup("disc-F23")->config);
    CHECK(a.kappa_v.two == b.kappa_v.two);
    CHECK(a.norm_product == b.norm_product);
}

TEST_CASE("kron squaring ratio") {
    CHECK(verify_kron_squaring(grid_identity(3)) == doctest::Approx(1.0).epsilon(1e-9));
    Grid d(2, std::vector<double>(2, 0.0));
    d[0][0] = 1;
    d[1][1] = 10;
    CHECK(verify_kron_squaring(d) == doctest::Approx(1.0).epsilon(1e-9));
    for (const char* name : {"std-F43", "disc-F63"}) {
        auto e = *catalog_lookup(name);
        auto t = construct_transforms(e.config);
        int nf = e.config.n() - 1;
        Grid V = to_float64(build_vandermonde(e.config.finite_points, nf));
        CHECK(std::abs(verify_kron_squaring(V) - 1.0) < 1e-6);
        CHECK(std::abs(verify_kron_squaring(to_float64(t.at)) - 1.0) < 1e-6);
        CHECK(std::abs(verify_kron_squaring(to_float64(t.g)) - 1.0) < 1e-6);
    }
}

TEST_CASE("chebyshev baseline kappa targets") {
    CHECK(chebyshev_baseline(5).best_kappa2 == doctest::Approx(15.9).epsilon(0.03));
    CHECK(chebyshev_baseline(7).best_kappa2 == doctest::Approx(87).epsilon(0.03));
}

TEST_CASE("chebyshev raw node symmetry") {
    auto b = chebyshev_baseline(3, 0.5, 0.6, -0.1, 0.1, 0.05);
    CHECK(b.raw_points[0] == doctest::Approx(std::cos(M_PI / 6)));
    CHECK(b.raw_points[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(b.raw_points[2] == doctest::Approx(-std::cos(M_PI / 6)));
}

TEST_CASE("legendre coefficient matrix and kappa") {
    auto P = legendre_coeff_matrix(5);
    CHECK(P(0, 0) == 1);
    CHECK(P(1, 1) == 1);
    // P_2 = (3x^2 - 1)/2
    CHECK(P(0, 2) == Rational(-1, 2));
    CHECK(P(2, 2) == Rational(3, 2));
    CHECK(legendre_kappa(catalog_lookup("std-F43")->config) == doctest::Approx(76.0).epsilon(0.02));
    CHECK(legendre_kappa(catalog_lookup("disc-F43")->config) == doctest::Approx(6.2).epsilon(0.02));
}

TEST_CASE("kappa invariant under sign flips and permutations") {
    auto e = *catalog_lookup("std-F43");
    auto t = construct_transforms(e.config);
    Grid A = to_float64(t.at);
    double k0 = kappa(A, Norm::two);
    CounterRng rng(11);
    Grid B = A;
    for (auto& row : B) {
        if (rng.next_double() < 0.5)
            for (auto& v : row) v = -v;
    }
    CHECK(kappa(B, Norm::two) == doctest::Approx(k0).epsilon(1e-10));
}

TEST_CASE("norm ordering kappa2 <= sqrt(kappa1 * kappa_inf)") {
    for (const auto& e : catalog()) {
        int nf = e.config.n() - 1;
        Grid V = to_float64(build_vandermonde(e.config.finite_points, nf));
        double k1 = kappa(V, Norm::one), k2 = kappa(V, Norm::two), ki = kappa(V, Norm::inf);
        CHECK(k2 <= std::sqrt(k1 * ki) * (1 + 1e-10));
    }
}

TEST_CASE("improvement ratio > 1 in every norm") {
    for (auto [s, d] : {std::pair{"std-F43", "disc-F43"}, {"std-F63", "disc-F63"},
                        {"std-F83", "disc-F83"}}) {
        int nf = catalog_lookup(s)->config.n() - 1;
        Grid Vs = to_float64(build_vandermonde(catalog_lookup(s)->config.finite_points, nf));
        Grid Vd = to_float64(build_vandermonde(catalog_lookup(d)->config.finite_points, nf));
        for (auto norm : {Norm::one, Norm::two, Norm::inf, Norm::fro})
            CHECK(kappa(Vs, norm) / kappa(Vd, norm) > 1.0);
    }
}
