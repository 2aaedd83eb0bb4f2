// winokit command-line driver.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "winokit/catalog.hpp"
#include "winokit/conditioning.hpp"
#include "winokit/cooktoom.hpp"
#include "winokit/discovery.hpp"
#include "winokit/json_io.hpp"
#include "winokit/lowprec.hpp"

using json = nlohmann::json;
using namespace winokit;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    std::uint64_t seed = 42;
    std::string cache_dir;
    std::string out;
    std::string format = "text";
};

std::pair<int, int> parse_tile(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("tile must be \"m,r\": " + s);
    int m = 0, r = 0;
    try {
        m = std::stoi(s.substr(0, comma));
        r = std::stoi(s.substr(comma + 1));
    } catch (const std::exception&) {
        throw UsageError("tile must be \"m,r\": " + s);
    }
    if (m < 1 || r < 1) throw UsageError("tile sizes must be positive: " + s);
    return {m, r};
}

// Resolves a catalog name or a JSON file path to a point configuration.
PointConfiguration resolve_config(const std::string& ref) {
    if (auto e = catalog_lookup(ref)) return e->config;
    std::ifstream f(ref);
    if (!f) throw UsageError("unknown catalog name and unreadable file: " + ref);
    json j;
    try {
        j = json::parse(f);
        return config_from_json(j);
    } catch (const std::exception& e) {
        throw UsageError("cannot parse " + ref + ": " + e.what());
    }
}

void emit(const GlobalOpts& g, const json& payload, const std::string& text_render) {
    if (g.format == "json")
        std::cout << payload.dump(2) << "\n";
    else if (g.format == "csv") {
        for (auto it = payload.begin(); it != payload.end(); ++it)
            if (!it->is_structured()) std::cout << it.key() << "," << it->dump() << "\n";
    } else
        std::cout << text_render;
    if (!g.out.empty()) write_json_atomic(g.out, payload);
}

json with_manifest(json payload, const std::string& command, const GlobalOpts& g,
                   std::map<std::string, std::string> args) {
    RunManifest m;
    m.command = command;
    m.arguments = std::move(args);
    m.seed = g.seed;
    payload["manifest"] = manifest_json(m);
    return payload;
}

std::string points_str(const PointConfiguration& cfg) {
    std::string s = "{";
    for (std::size_t i = 0; i < cfg.finite_points.size(); ++i) {
        if (i) s += ", ";
        s += to_string(cfg.finite_points[i]);
    }
    return s + "}";
}

int cmd_discover(const GlobalOpts& g, const std::string& tile, std::string mode,
                 const std::string& dtype, int d_max) {
    auto [m, r] = parse_tile(tile);
    if (mode == "dtype") mode = "dtype_aware";
    DiscoverOptions opts;
    opts.seed = g.seed;
    opts.d_max = d_max;
    opts.cache_dir = g.cache_dir;
    if (!dtype.empty()) {
        DtypeConstraint c;
        if (dtype == "float16")
            c.kind = DtypeKind::float16;
        else if (dtype == "bfloat16")
            c.kind = DtypeKind::bfloat16;
        else if (dtype == "int8")
            c.kind = DtypeKind::int8;
        else
            throw UsageError("unknown dtype: " + dtype);
        opts.dtype = c;
        if (mode != "dtype_aware") mode = "dtype_aware";
    }
    if (mode == "dtype_aware" && !opts.dtype) throw UsageError("dtype_aware mode needs --dtype");

    DiscoveryResult res = discover(m, r, mode, opts);
    json j = with_manifest(discovery_result_json(res), "discover", g,
                           {{"tile", tile}, {"mode", mode}, {"dtype", dtype},
                            {"d_max", std::to_string(d_max)}});
    char buf[256];
    std::snprintf(buf, sizeof buf, "F(%d,%d) %s: points %s  kappa2(V)=%.6g  verified=%s\n", m, r,
                  mode.c_str(), points_str(res.config).c_str(), res.kappa2_v,
                  res.verified ? "yes" : "no");
    emit(g, j, buf);
    return res.verified ? 0 : 1;
}

int cmd_verify(const GlobalOpts& g, const std::string& ref) {
    PointConfiguration cfg = resolve_config(ref);
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
    VerificationReport rep;
    try {
        rep = verify_exact(construct_transforms(cfg), cfg.m, cfg.r);
    } catch (const std::exception& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    }
    json j = with_manifest(
        json{{"tile", {{"m", cfg.m}, {"r", cfg.r}}},
             {"points", json::parse(transform_export_json(cfg, construct_transforms(cfg))
                                        .at("points")
                                        .dump())},
             {"exact_zero", rep.exact_zero},
             {"checked_entries", rep.checked_entries}},
        "verify", g, {{"ref", ref}});
    char buf[128];
    std::snprintf(buf, sizeof buf, "F(%d,%d): exact decomposition %s (%zu tensor entries)\n",
                  cfg.m, cfg.r, rep.exact_zero ? "holds" : "FAILS",
                  static_cast<std::size_t>(rep.checked_entries));
    emit(g, j, buf);
    return rep.exact_zero ? 0 : 1;
}

int cmd_analyze(const GlobalOpts& g, const std::string& ref, bool want_2d, bool want_legendre) {
    PointConfiguration cfg = resolve_config(ref);
    ConditioningReport rep = analyze(cfg);
    json j = conditioning_report_json(rep);
    std::string text;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "F(%d,%d) %s\n  kappa2: V=%.6g  AT=%.6g  BT=%.6g  G=%.6g\n"
                  "  norm product ||A|| ||B|| ||G|| = %.6g\n",
                  cfg.m, cfg.r, points_str(cfg).c_str(), rep.kappa_v.two, rep.kappa_at.two,
                  rep.kappa_bt.two, rep.kappa_g.two, rep.norm_product);
    text += buf;
    std::snprintf(buf, sizeof buf, "  kappa1(V)=%.6g  kappaInf(V)=%.6g  kappaF(V)=%.6g\n",
                  rep.kappa_v.one, rep.kappa_v.inf, rep.kappa_v.fro);
    text += buf;
    if (want_2d) {
        std::snprintf(buf, sizeof buf, "  2D: kappa2(V kron V) = %.6g\n", rep.kappa_v_2d);
        text += buf;
    }
    if (want_legendre) {
        double kl = legendre_kappa(cfg);
        j["kappa_legendre"] = kl;
        std::snprintf(buf, sizeof buf, "  Legendre basis: kappa2(L) = %.6g\n", kl);
        text += buf;
    }
    j = with_manifest(std::move(j), "analyze", g, {{"ref", ref}});
    emit(g, j, text);
    return 0;
}

int cmd_simulate(const GlobalOpts& g, const std::string& ref, const std::string& precision,
                 const std::string& granularity, int samples) {
    QuantSpec spec;
    if (precision == "fp16")
        spec.precision = Precision::fp16;
    else if (precision == "int8")
        spec.precision = Precision::int8;
    else
        throw UsageError("unknown precision: " + precision);
    if (granularity == "per-tensor" || granularity == "per_tensor")
        spec.granularity = Granularity::per_tensor;
    else if (granularity == "per-channel" || granularity == "per_channel")
        spec.granularity = Granularity::per_channel;
    else
        throw UsageError("unknown granularity: " + granularity);
    if (spec.precision == Precision::fp16 && spec.granularity == Granularity::per_channel)
        throw UsageError("fp16 has no per-channel scales");
    if (samples < 1) throw UsageError("samples must be >= 1");

    PointConfiguration cfg = resolve_config(ref);
    TileErrorReport rep = measure_tile_error(cfg, spec, samples, g.seed);
    json j = with_manifest(tile_error_report_json(rep), "simulate", g,
                           {{"ref", ref},
                            {"precision", precision},
                            {"granularity", granularity},
                            {"samples", std::to_string(samples)}});
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "F(%d,%d) %s/%s over %d samples (seed %llu):\n"
                  "  rel L2 error mean=%.4g median=%.4g max=%.4g  saturated=%d\n",
                  rep.m, rep.r, precision.c_str(), granularity.c_str(), samples,
                  static_cast<unsigned long long>(g.seed), rep.mean_rel_l2, rep.median_rel_l2,
                  rep.max_rel_l2, rep.saturated_samples);
    emit(g, j, buf);
    return 0;
}

int cmd_compare(const GlobalOpts& g, const std::string& tile, const std::string& candidate) {
    auto [m, r] = parse_tile(tile);
    const int nf = m + r - 2;

    // standard baseline: catalog std entry for this tile if present
    std::optional<double> std_kappa;
    std::string std_name = "std-F" + std::to_string(m) + std::to_string(r);
    if (auto e = catalog_lookup(std_name)) {
        auto V = to_float64(build_vandermonde(e->config.finite_points, nf));
        std_kappa = kappa(V, Norm::two);
    }
    auto cheb = chebyshev_baseline(nf);

    PointConfiguration cand_cfg;
    std::string cand_desc;
    if (!candidate.empty()) {
        cand_cfg = resolve_config(candidate);
        cand_desc = candidate;
    } else {
        std::string disc_name = "disc-F" + std::to_string(m) + std::to_string(r);
        if (auto e = catalog_lookup(disc_name)) {
            cand_cfg = e->config;
            cand_desc = disc_name;
        } else {
            DiscoverOptions opts;
            opts.seed = g.seed;
            opts.cache_dir = g.cache_dir;
            cand_cfg = discover(m, r, "pipeline", opts).config;
            cand_desc = "pipeline discovery";
        }
    }
    if (cand_cfg.m != m || cand_cfg.r != r) throw UsageError("candidate tile does not match");
    double cand_kappa = kappa(to_float64(build_vandermonde(cand_cfg.finite_points, nf)), Norm::two);

    json j{{"tile", {{"m", m}, {"r", r}}},
           {"chebyshev_kappa2", cheb.best_kappa2},
           {"candidate", cand_desc},
           {"candidate_points", points_str(cand_cfg)},
           {"candidate_kappa2", cand_kappa}};
    std::string text;
    char buf[256];
    std::snprintf(buf, sizeof buf, "F(%d,%d) kappa2 comparison\n", m, r);
    text += buf;
    if (std_kappa) {
        j["standard_kappa2"] = *std_kappa;
        j["improvement_vs_standard"] = *std_kappa / cand_kappa;
        std::snprintf(buf, sizeof buf, "  standard   %12.6g   (%.3gx)\n", *std_kappa,
                      *std_kappa / cand_kappa);
        text += buf;
    }
    j["improvement_vs_chebyshev"] = cheb.best_kappa2 / cand_kappa;
    std::snprintf(buf, sizeof buf, "  chebyshev  %12.6g   (%.3gx)\n  candidate  %12.6g   %s\n",
                  cheb.best_kappa2, cheb.best_kappa2 / cand_kappa, cand_kappa, cand_desc.c_str());
    text += buf;
    j = with_manifest(std::move(j), "compare", g, {{"tile", tile}, {"candidate", candidate}});
    emit(g, j, text);
    return 0;
}

int cmd_export(const GlobalOpts& g, const std::string& ref) {
    PointConfiguration cfg = resolve_config(ref);
    TransformTriple triple;
    try {
        cfg.validate();
        triple = construct_transforms(cfg);
        if (!verify_exact(triple, cfg.m, cfg.r).exact_zero)
            throw std::runtime_error("exact verification failed");
    } catch (const std::exception& e) {
        std::cerr << "export blocked: " << e.what() << "\n";
        return 1;
    }
    json j = with_manifest(transform_export_json(cfg, triple), "export", g, {{"ref", ref}});
    if (g.out.empty())
        std::cout << j.dump(2) << "\n";
    else {
        write_json_atomic(g.out, j);
        std::cout << "wrote " << g.out << "\n";
    }
    return 0;
}

int cmd_repro(const GlobalOpts& g, const std::string& tile, const std::string& seeds_csv) {
    auto [m, r] = parse_tile(tile);
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(seeds_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) {
            try {
                seeds.push_back(std::stoull(tok));
            } catch (const std::exception&) {
                throw UsageError("bad seed list: " + seeds_csv);
            }
        }
    if (seeds.size() < 2) throw UsageError("need at least two seeds");

    DiscoverOptions base;
    ReproSummary s = reproducibility_study(m, r, seeds, base);
    json j{{"tile", {{"m", m}, {"r", r}}},
           {"seeds", s.seeds},
           {"kappas", s.kappas},
           {"failed_seeds", s.failed_seeds},
           {"mean_kappa", s.mean_kappa},
           {"std_kappa", s.std_kappa},
           {"cv_percent", s.cv_percent},
           {"min_kappa", s.min_kappa},
           {"max_kappa", s.max_kappa}};
    j = with_manifest(std::move(j), "repro", g, {{"tile", tile}, {"seeds", seeds_csv}});
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "F(%d,%d) over %zu seeds: kappa2 mean=%.6g std=%.3g CV=%.2f%% range=[%.6g, %.6g]\n",
                  m, r, s.kappas.size(), s.mean_kappa, s.std_kappa, s.cv_percent, s.min_kappa,
                  s.max_kappa);
    emit(g, j, buf);
    return s.failed_seeds.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Winograd/Cook-Toom transform toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed for all randomized stages")->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir, "discovery result cache directory")
        ->envname("WINOKIT_CACHE_DIR");
    app.add_option("--out", g.out, "write the JSON report to this path");
    app.add_option("--format", g.format, "stdout rendering")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    std::string tile, mode = "pipeline", dtype, ref, precision = "int8",
                      granularity = "per-tensor", candidate, seeds_csv = "1,2,3,4,5";
    int d_max = 6, samples = 100;
    bool want_2d = false, want_legendre = false;

    auto* discover_cmd = app.add_subcommand("discover", "search for well-conditioned points");
    discover_cmd->add_option("--tile", tile, "tile as m,r")->required();
    discover_cmd->add_option("--mode", mode, "pipeline | symmetric | es | dtype")
        ->capture_default_str();
    discover_cmd->add_option("--dtype", dtype, "float16 | bfloat16 | int8");
    discover_cmd->add_option("--d-max", d_max, "max denominator for symmetric enumeration")
        ->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "exact decomposition check");
    verify_cmd->add_option("ref", ref, "catalog name or config JSON file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "conditioning report");
    analyze_cmd->add_option("ref", ref, "catalog name or config JSON file")->required();
    analyze_cmd->add_flag("--2d", want_2d, "include the Kronecker-squared 2D value");
    analyze_cmd->add_flag("--legendre", want_legendre, "include the Legendre-basis kappa");

    auto* simulate_cmd = app.add_subcommand("simulate", "low-precision tile error");
    simulate_cmd->add_option("ref", ref, "catalog name or config JSON file")->required();
    simulate_cmd->add_option("--precision", precision, "fp16 | int8")->capture_default_str();
    simulate_cmd->add_option("--granularity", granularity, "per-tensor | per-channel")
        ->capture_default_str();
    simulate_cmd->add_option("--samples", samples, "sample count")->capture_default_str();

    auto* compare_cmd = app.add_subcommand("compare", "baselines vs candidate");
    compare_cmd->add_option("--tile", tile, "tile as m,r")->required();
    compare_cmd->add_option("--candidate", candidate, "catalog name or config JSON file");

    auto* export_cmd = app.add_subcommand("export", "exact transform matrices as JSON");
    export_cmd->add_option("ref", ref, "catalog name or config JSON file")->required();

    auto* repro_cmd = app.add_subcommand("repro", "multi-seed reproducibility study");
    repro_cmd->add_option("--tile", tile, "tile as m,r")->required();
    repro_cmd->add_option("--seeds", seeds_csv, "comma-separated seed list")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        catalog_self_check();
        if (*discover_cmd) return cmd_discover(g, tile, mode, dtype, d_max);
        if (*verify_cmd) return cmd_verify(g, ref);
        if (*analyze_cmd) return cmd_analyze(g, ref, want_2d, want_legendre);
        if (*simulate_cmd) return cmd_simulate(g, ref, precision, granularity, samples);
        if (*compare_cmd) return cmd_compare(g, tile, candidate);
        if (*export_cmd) return cmd_export(g, ref);
        if (*repro_cmd) return cmd_repro(g, tile, seeds_csv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
