#include "winokit/json_io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

namespace winokit {

using json = nlohmann::json;

json manifest_json(const RunManifest& m) {
    json j;
    j["command"] = m.command;
    j["arguments"] = m.arguments;
    j["seed"] = m.seed;
    j["tool_version"] = kToolVersion;
    auto now = std::chrono::system_clock::now();
    j["timestamp_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    return j;
}

static json matrix_strings(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

static json matrix_f64(const RationalMatrix& m) { return json(to_float64(m)); }

json transform_export_json(const PointConfiguration& config, const TransformTriple& triple) {
    json j;
    j["tile"] = {{"m", config.m}, {"r", config.r}};
    json pts = json::array();
    for (const auto& p : config.finite_points) pts.push_back(to_string(p));
    j["points"] = pts;
    j["infinity"] = true;
    j["AT"] = matrix_strings(triple.at);
    j["G"] = matrix_strings(triple.g);
    j["BT"] = matrix_strings(triple.bt);
    j["AT_f64"] = matrix_f64(triple.at);
    j["G_f64"] = matrix_f64(triple.g);
    j["BT_f64"] = matrix_f64(triple.bt);
    return j;
}

PointConfiguration config_from_json(const json& j) {
    PointConfiguration cfg;
    if (j.contains("tile")) {
        cfg.m = j.at("tile").at("m").get<int>();
        cfg.r = j.at("tile").at("r").get<int>();
    } else {
        cfg.m = j.at("m").get<int>();
        cfg.r = j.at("r").get<int>();
    }
    for (const auto& s : j.at("points")) cfg.finite_points.push_back(parse_rational(s));
    return cfg;
}

json discovery_result_json(const DiscoveryResult& r) {
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

static json norm_map_json(const NormMap& n) {
    return json{{"1", n.one}, {"2", n.two}, {"inf", n.inf}, {"fro", n.fro}};
}

json conditioning_report_json(const ConditioningReport& rep) {
    json j;
    j["kappa_v"] = norm_map_json(rep.kappa_v);
    j["kappa_at"] = norm_map_json(rep.kappa_at);
    j["kappa_bt"] = norm_map_json(rep.kappa_bt);
    j["kappa_g"] = norm_map_json(rep.kappa_g);
    j["norm_product"] = rep.norm_product;
    j["kappa_v_2d"] = rep.kappa_v_2d;
    auto stats = [](const MatrixStats& s) {
        return json{{"max_abs_entry", s.max_abs_entry}, {"zero_count", s.zero_count}};
    };
    j["stats"] = {{"AT", stats(rep.stats_at)}, {"BT", stats(rep.stats_bt)},
                  {"G", stats(rep.stats_g)}};
    return j;
}

json tile_error_report_json(const TileErrorReport& rep) {
    json j;
    j["tile"] = {{"m", rep.m}, {"r", rep.r}};
    j["precision"] = rep.spec.precision == Precision::fp16 ? "fp16" : "int8";
    j["granularity"] =
        rep.spec.granularity == Granularity::per_tensor ? "per_tensor" : "per_channel";
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["mean_rel_l2"] = rep.mean_rel_l2;
    j["median_rel_l2"] = rep.median_rel_l2;
    j["max_rel_l2"] = rep.max_rel_l2;
    j["saturated_samples"] = rep.saturated_samples;
    j["l2_skip_epsilon"] = rep.l2_skip_epsilon;
    return j;
}

json scale_validation_report_json(const ScaleValidationReport& rep) {
    json j;
    j["tile"] = {{"m", rep.m}, {"r", rep.r}};
    j["precision"] = rep.spec.precision == Precision::fp16 ? "fp16" : "int8";
    j["granularity"] =
        rep.spec.granularity == Granularity::per_tensor ? "per_tensor" : "per_channel";
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["standard_error"] = rep.standard_error;
    j["discovered_error"] = rep.discovered_error;
    j["improvement_ratio"] = rep.improvement_ratio;
    j["elementwise_epsilon"] = rep.elementwise_epsilon;
    return j;
}

void write_json_atomic(const std::string& path, const json& j) {
    namespace fs = std::filesystem;
    fs::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
    }
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw std::runtime_error("cannot write " + path);
        f << j.dump(2) << "\n";
    }
    fs::rename(tmp, p);
}

}  // namespace winokit
