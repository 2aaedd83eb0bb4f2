#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "winokit/conditioning.hpp"
#include "winokit/cooktoom.hpp"
#include "winokit/discovery.hpp"
#include "winokit/lowprec.hpp"

namespace winokit {

inline constexpr const char* kToolVersion = "0.1.0";

// Embedded in every output JSON for reproducibility.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> arguments;
    std::uint64_t seed = 0;
};

nlohmann::json manifest_json(const RunManifest& m);

nlohmann::json transform_export_json(const PointConfiguration& config,
                                     const TransformTriple& triple);

// Parses either the transform-export/discovery format ({"tile":…,"points":…})
// or a bare {"m":…,"r":…,"points":[…]} object.
PointConfiguration config_from_json(const nlohmann::json& j);

nlohmann::json discovery_result_json(const DiscoveryResult& r);
nlohmann::json conditioning_report_json(const ConditioningReport& rep);
nlohmann::json tile_error_report_json(const TileErrorReport& rep);
nlohmann::json scale_validation_report_json(const ScaleValidationReport& rep);

void write_json_atomic(const std::string& path, const nlohmann::json& j);

}  // namespace winokit
