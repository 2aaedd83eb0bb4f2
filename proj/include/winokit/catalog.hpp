#pragma once

#include <optional>
#include <string>

#include "winokit/cooktoom.hpp"

namespace winokit {

enum class CatalogSource { standard, discovered, dtype_aware, locally_derived };

struct CatalogEntry {
    std::string name;
    PointConfiguration config;
    CatalogSource source;
    double reference_kappa2;
};

const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> catalog_lookup(const std::string& name);

// Verifies every entry exactly and checks recomputed kappa2 against the
// stored reference within 1% relative; throws on any mismatch.
void catalog_self_check();

}  // namespace winokit
