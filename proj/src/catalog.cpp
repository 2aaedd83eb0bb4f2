#include "winokit/catalog.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "winokit/conditioning.hpp"

namespace winokit {

static std::vector<Rational> pts(std::initializer_list<const char*> lits) {
    std::vector<Rational> out;
    for (const char* s : lits) out.push_back(parse_rational(s));
    return out;
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        using S = CatalogSource;
        std::vector<CatalogEntry> v;
        auto add = [&](std::string name, int m, int r, std::vector<Rational> p, S src, double k) {
            v.push_back({std::move(name), PointConfiguration{m, r, std::move(p)}, src, k});
        };
        add("std-F23", 2, 3, pts({"0", "1", "-1"}), S::standard, 3.2255);
        add("std-F43", 4, 3, pts({"0", "1", "-1", "2", "-2"}), S::standard, 42.4719);
        add("std-F63", 6, 3, pts({"0", "1", "-1", "2", "-2", "3", "-3"}), S::standard, 2074.51);
        add("std-F83", 8, 3, pts({"0", "1", "-1", "2", "-2", "3", "-3", "4", "-4"}), S::standard,
            196900.0);
        add("std-F45", 4, 5, pts({"0", "1", "-1", "2", "-2", "3", "-3"}), S::standard, 2074.51);
        add("std-F65", 6, 5, pts({"0", "1", "-1", "2", "-2", "3", "-3", "4", "-4"}), S::standard,
            196900.0);
        add("disc-F23", 2, 3, pts({"0", "1", "-1"}), S::discovered, 3.2255);
        add("disc-F43", 4, 3, pts({"0", "5/6", "-5/6", "7/6", "-7/6"}), S::discovered,
            14.5456);
        add("disc-F63", 6, 3, pts({"0", "3/5", "-3/5", "1", "-1", "7/6", "-7/6"}),
            S::discovered, 76.6387);
        add("disc-F83", 8, 3,
            pts({"0", "2/5", "-2/5", "5/6", "-5/6", "1", "-1", "7/6", "-7/6"}),
            S::discovered, 474.101);
        add("disc-F45", 4, 5, pts({"0", "3/5", "-3/5", "1", "-1", "7/6", "-7/6"}),
            S::locally_derived, 76.6387);
        add("disc-F65", 6, 5,
            pts({"0", "2/5", "-2/5", "5/6", "-5/6", "1", "-1", "7/6", "-7/6"}),
            S::locally_derived, 474.101);
        add("dtype-F43", 4, 3, pts({"0", "3/4", "-3/4", "5/4", "-5/4"}), S::dtype_aware,
            16.537);
        return v;
    }();
    return entries;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

void catalog_self_check() {
    for (const auto& e : catalog()) {
        auto triple = construct_transforms(e.config);
        if (!verify_exact(triple, e.config.m, e.config.r).exact_zero)
            throw std::runtime_error("catalog self-check: " + e.name + " failed verification");
        int nf = e.config.n() - 1;
        double k = kappa(to_float64(build_vandermonde(e.config.finite_points, nf)), Norm::two);
        if (std::abs(k - e.reference_kappa2) / e.reference_kappa2 > 0.01)
            throw std::runtime_error("catalog self-check: " + e.name + " kappa drift (" +
                                     std::to_string(k) + " vs " +
                                     std::to_string(e.reference_kappa2) + ")");
    }
}

}  // namespace winokit
