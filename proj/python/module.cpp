#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "winokit/catalog.hpp"
#include "winokit/conditioning.hpp"
#include "winokit/cooktoom.hpp"
#include "winokit/discovery.hpp"
#include "winokit/lowprec.hpp"

namespace py = pybind11;
using namespace winokit;

namespace {

PointConfiguration make_config(int m, int r, const std::vector<std::string>& points) {
    PointConfiguration cfg;
    cfg.m = m;
    cfg.r = r;
    for (const auto& s : points) cfg.finite_points.push_back(parse_rational(s));
    cfg.validate();
    return cfg;
}

std::vector<std::string> points_out(const PointConfiguration& cfg) {
    std::vector<std::string> out;
    for (const auto& p : cfg.finite_points) out.push_back(to_string(p));
    return out;
}

py::dict triple_dict(const PointConfiguration& cfg, const TransformTriple& t) {
    auto strings = [](const RationalMatrix& m) {
        std::vector<std::vector<std::string>> rows(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(to_string(m(i, j)));
        return rows;
    };
    py::dict d;
    d["m"] = cfg.m;
    d["r"] = cfg.r;
    d["points"] = points_out(cfg);
    d["AT"] = strings(t.at);
    d["G"] = strings(t.g);
    d["BT"] = strings(t.bt);
    d["AT_f64"] = to_float64(t.at);
    d["G_f64"] = to_float64(t.g);
    d["BT_f64"] = to_float64(t.bt);
    return d;
}

QuantSpec make_spec(const std::string& precision, const std::string& granularity) {
    QuantSpec spec;
    if (precision == "fp16")
        spec.precision = Precision::fp16;
    else if (precision == "int8")
        spec.precision = Precision::int8;
    else
        throw std::invalid_argument("precision must be fp16 or int8");
    if (granularity == "per_tensor")
        spec.granularity = Granularity::per_tensor;
    else if (granularity == "per_channel")
        spec.granularity = Granularity::per_channel;
    else
        throw std::invalid_argument("granularity must be per_tensor or per_channel");
    return spec;
}

DtypeConstraint make_dtype(const std::string& kind) {
    DtypeConstraint c;
    if (kind == "float16")
        c.kind = DtypeKind::float16;
    else if (kind == "bfloat16")
        c.kind = DtypeKind::bfloat16;
    else if (kind == "int8")
        c.kind = DtypeKind::int8;
    else
        throw std::invalid_argument("dtype must be float16, bfloat16, or int8");
    return c;
}

}  // namespace

PYBIND11_MODULE(_winokit, mod) {
    mod.doc() = "Winograd/Cook-Toom transform toolkit bindings";

    mod.def(
        "construct",
        [](int m, int r, const std::vector<std::string>& points) {
            auto cfg = make_config(m, r, points);
            return triple_dict(cfg, construct_transforms(cfg));
        },
        py::arg("m"), py::arg("r"), py::arg("points"),
        "Exact transform triple for the given finite points (+ implicit infinity).");

    mod.def(
        "verify",
        [](int m, int r, const std::vector<std::string>& points) {
            auto cfg = make_config(m, r, points);
            return verify_exact(construct_transforms(cfg), m, r).exact_zero;
        },
        py::arg("m"), py::arg("r"), py::arg("points"),
        "True iff the exact rational decomposition residual is identically zero.");

    mod.def(
        "kappa2",
        [](const std::vector<std::vector<double>>& matrix) { return kappa(matrix, Norm::two); },
        py::arg("matrix"), "Spectral condition number sigma_max / sigma_min.");

    mod.def(
        "analyze",
        [](int m, int r, const std::vector<std::string>& points) {
            auto rep = analyze(make_config(m, r, points));
            py::dict d;
            d["kappa2_v"] = rep.kappa_v.two;
            d["kappa2_at"] = rep.kappa_at.two;
            d["kappa2_bt"] = rep.kappa_bt.two;
            d["kappa2_g"] = rep.kappa_g.two;
            d["norm_product"] = rep.norm_product;
            d["kappa2_v_2d"] = rep.kappa_v_2d;
            return d;
        },
        py::arg("m"), py::arg("r"), py::arg("points"));

    mod.def(
        "discover",
        [](int m, int r, const std::string& mode, std::uint64_t seed, int d_max,
           const std::string& dtype, const std::string& cache_dir) {
            DiscoverOptions opts;
            opts.seed = seed;
            opts.d_max = d_max;
            opts.cache_dir = cache_dir;
            if (!dtype.empty()) opts.dtype = make_dtype(dtype);
            auto res = discover(m, r, mode, opts);
            py::dict d;
            d["m"] = res.config.m;
            d["r"] = res.config.r;
            d["points"] = points_out(res.config);
            d["kappa2_v"] = res.kappa2_v;
            d["verified"] = res.verified;
            d["mode"] = res.mode;
            d["seed"] = res.seed;
            d["provenance"] = res.provenance;
            return d;
        },
        py::arg("m"), py::arg("r"), py::arg("mode") = "pipeline", py::arg("seed") = 42,
        py::arg("d_max") = 6, py::arg("dtype") = "", py::arg("cache_dir") = "");

    mod.def(
        "measure_tile_error",
        [](int m, int r, const std::vector<std::string>& points, const std::string& precision,
           const std::string& granularity, int samples, std::uint64_t seed) {
            auto rep = measure_tile_error(make_config(m, r, points),
                                          make_spec(precision, granularity), samples, seed);
            py::dict d;
            d["mean_rel_l2"] = rep.mean_rel_l2;
            d["median_rel_l2"] = rep.median_rel_l2;
            d["max_rel_l2"] = rep.max_rel_l2;
            d["saturated_samples"] = rep.saturated_samples;
            return d;
        },
        py::arg("m"), py::arg("r"), py::arg("points"), py::arg("precision") = "int8",
        py::arg("granularity") = "per_tensor", py::arg("samples") = 100, py::arg("seed") = 42);

    mod.def(
        "snap_to_rational",
        [](double x, int d_max) { return to_string(snap_to_rational(x, d_max, 5)); },
        py::arg("x"), py::arg("d_max") = 10);

    mod.def("round_fp16", &round_fp16, py::arg("x"));

    mod.def("catalog", []() {
        py::list out;
        for (const auto& e : catalog()) {
            py::dict d;
            d["name"] = e.name;
            d["m"] = e.config.m;
            d["r"] = e.config.r;
            d["points"] = points_out(e.config);
            d["reference_kappa2"] = e.reference_kappa2;
            out.append(d);
        }
        return out;
    });
}
