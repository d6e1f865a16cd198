#include "slrk/integrator.hpp"
#include "slrk/navier_stokes.hpp"
#include "slrk/order_conditions.hpp"
#include "slrk/scheme_search.hpp"
#include "slrk/stability.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace slrk;

namespace {

std::vector<std::string> strings(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

Tableau named_or_parsed(const std::string& spec) {
    if (auto t = builtin_tableau(spec)) return *t;
    return parse_tableau(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stiffness-leveraged Runge-Kutta toolkit";

    py::class_<Tableau>(m, "Tableau")
        .def_property_readonly("name", &Tableau::name)
        .def_property_readonly("stages", &Tableau::stages)
        .def_property_readonly("b", [](const Tableau& t) { return strings(t.b()); })
        .def_property_readonly("c", [](const Tableau& t) { return strings(t.c()); })
        .def_property_readonly("a",
                               [](const Tableau& t) {
                                   std::vector<std::vector<std::string>> rows;
                                   for (const auto& row : t.a_matrix()) rows.push_back(strings(row));
                                   return rows;
                               })
        .def("serialize", &serialize_tableau)
        .def("__eq__", [](const Tableau& x, const Tableau& y) { return x == y; })
        .def("__repr__", [](const Tableau& t) { return "<Tableau '" + t.name() + "' s=" + std::to_string(t.stages()) + ">"; });

    m.def("builtin_tableau_names", &builtin_tableau_names);
    m.def("tableau", &named_or_parsed, py::arg("name_or_text"),
          "A built-in tableau by name, or one parsed from tableau file text.");
    m.def("load_tableau", &load_tableau, py::arg("path"));

    m.def(
        "order_residuals",
        [](const Tableau& t, int order) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& c : order_residuals(t, order)) out.emplace_back(c.tree.to_string(), to_string(c.residual));
            return out;
        },
        py::arg("tableau"), py::arg("order"), "(tree, residual) pairs for every tree up to `order`.");
    m.def("verified_order", &verified_order, py::arg("tableau"));

    m.def(
        "stability_coefficients", [](const Tableau& t) { return strings(stability_polynomial(t).coeffs); },
        py::arg("tableau"));
    m.def(
        "amplification",
        [](const Tableau& t, std::complex<double> z1, std::complex<double> z2) {
            return slrk_amplification(stability_polynomial(t), z1, z2);
        },
        py::arg("tableau"), py::arg("z1"), py::arg("z2") = 0.0);
    m.def(
        "real_axis_boundary", [](const Tableau& t, double z2) { return real_axis_boundary(stability_polynomial(t), z2); },
        py::arg("tableau"), py::arg("z2") = 0.0);
    m.def(
        "region_boundary",
        [](const Tableau& t, std::complex<double> z2, int samples) {
            return region_boundary(stability_polynomial(t), z2, samples).points;
        },
        py::arg("tableau"), py::arg("z2") = 0.0, py::arg("samples") = 256);

    m.def(
        "integrate",
        [](const Tableau& t, const RhsFunction& g, std::optional<Vector> spectrum, const Vector& u0, double h,
           int steps) {
            OdeProblem p;
            p.dim = u0.size();
            p.g = g;
            if (spectrum) p.A = LinearOperator::diagonal(*spectrum);
            py::gil_scoped_release release;
            return integrate(StepPlan(p, t, h), u0, steps).final_state;
        },
        py::arg("tableau"), py::arg("g"), py::arg("spectrum"), py::arg("u0"), py::arg("h"), py::arg("steps"),
        "Integrate u' = g(u) + diag(spectrum) u. With spectrum None this is the classical scheme.");

    m.def(
        "search",
        [](int stages, int order, const std::string& delta_c, const std::vector<std::string>& c_pattern, int seeds,
           std::uint64_t seed) {
            SearchConfig cfg;
            cfg.stages = stages;
            cfg.target_order = order;
            cfg.delta_c = parse_rational(delta_c);
            for (const auto& c : c_pattern) cfg.c_pattern.push_back(parse_rational(c));
            cfg.rng_seed = seed;
            std::vector<SearchResult> results;
            {
                py::gil_scoped_release release;
                results = multi_start_search(cfg, seeds);
            }
            py::list out;
            for (const auto& r : results) {
                py::dict d;
                d["seed"] = r.seed;
                d["status"] = std::string(to_string(r.status));
                d["iterations"] = static_cast<int>(r.history.size()) - 1;
                d["final_residual"] = r.history.back();
                if (r.tableau) {
                    d["b"] = r.tableau->b;
                    d["a"] = r.tableau->a;
                }
                out.append(d);
            }
            return out;
        },
        py::arg("stages"), py::arg("order"), py::arg("delta_c"), py::arg("c_pattern"), py::arg("seeds"),
        py::arg("seed") = 0);

    m.def(
        "convergence_study",
        [](int n, double nu, double t_final, std::vector<int> steps, int reference_steps) {
            ConvergenceConfig cfg;
            cfg.n = n;
            cfg.nu = nu;
            cfg.t_final = t_final;
            cfg.step_counts = std::move(steps);
            cfg.reference_steps = reference_steps;
            ConvergenceTable table;
            {
                py::gil_scoped_release release;
                table = convergence_study(cfg);
            }
            py::dict out;
            py::list cells;
            for (const auto& c : table.cells) {
                cells.append(py::dict(py::arg("scheme") = c.scheme, py::arg("m") = c.steps,
                                      py::arg("linf_error") = c.linf_error, py::arg("stable") = c.stable,
                                      py::arg("used_in_fit") = c.used_in_fit));
            }
            py::dict slopes;
            for (const auto& f : table.fits) slopes[py::str(f.scheme)] = f.slope;
            out["cells"] = cells;
            out["slopes"] = slopes;
            out["error_floor"] = table.error_floor;
            return out;
        },
        py::arg("n") = 64, py::arg("nu") = 1e-2, py::arg("t_final") = 5.0,
        py::arg("steps") = std::vector<int>{32, 64, 128, 256, 512, 1024}, py::arg("reference_steps") = 4096);
}
