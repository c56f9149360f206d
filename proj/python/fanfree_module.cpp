// Python surface: thin wrappers over the C++ core, trafficking in graph6
// strings and plain dicts so scripts stay decoupled from the C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "fanfree/analyze.hpp"
#include "fanfree/canonical.hpp"
#include "fanfree/enumerate.hpp"
#include "fanfree/errors.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/optimize.hpp"
#include "fanfree/pattern.hpp"
#include "fanfree/spectral.hpp"

namespace py = pybind11;
using namespace fanfree;

namespace {

py::dict certificate_dict(const SpectralCertificate& c) {
    py::dict d;
    d["lambda_lo"] = c.lambda_lo;
    d["lambda_hi"] = c.lambda_hi;
    d["iterations"] = c.iterations;
    d["residual"] = c.residual;
    d["restricted_to_component"] = c.restricted_to_component;
    d["perron"] = c.perron;
    return d;
}

py::dict audit_dict(const LemmaAudit& a) {
    py::dict dec;
    dec["u_star"] = a.decomposition.u_star;
    dec["U"] = a.decomposition.U;
    dec["W"] = a.decomposition.W;
    dec["U0"] = a.decomposition.U0;
    dec["U_plus"] = a.decomposition.U_plus;
    dec["e_U"] = a.decomposition.e_U;
    dec["e_W"] = a.decomposition.e_W;
    dec["e_UW"] = a.decomposition.e_UW;
    py::list comps;
    for (const auto& c : a.decomposition.components) {
        py::dict jc;
        jc["vertices"] = c.vertices;
        jc["shape"] = c.shape.name();
        jc["gamma"] = c.gamma;
        comps.append(std::move(jc));
    }
    dec["components"] = std::move(comps);

    py::dict d;
    d["m"] = a.m;
    d["lambda_lo"] = a.lambda_lo;
    d["lambda_hi"] = a.lambda_hi;
    d["hypothesis_residual"] = a.hypothesis_residual;
    d["hypothesis_holds"] = a.hypothesis_holds;
    d["decomposition"] = std::move(dec);
    d["inequality_1_lhs"] = a.master_lhs;
    d["inequality_1_rhs"] = a.master_rhs;
    py::list checks;
    for (const auto& c : a.checks) {
        py::dict jc;
        jc["name"] = c.name;
        jc["holds"] = c.holds;
        jc["residual"] = c.residual;
        checks.append(std::move(jc));
    }
    d["checks"] = std::move(checks);
    return d;
}

} // namespace

PYBIND11_MODULE(fanfree, mod) {
    mod.doc() = "spectral workbench for fan-free graphs";

    py::register_exception<CapacityError>(mod, "CapacityError", PyExc_RuntimeError);
    py::register_exception<BudgetError>(mod, "BudgetError", PyExc_RuntimeError);
    py::register_exception<ParameterError>(mod, "ParameterError", PyExc_ValueError);
    py::register_exception<FormatError>(mod, "FormatError", PyExc_ValueError);
    py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
    py::register_exception<StructureError>(mod, "StructureError", PyExc_ValueError);
    py::register_exception<MoveError>(mod, "MoveError", PyExc_ValueError);
    py::register_exception<FeasibilityError>(mod, "FeasibilityError", PyExc_ValueError);

    mod.def(
        "construct",
        [](const std::string& family, const std::vector<long>& params) {
            static const std::map<std::string, FamilyTag> tags = {
                {"complete", FamilyTag::complete}, {"path", FamilyTag::path},
                {"cycle", FamilyTag::cycle},       {"star", FamilyTag::star},
                {"star_plus_edge", FamilyTag::star_plus_edge},
                {"double_star", FamilyTag::double_star},
                {"fan", FamilyTag::fan},           {"empty", FamilyTag::empty},
            };
            auto it = tags.find(family);
            if (it == tags.end()) throw ParameterError("unknown family: " + family);
            return to_graph6(fanfree::construct({it->second, params}));
        },
        py::arg("family"), py::arg("params"),
        "graph6 of a named family (complete, path, cycle, star, star_plus_edge, "
        "double_star, fan, empty)");

    mod.def(
        "extremal_graph",
        [](int k, long m) { return to_graph6(extremal_graph(k, m)); }, py::arg("k"),
        py::arg("m"), "graph6 of K_k joined with an independent set, m edges total");

    mod.def(
        "vertex_count", [](const std::string& g6) { return from_graph6(g6).vertex_count(); },
        py::arg("g6"));
    mod.def(
        "edge_count", [](const std::string& g6) { return from_graph6(g6).edge_count(); },
        py::arg("g6"));

    mod.def(
        "canonical_g6",
        [](const std::string& g6) { return to_graph6(canonical_graph(from_graph6(g6))); },
        py::arg("g6"), "graph6 of the canonical relabeling; equal strings iff isomorphic");

    mod.def(
        "spectral_radius",
        [](const std::string& g6, double tol) {
            return certificate_dict(spectral_radius(from_graph6(g6), tol));
        },
        py::arg("g6"), py::arg("tol") = 1e-10,
        "certified enclosure of the largest adjacency eigenvalue");

    mod.def("conjecture_bound", &conjecture_bound, py::arg("k"), py::arg("m"),
            "(k - 1 + sqrt(4m - k^2 + 1)) / 2");

    mod.def(
        "contains_fan",
        [](const std::string& g6, int k) -> py::object {
            const auto w = contains_fan(from_graph6(g6), k);
            if (!w) return py::none();
            py::dict d;
            d["hub"] = w->hub;
            d["path"] = w->path;
            return d;
        },
        py::arg("g6"), py::arg("k"),
        "None when fan-free, else a witness dict with hub and path");

    mod.def(
        "enumerate_classes",
        [](long m, std::optional<int> k, int n_min, int n_max, bool connected, int jobs) {
            EnumSpec spec;
            spec.m = m;
            spec.fan_order = k;
            spec.n_min = n_min;
            spec.n_max = n_max;
            spec.connected_only = connected;
            std::vector<std::string> out;
            auto visit = [&](const Graph& g) { out.push_back(to_graph6(g)); };
            if (connected)
                enumerate_connected(spec, visit, jobs);
            else
                enumerate_all(spec, visit, jobs);
            return out;
        },
        py::arg("m"), py::arg("k") = py::none(), py::arg("n_min") = 0, py::arg("n_max") = 0,
        py::arg("connected") = true, py::arg("jobs") = 1,
        "graph6 of every isomorphism class with m edges, optionally fan-constrained");

    mod.def(
        "local_search",
        [](long m, int k, int restarts, std::uint64_t seed, int jobs, long move_budget,
           double tol) {
            SearchOptions so;
            so.m = m;
            so.fan_order = k;
            so.restarts = restarts;
            so.seed = seed;
            so.jobs = jobs;
            so.move_budget = move_budget;
            so.tol = tol;
            const SearchReport rep = local_search(so);
            py::dict d;
            d["best_g6"] = rep.best_g6;
            d["lambda_lo"] = rep.lambda_lo;
            d["lambda_hi"] = rep.lambda_hi;
            d["restarts_used"] = rep.restarts_used;
            d["moves_accepted"] = rep.moves_accepted;
            d["seed"] = rep.seed;
            return d;
        },
        py::arg("m"), py::arg("k") = 6, py::arg("restarts") = 20, py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("move_budget") = 200, py::arg("tol") = 1e-10,
        "rotation-move hill climbing over fan-free connected graphs");

    mod.def(
        "check_rotation_lemma",
        [](long trials, int n_lo, int n_hi, std::uint64_t seed) {
            const RotationLemmaReport rep = check_rotation_lemma(trials, n_lo, n_hi, seed);
            py::dict d;
            d["trials"] = rep.trials;
            d["certified_increase"] = rep.certified_increase;
            d["inconclusive"] = rep.inconclusive;
            d["violations"] = rep.violations;
            return d;
        },
        py::arg("trials"), py::arg("n_lo") = 4, py::arg("n_hi") = 12, py::arg("seed") = 1);

    mod.def(
        "audit",
        [](const std::string& g6, int k) { return audit_dict(audit(from_graph6(g6), k)); },
        py::arg("g6"), py::arg("k"),
        "numerical evaluation of every structural lemma on a fan-free graph");

    mod.def(
        "verification_csv",
        [](int k, const std::vector<long>& m_list, long exhaustive_limit, int restarts,
           std::uint64_t seed, int jobs) {
            VerifyTableOptions opts;
            opts.exhaustive_limit = exhaustive_limit;
            opts.restarts = restarts;
            opts.seed = seed;
            opts.jobs = jobs;
            return verification_table_csv(verify_table(k, m_list, opts));
        },
        py::arg("k"), py::arg("m_list"), py::arg("exhaustive_limit") = 10,
        py::arg("restarts") = 20, py::arg("seed") = 1, py::arg("jobs") = 1);

    mod.def("max_vertices_for_canonical", [] { return canonicalization_cap(); });
    mod.def("set_max_vertices_for_canonical", &set_canonicalization_cap, py::arg("n"));
}
