#include "fanfree/cli.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fanfree/analyze.hpp"
#include "fanfree/canonical.hpp"
#include "fanfree/enumerate.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/optimize.hpp"
#include "fanfree/pattern.hpp"
#include "fanfree/spectral.hpp"

namespace fanfree::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(std::ostream& out, const ordered_json& j, bool pretty) {
    out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

Graph construct_family(const std::string& family, const std::vector<long>& params) {
    static const std::map<std::string, FamilyTag> tags = {
        {"complete", FamilyTag::complete},
        {"path", FamilyTag::path},
        {"cycle", FamilyTag::cycle},
        {"star", FamilyTag::star},
        {"star_plus_edge", FamilyTag::star_plus_edge},
        {"double_star", FamilyTag::double_star},
        {"fan", FamilyTag::fan},
        {"empty", FamilyTag::empty},
    };
    if (family == "extremal") {
        if (params.size() != 2)
            throw ParameterError("family extremal takes two parameters: k, m");
        return extremal_graph(static_cast<int>(params[0]), params[1]);
    }
    auto it = tags.find(family);
    if (it == tags.end()) throw ParameterError("unknown family: " + family);
    return construct({it->second, params});
}

ordered_json certificate_json(const SpectralCertificate& c) {
    ordered_json j;
    j["lambda_lo"] = c.lambda_lo;
    j["lambda_hi"] = c.lambda_hi;
    j["iterations"] = c.iterations;
    j["residual"] = c.residual;
    j["restricted_to_component"] = c.restricted_to_component;
    j["perron"] = c.perron;
    return j;
}

ordered_json audit_json(const LemmaAudit& a) {
    ordered_json dec;
    dec["u_star"] = a.decomposition.u_star;
    dec["U"] = a.decomposition.U;
    dec["W"] = a.decomposition.W;
    dec["U0"] = a.decomposition.U0;
    dec["U_plus"] = a.decomposition.U_plus;
    dec["e_U"] = a.decomposition.e_U;
    dec["e_W"] = a.decomposition.e_W;
    dec["e_UW"] = a.decomposition.e_UW;
    dec["components"] = ordered_json::array();
    for (const auto& c : a.decomposition.components) {
        ordered_json jc;
        jc["vertices"] = c.vertices;
        jc["shape"] = c.shape.name();
        jc["gamma"] = c.gamma;
        dec["components"].push_back(std::move(jc));
    }

    ordered_json j;
    j["m"] = a.m;
    j["lambda_lo"] = a.lambda_lo;
    j["lambda_hi"] = a.lambda_hi;
    j["hypothesis"] = {{"residual", a.hypothesis_residual}, {"holds", a.hypothesis_holds}};
    j["decomposition"] = std::move(dec);
    j["inequality_1"] = {{"lhs", a.master_lhs}, {"rhs", a.master_rhs}};
    j["checks"] = ordered_json::array();
    for (const auto& c : a.checks)
        j["checks"].push_back({{"name", c.name}, {"holds", c.holds}, {"residual", c.residual}});
    return j;
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for spectral extremal problems on fan-free graphs"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "print the graph6 of a named family");
    std::string family;
    std::vector<long> params;
    c_construct->add_option("--family", family, "family name")->required();
    c_construct->add_option("--params", params, "family parameters")->delimiter(',');

    // lambda
    auto* c_lambda = app.add_subcommand("lambda", "certified spectral radius of a graph");
    std::string g6;
    double tol = 1e-10;
    bool pretty = false;
    c_lambda->add_option("--g6", g6, "graph6 string")->required();
    c_lambda->add_option("--tol", tol, "enclosure width target");
    c_lambda->add_flag("--pretty", pretty, "indent the JSON");

    // fanfree
    auto* c_fanfree = app.add_subcommand("fanfree", "test for a fan subgraph");
    std::string ff_g6;
    int ff_k = 6;
    bool ff_pretty = false;
    c_fanfree->add_option("--g6", ff_g6, "graph6 string")->required();
    c_fanfree->add_option("--k", ff_k, "fan order")->required();
    c_fanfree->add_flag("--pretty", ff_pretty, "indent the JSON");

    // bound
    auto* c_bound = app.add_subcommand("bound", "conjectured spectral ceiling for given k, m");
    long b_k = 2, b_m = 0;
    c_bound->add_option("--k", b_k, "clique parameter")->required();
    c_bound->add_option("--m", b_m, "edge count")->required();

    // enumerate
    auto* c_enum = app.add_subcommand("enumerate", "stream graph6 of the classes with m edges");
    long e_m = 0;
    int e_k = 0, e_jobs = 1, e_nmin = 0, e_nmax = 0;
    bool e_all = false;
    c_enum->add_option("--m", e_m, "edge count")->required();
    c_enum->add_option("--k", e_k, "exclude fans on k vertices");
    c_enum->add_option("--jobs", e_jobs, "worker threads");
    c_enum->add_option("--n-min", e_nmin, "smallest vertex count to report");
    c_enum->add_option("--n-max", e_nmax, "largest vertex count to build");
    c_enum->add_flag("--all", e_all, "include disconnected graphs");

    // search
    auto* c_search = app.add_subcommand("search", "hill-climb for the largest spectral radius");
    SearchOptions so;
    bool s_pretty = false;
    c_search->add_option("--m", so.m, "edge count")->required();
    c_search->add_option("--k", so.fan_order, "fan order to stay free of");
    c_search->add_option("--restarts", so.restarts, "independent climbs");
    c_search->add_option("--seed", so.seed, "RNG seed");
    c_search->add_option("--jobs", so.jobs, "worker threads");
    c_search->add_option("--move-budget", so.move_budget, "accepted moves per restart");
    c_search->add_option("--tol", so.tol, "certificate width target");
    c_search->add_flag("--pretty", s_pretty, "indent the JSON");

    // analyze
    auto* c_analyze = app.add_subcommand("analyze", "structural audit of a fan-free graph");
    std::string a_g6;
    int a_k = 6;
    bool a_pretty = false;
    c_analyze->add_option("--g6", a_g6, "graph6 string")->required();
    c_analyze->add_option("--k", a_k, "fan order")->required();
    c_analyze->add_flag("--pretty", a_pretty, "indent the JSON");

    // verify
    auto* c_verify = app.add_subcommand("verify", "CSV table of maxima vs the bound");
    int v_k = 2;
    std::vector<long> v_m;
    VerifyTableOptions vopts;
    c_verify->add_option("--k", v_k, "bound parameter")->required();
    c_verify->add_option("--m", v_m, "edge counts")->required()->delimiter(',');
    c_verify->add_option("--exhaustive-limit", vopts.exhaustive_limit,
                         "largest m enumerated exhaustively");
    c_verify->add_option("--restarts", vopts.restarts, "search restarts above the limit");
    c_verify->add_option("--move-budget", vopts.move_budget, "accepted moves per restart");
    c_verify->add_option("--seed", vopts.seed, "search RNG seed");
    c_verify->add_option("--jobs", vopts.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (c_construct->parsed()) {
        out << to_graph6(construct_family(family, params)) << '\n';
    } else if (c_lambda->parsed()) {
        emit(out, certificate_json(spectral_radius(from_graph6(g6), tol)), pretty);
    } else if (c_fanfree->parsed()) {
        const auto witness = contains_fan(from_graph6(ff_g6), ff_k);
        ordered_json j;
        j["contains"] = witness.has_value();
        if (witness) j["witness"] = {{"hub", witness->hub}, {"path", witness->path}};
        emit(out, j, ff_pretty);
    } else if (c_bound->parsed()) {
        out << fmt_real(conjecture_bound(static_cast<int>(b_k), b_m)) << '\n';
    } else if (c_enum->parsed()) {
        EnumSpec spec;
        spec.m = e_m;
        if (e_k != 0) spec.fan_order = e_k;
        spec.n_min = e_nmin;
        spec.n_max = e_nmax;
        spec.connected_only = !e_all;
        auto print = [&](const Graph& g) { out << to_graph6(g) << '\n'; };
        if (e_all)
            enumerate_all(spec, print, e_jobs);
        else
            enumerate_connected(spec, print, e_jobs);
    } else if (c_search->parsed()) {
        const SearchReport rep = local_search(so);
        ordered_json j;
        j["best_g6"] = rep.best_g6;
        j["lambda_lo"] = rep.lambda_lo;
        j["lambda_hi"] = rep.lambda_hi;
        j["restarts_used"] = rep.restarts_used;
        j["moves_accepted"] = rep.moves_accepted;
        j["seed"] = rep.seed;
        emit(out, j, s_pretty);
    } else if (c_analyze->parsed()) {
        emit(out, audit_json(audit(from_graph6(a_g6), a_k)), a_pretty);
    } else if (c_verify->parsed()) {
        out << verification_table_csv(verify_table(v_k, v_m, vopts));
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    if (const char* cap = std::getenv("FANFREE_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end == cap || *end != '\0' || v < 1) {
            err << "error: FANFREE_MAX_N must be a positive integer, got \"" << cap << "\"\n";
            return 2;
        }
        try {
            set_canonicalization_cap(static_cast<int>(v));
        } catch (const ParameterError& e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
    }
    try {
        return dispatch(argc, argv, out, err);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const StructureError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const MoveError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const FeasibilityError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
}

} // namespace fanfree::cli
