#include "doctest.h"

#include <map>
#include <set>

#include "fanfree/canonical.hpp"
#include "fanfree/graph.hpp"
#include "oracles.hpp"

using namespace fanfree;

namespace {

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(7);
    // Petersen: outer C5, inner pentagram, spokes. Vertex-transitive and
    // 3-regular, a worst case for pure refinement.
    Graph petersen = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    std::vector<Graph> pool = {path_graph(7),       cycle_graph(8),        star_graph(9),
                               complete_graph(6),   fan_graph(7),          double_star_graph(3, 4),
                               complete_bipartite(3, 4), extremal_graph(2, 13), petersen};
    for (const Graph& g : pool) {
        const auto base = canonical_form(g);
        for (int rep = 0; rep < 30; ++rep) {
            auto p = random_perm(rng, g.vertex_count());
            CHECK(canonical_form(g.permuted(p)) == base);
        }
    }
}

TEST_CASE("canonical graph is an isomorphic relabeling") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        std::uniform_int_distribution<int> nd(2, 10);
        const int n = nd(rng);
        std::uniform_int_distribution<long> md(n - 1, static_cast<long>(n) * (n - 1) / 2);
        Graph g = oracle::random_connected_graph(rng, n, md(rng));
        Graph cg = canonical_graph(g);
        CHECK(oracle::isomorphic(g, cg));
        CHECK(canonical_form(cg) == canonical_form(g));
        // Idempotent representative: relabeling the representative is a no-op.
        CHECK(canonical_graph(cg) == cg);
    }
}

TEST_CASE("equal forms exactly characterize isomorphism, exhaustively at n = 5") {
    // Bucket all 1024 labeled graphs on 5 vertices two ways: by the
    // all-permutations oracle string and by canonical_form. The partitions
    // must coincide.
    std::map<std::string, std::set<std::vector<std::uint8_t>>> oracle_to_forms;
    std::map<std::vector<std::uint8_t>, std::set<std::string>> form_to_oracles;
    oracle::for_all_labeled_graphs(5, [&](const Graph& g) {
        const auto form = canonical_form(g);
        const auto ref = oracle::perm_canonical_string(g);
        oracle_to_forms[ref].insert(form);
        form_to_oracles[form].insert(ref);
    });
    CHECK(oracle_to_forms.size() == 34); // distinct graphs on 5 vertices
    CHECK(form_to_oracles.size() == 34);
    for (const auto& [ref, forms] : oracle_to_forms) CHECK(forms.size() == 1);
    for (const auto& [form, refs] : form_to_oracles) CHECK(refs.size() == 1);
}

TEST_CASE("regular and highly symmetric graphs stay within budget") {
    CHECK(canonical_form(complete_graph(16)).size() == 2 + 15);
    CHECK(canonical_form(complete_bipartite(8, 8)) ==
          canonical_form(complete_bipartite(8, 8).permuted(std::vector<int>{
              8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4, 5, 6, 7})));
    CHECK(canonical_form(cycle_graph(16)) != canonical_form(complete_bipartite(8, 8)));
    // Two nonisomorphic 3-regular graphs on 8 vertices must separate.
    Graph cube = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                       {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                       {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    Graph k33_plus = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                           {6, 7}, {7, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(oracle::isomorphic(cube, k33_plus) ==
          (canonical_form(cube) == canonical_form(k33_plus)));
}

TEST_CASE("cap is enforced and adjustable") {
    CHECK(canonicalization_cap() == 16);
    CHECK_THROWS_AS(canonical_form(empty_graph(17)), CapacityError);
    set_canonicalization_cap(20);
    CHECK(canonical_form(cycle_graph(18)) == canonical_form(cycle_graph(18)));
    set_canonicalization_cap(16);
    CHECK_THROWS_AS(canonical_form(cycle_graph(18)), CapacityError);
    CHECK_THROWS_AS(set_canonicalization_cap(-1), ParameterError);
}

TEST_CASE("degenerate orders") {
    CHECK(canonical_form(empty_graph(0)) == std::vector<std::uint8_t>{0, 0});
    CHECK(canonical_form(empty_graph(1)) == std::vector<std::uint8_t>{1, 0});
    CHECK(canonical_form(complete_graph(2)).size() == 3);
}
