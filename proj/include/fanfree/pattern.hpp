#ifndef FANFREE_PATTERN_HPP
#define FANFREE_PATTERN_HPP

#include <optional>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

/// A fan found as a subgraph: `hub` is adjacent to every vertex of `path`,
/// and consecutive `path` entries are adjacent. path.size() = k-1.
struct FanWitness {
    int hub;
    std::vector<int> path;
};

/// Subgraph of g induced on N(u). When label_map is given it receives, per
/// local vertex, the original label in g.
Graph neighborhood_subgraph(const Graph& g, int u, std::vector<int>* label_map = nullptr);

/// Whether g contains a path on t vertices as a subgraph. Fills witness
/// with one such vertex sequence when asked. Components smaller than t are
/// skipped; small components get a memo over (endpoint, visited-set) states.
bool has_path_on(const Graph& g, int t, std::vector<int>* witness = nullptr);

/// Searches for the fan on k vertices (hub joined to a path on k-1) as a
/// subgraph, k >= 3. Hubs are tried in decreasing-degree order. Returns the
/// first witness found, or nullopt for fan-free graphs.
std::optional<FanWitness> contains_fan(const Graph& g, int k);

bool is_fan_free(const Graph& g, int k);

bool is_triangle_free(const Graph& g);

} // namespace fanfree

#endif
