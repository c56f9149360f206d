#include "fanfree/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace fanfree {

namespace {

// Depth-first simple-path search inside one component, longest-first: the
// current path is always extended before alternatives are tried.
struct PathSearch {
    const Graph& g;
    int t;
    std::vector<int>* witness;
    std::vector<int> path;
    std::vector<bool> used;

    // Failed (endpoint, visited-mask) states are memoized for components of
    // at most kMemoBits vertices; whether a required-length extension exists
    // depends only on that pair, since the remaining length is a function of
    // the mask. local[] maps graph labels to component-local bit positions.
    static constexpr int kMemoBits = 20;
    static constexpr std::size_t kMemoLimit = 1u << 22;
    bool memo_on = false;
    std::vector<int> local;
    std::uint32_t mask = 0;
    std::unordered_set<std::uint64_t> failed;

    explicit PathSearch(const Graph& g, int t, std::vector<int>* w)
        : g(g), t(t), witness(w), used(g.vertex_count(), false), local(g.vertex_count(), -1) {}

    bool extend(int v) {
        path.push_back(v);
        used[v] = true;
        if (memo_on) mask |= std::uint32_t{1} << local[v];
        bool ok = false;
        if (static_cast<int>(path.size()) == t) {
            ok = true;
        } else {
            const std::uint64_t key =
                memo_on ? (std::uint64_t{mask} << 5 | static_cast<std::uint64_t>(local[v])) : 0;
            if (!memo_on || !failed.count(key)) {
                for (int u : g.neighbors(v)) {
                    if (!used[u] && extend(u)) {
                        ok = true;
                        break;
                    }
                }
                if (!ok && memo_on && failed.size() < kMemoLimit) failed.insert(key);
            }
        }
        if (ok && witness && static_cast<int>(path.size()) == t) *witness = path;
        path.pop_back();
        used[v] = false;
        if (memo_on) mask &= ~(std::uint32_t{1} << local[v]);
        return ok;
    }
};

} // namespace

Graph neighborhood_subgraph(const Graph& g, int u, std::vector<int>* label_map) {
    auto nbrs = g.neighbors(u);
    if (label_map) *label_map = nbrs;
    return g.induced(nbrs);
}

bool has_path_on(const Graph& g, int t, std::vector<int>* witness) {
    if (t < 1) throw ParameterError("path length must be at least 1 vertex, got " + std::to_string(t));
    if (t == 1) {
        if (g.vertex_count() == 0) return false;
        if (witness) *witness = {0};
        return true;
    }
    if (t > g.vertex_count()) return false;
    for (const auto& comp : g.components()) {
        if (static_cast<int>(comp.size()) < t) continue;
        PathSearch search(g, t, witness);
        if (comp.size() <= PathSearch::kMemoBits) {
            search.memo_on = true;
            for (std::size_t i = 0; i < comp.size(); ++i) search.local[comp[i]] = static_cast<int>(i);
        }
        // Start points in decreasing-degree order within the component.
        std::vector<int> starts(comp.begin(), comp.end());
        std::stable_sort(starts.begin(), starts.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        for (int s : starts)
            if (search.extend(s)) return true;
    }
    return false;
}

std::optional<FanWitness> contains_fan(const Graph& g, int k) {
    if (k < 3) throw ParameterError("fan order must be at least 3, got " + std::to_string(k));
    std::vector<int> hubs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) hubs[v] = v;
    std::stable_sort(hubs.begin(), hubs.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int hub : hubs) {
        if (g.degree(hub) < k - 1) break; // sorted, nothing later can host a fan
        std::vector<int> labels;
        Graph nbhd = neighborhood_subgraph(g, hub, &labels);
        std::vector<int> local_path;
        if (!has_path_on(nbhd, k - 1, &local_path)) continue;
        FanWitness w;
        w.hub = hub;
        for (int v : local_path) w.path.push_back(labels[v]);
        // The witness is re-checked against g before being handed out.
        for (std::size_t i = 0; i < w.path.size(); ++i) {
            if (!g.has_edge(hub, w.path[i]))
                throw std::logic_error("fan witness spoke missing in host graph");
            if (i + 1 < w.path.size() && !g.has_edge(w.path[i], w.path[i + 1]))
                throw std::logic_error("fan witness path edge missing in host graph");
        }
        return w;
    }
    return std::nullopt;
}

bool is_fan_free(const Graph& g, int k) { return !contains_fan(g, k).has_value(); }

bool is_triangle_free(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            if (g.codegree(u, v) > 0) return false;
        }
    return true;
}

} // namespace fanfree
