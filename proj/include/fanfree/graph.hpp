#ifndef FANFREE_GRAPH_HPP
#define FANFREE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanfree/errors.hpp"

namespace fanfree {

/// Immutable simple undirected graph with bit-packed adjacency rows.
/// Vertices are labeled 0..n-1. Rows are stored as ceil(n/64) little-endian
/// 64-bit words each; the adjacency is kept symmetric with a zero diagonal
/// and the edge count is cached at construction.
class Graph {
public:
    static constexpr int kMaxVertices = 512;

    Graph() = default;

    /// Builds a graph from an explicit edge list. Rejects self-loops,
    /// duplicate edges, out-of-range endpoints, and n beyond the capacity cap.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }
    int words_per_row() const { return wpr_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int u) const;
    std::vector<int> degrees() const;
    std::vector<int> neighbors(int u) const;
    std::vector<std::pair<int, int>> edges() const;

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * wpr_; }

    /// Number of common neighbors of u and v.
    int codegree(int u, int v) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    /// Induced subgraph on the given vertices, relabeled 0..k-1 in the
    /// order supplied. Vertices must be distinct and in range.
    Graph induced(std::span<const int> vertices) const;

    /// Relabels: vertex u becomes perm[u]. perm must be a bijection.
    Graph permuted(std::span<const int> perm) const;

    /// Removes isolated vertices, preserving the relative order of the rest.
    Graph without_isolated() const;

    bool is_connected() const;
    std::vector<std::vector<int>> components() const;

    /// Labeled equality (same n, identical adjacency bits).
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    int wpr_ = 0;
    long m_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for constructing Graph values edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    int vertex_count() const { return n_; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_unchecked(int u, int v);

    Graph build() const;

private:
    int n_;
    int wpr_;
    std::vector<std::uint64_t> bits_;
};

enum class FamilyTag { complete, path, cycle, star, star_plus_edge, double_star, fan, empty };

/// A named graph family plus its parameters. Parameter arity and ranges are
/// validated by construct().
struct GraphFamily {
    FamilyTag tag;
    std::vector<long> params;
};

/// Vertex labeling conventions, fixed so callers can reference vertices by index:
///   complete(n), empty(n):    0..n-1
///   path(n):                  path order 0-1-...-(n-1), n >= 1
///   cycle(n):                 cycle order with edge (n-1,0), n >= 3
///   star(r):                  center 0, leaves 1..r, r >= 0
///   star_plus_edge(r):        center 0, leaves 1..r, extra edge {1,2}, r >= 2
///   double_star(a,b):         spine 0-1, pendants 2..a+1 on 0, a+2..a+b+1 on 1, a,b >= 1
///   fan(k):                   hub 0, path 1-2-...-(k-1), k >= 3
Graph construct(const GraphFamily& family);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int r);
Graph star_plus_edge_graph(int r);
Graph double_star_graph(int a, int b);
Graph fan_graph(int k);
Graph empty_graph(int n);
Graph complete_bipartite(int a, int b);

/// Join G v H: disjoint union (g's labels first) plus all cross edges.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union, g's labels first.
Graph disjoint_union(const Graph& g, const Graph& h);

/// The family K_k v sK_1 with m edges, where s = m/k - (k-1)/2 must be a
/// positive integer; clique vertices come first. Throws ParameterError
/// naming the nearest feasible edge counts when m is infeasible.
Graph extremal_graph(int k, long m);

} // namespace fanfree

#endif
