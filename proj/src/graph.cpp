#include "fanfree/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace fanfree {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_vertex_count(int n) {
    if (n < 0) throw ParameterError("vertex count must be nonnegative, got " + std::to_string(n));
    if (n > Graph::kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(n) + " exceeds the cap of " +
                            std::to_string(Graph::kMaxVertices));
}

void check_endpoint(int v, int n) {
    if (v < 0 || v >= n)
        throw ParameterError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

} // namespace

GraphBuilder::GraphBuilder(int n) : n_(n), wpr_(words_for(n)) {
    check_vertex_count(n);
    bits_.assign(static_cast<std::size_t>(n_) * wpr_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.vertex_count()), wpr_(g.words_per_row()) {
    bits_.assign(g.row(0), g.row(0) + static_cast<std::size_t>(n_) * wpr_);
}

bool GraphBuilder::has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1u;
}

void GraphBuilder::add_edge(int u, int v) {
    check_endpoint(u, n_);
    check_endpoint(v, n_);
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw ParameterError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    toggle_unchecked(u, v);
}

void GraphBuilder::remove_edge(int u, int v) {
    check_endpoint(u, n_);
    check_endpoint(v, n_);
    if (u == v || !has_edge(u, v))
        throw ParameterError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "} to remove");
    toggle_unchecked(u, v);
}

void GraphBuilder::toggle_unchecked(int u, int v) {
    bits_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
}

Graph GraphBuilder::build() const {
    Graph g;
    g.n_ = n_;
    g.wpr_ = wpr_;
    g.bits_ = bits_;
    long twice_m = 0;
    for (std::uint64_t w : bits_) twice_m += std::popcount(w);
    g.m_ = twice_m / 2;
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

int Graph::degree(int u) const {
    check_endpoint(u, n_);
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < wpr_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int u = 0; u < n_; ++u) out[u] = degree(u);
    return out;
}

std::vector<int> Graph::neighbors(int u) const {
    check_endpoint(u, n_);
    std::vector<int> out;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < wpr_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::codegree(int u, int v) const {
    check_endpoint(u, n_);
    check_endpoint(v, n_);
    int c = 0;
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rv = row(v);
    for (int w = 0; w < wpr_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

Graph Graph::with_edge(int u, int v) const {
    GraphBuilder b(*this);
    b.add_edge(u, v);
    return b.build();
}

Graph Graph::without_edge(int u, int v) const {
    GraphBuilder b(*this);
    b.remove_edge(u, v);
    return b.build();
}

Graph Graph::induced(std::span<const int> vertices) const {
    const int k = static_cast<int>(vertices.size());
    std::vector<int> new_label(n_, -1);
    for (int i = 0; i < k; ++i) {
        check_endpoint(vertices[i], n_);
        if (new_label[vertices[i]] != -1)
            throw ParameterError("duplicate vertex " + std::to_string(vertices[i]) + " in induced set");
        new_label[vertices[i]] = i;
    }
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int v : neighbors(vertices[i]))
            if (new_label[v] > i) b.toggle_unchecked(i, new_label[v]);
    return b.build();
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw ParameterError("permutation length " + std::to_string(perm.size()) +
                             " does not match n=" + std::to_string(n_));
    std::vector<bool> hit(n_, false);
    for (int p : perm) {
        check_endpoint(p, n_);
        if (hit[p]) throw ParameterError("permutation is not a bijection");
        hit[p] = true;
    }
    GraphBuilder b(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) b.toggle_unchecked(perm[u], perm[v]);
    return b.build();
}

Graph Graph::without_isolated() const {
    std::vector<int> keep;
    keep.reserve(n_);
    for (int u = 0; u < n_; ++u)
        if (degree(u) > 0) keep.push_back(u);
    if (static_cast<int>(keep.size()) == n_) return *this;
    return induced(keep);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return static_cast<int>(components().front().size()) == n_;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(n_, false);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

void require_arity(const GraphFamily& f, std::size_t want, const char* name) {
    if (f.params.size() != want)
        throw ParameterError(std::string(name) + " takes " + std::to_string(want) +
                             " parameter(s), got " + std::to_string(f.params.size()));
}

int as_vertex_param(long p, const char* name, long lo) {
    if (p < lo)
        throw ParameterError(std::string(name) + " parameter " + std::to_string(p) +
                             " below minimum " + std::to_string(lo));
    if (p > Graph::kMaxVertices)
        throw CapacityError(std::string(name) + " parameter " + std::to_string(p) +
                            " exceeds the vertex cap of " + std::to_string(Graph::kMaxVertices));
    return static_cast<int>(p);
}

} // namespace

Graph complete_graph(int n) {
    check_vertex_count(n);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.toggle_unchecked(u, v);
    return b.build();
}

Graph path_graph(int n) {
    if (n < 1) throw ParameterError("path needs at least 1 vertex, got " + std::to_string(n));
    check_vertex_count(n);
    GraphBuilder b(n);
    for (int u = 0; u + 1 < n; ++u) b.toggle_unchecked(u, u + 1);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParameterError("cycle needs at least 3 vertices, got " + std::to_string(n));
    check_vertex_count(n);
    GraphBuilder b(n);
    for (int u = 0; u + 1 < n; ++u) b.toggle_unchecked(u, u + 1);
    b.toggle_unchecked(n - 1, 0);
    return b.build();
}

Graph star_graph(int r) {
    if (r < 0) throw ParameterError("star needs a nonnegative leaf count, got " + std::to_string(r));
    check_vertex_count(r + 1);
    GraphBuilder b(r + 1);
    for (int v = 1; v <= r; ++v) b.toggle_unchecked(0, v);
    return b.build();
}

Graph star_plus_edge_graph(int r) {
    if (r < 2) throw ParameterError("star-plus-edge needs at least 2 leaves, got " + std::to_string(r));
    GraphBuilder b(star_graph(r));
    b.toggle_unchecked(1, 2);
    return b.build();
}

Graph double_star_graph(int a, int b) {
    if (a < 1 || b < 1)
        throw ParameterError("double star needs positive pendant counts, got a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
    check_vertex_count(a + b + 2);
    GraphBuilder g(a + b + 2);
    g.toggle_unchecked(0, 1);
    for (int v = 2; v <= a + 1; ++v) g.toggle_unchecked(0, v);
    for (int v = a + 2; v <= a + b + 1; ++v) g.toggle_unchecked(1, v);
    return g.build();
}

Graph fan_graph(int k) {
    if (k < 3) throw ParameterError("fan order must be at least 3, got " + std::to_string(k));
    check_vertex_count(k);
    GraphBuilder b(k);
    for (int v = 1; v < k; ++v) b.toggle_unchecked(0, v);
    for (int v = 1; v + 1 < k; ++v) b.toggle_unchecked(v, v + 1);
    return b.build();
}

Graph empty_graph(int n) {
    check_vertex_count(n);
    return GraphBuilder(n).build();
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw ParameterError("complete bipartite sides must be nonnegative");
    return join(empty_graph(a), empty_graph(b));
}

Graph construct(const GraphFamily& family) {
    switch (family.tag) {
        case FamilyTag::complete:
            require_arity(family, 1, "complete");
            return complete_graph(as_vertex_param(family.params[0], "complete", 0));
        case FamilyTag::path:
            require_arity(family, 1, "path");
            return path_graph(as_vertex_param(family.params[0], "path", 1));
        case FamilyTag::cycle:
            require_arity(family, 1, "cycle");
            return cycle_graph(as_vertex_param(family.params[0], "cycle", 3));
        case FamilyTag::star:
            require_arity(family, 1, "star");
            return star_graph(as_vertex_param(family.params[0], "star", 0));
        case FamilyTag::star_plus_edge:
            require_arity(family, 1, "star_plus_edge");
            return star_plus_edge_graph(as_vertex_param(family.params[0], "star_plus_edge", 2));
        case FamilyTag::double_star:
            require_arity(family, 2, "double_star");
            return double_star_graph(as_vertex_param(family.params[0], "double_star", 1),
                                     as_vertex_param(family.params[1], "double_star", 1));
        case FamilyTag::fan:
            require_arity(family, 1, "fan");
            return fan_graph(as_vertex_param(family.params[0], "fan", 3));
        case FamilyTag::empty:
            require_arity(family, 1, "empty");
            return empty_graph(as_vertex_param(family.params[0], "empty", 0));
    }
    throw ParameterError("unknown family tag");
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    check_vertex_count(ng + nh);
    GraphBuilder b(ng + nh);
    for (const auto& [u, v] : g.edges()) b.toggle_unchecked(u, v);
    for (const auto& [u, v] : h.edges()) b.toggle_unchecked(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) b.toggle_unchecked(u, ng + v);
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    check_vertex_count(ng + nh);
    GraphBuilder b(ng + nh);
    for (const auto& [u, v] : g.edges()) b.toggle_unchecked(u, v);
    for (const auto& [u, v] : h.edges()) b.toggle_unchecked(ng + u, ng + v);
    return b.build();
}

Graph extremal_graph(int k, long m) {
    if (k < 2) throw ParameterError("clique order k must be at least 2, got " + std::to_string(k));
    const long base = static_cast<long>(k) * (k - 1) / 2;
    // m = k*s + base with s >= 1, so feasible m ramp in steps of k starting at base + k.
    const long rem = m - base;
    if (rem < k) {
        throw ParameterError("no clique-join graph with k=" + std::to_string(k) + " has m=" +
                             std::to_string(m) + "; the smallest feasible edge count is " +
                             std::to_string(base + k));
    }
    if (rem % k != 0) {
        const long below = base + (rem / k) * k;
        throw ParameterError("no clique-join graph with k=" + std::to_string(k) + " has m=" +
                             std::to_string(m) + "; nearest feasible edge counts are " +
                             std::to_string(below) + " and " + std::to_string(below + k));
    }
    const long s = rem / k;
    check_vertex_count(static_cast<int>(std::min<long>(k + s, Graph::kMaxVertices + 1)));
    return join(complete_graph(k), empty_graph(static_cast<int>(s)));
}

} // namespace fanfree
