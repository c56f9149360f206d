#include "fanfree/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace fanfree {

namespace {

constexpr int kDefaultCap = 16;
constexpr long kNodeBudget = 4'000'000;

std::atomic<int> g_cap{kDefaultCap};

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Equitable refinement. Colors index cells in canonical order: every round
// re-sorts vertices by (color, neighbor counts per color) and renumbers by
// distinct-key rank, so the result depends only on the partition and the
// adjacency, not on vertex labels. Returns the number of colors.
int refine(const Graph& g, std::vector<int>& color, int ncolors) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> key(n);
    std::vector<int> order(n);
    while (true) {
        for (int v = 0; v < n; ++v) {
            auto& k = key[v];
            k.assign(1 + ncolors, 0);
            k[0] = color[v];
            for (int u : g.neighbors(v)) ++k[1 + color[u]];
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return key[a] < key[b]; });
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && key[order[i]] != key[order[i - 1]]) ++next;
            color[order[i]] = next;
        }
        if (next + 1 == ncolors) return ncolors;
        ncolors = next + 1;
    }
}

// Splits v off the front of its cell.
int individualize(std::vector<int>& color, int ncolors, int v) {
    const int cv = color[v];
    for (int& c : color)
        if (c > cv) ++c;
    for (std::size_t u = 0; u < color.size(); ++u)
        if (static_cast<int>(u) != v && color[u] == cv) color[u] = cv + 1;
    return ncolors + 1;
}

std::vector<std::uint8_t> pack_leaf(const Graph& g, const std::vector<int>& ord) {
    const int n = g.vertex_count();
    std::vector<std::uint8_t> out;
    out.reserve(2 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8);
    out.push_back(static_cast<std::uint8_t>(n & 0xff));
    out.push_back(static_cast<std::uint8_t>((n >> 8) & 0xff));
    int acc = 0, nbits = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) | (g.has_edge(ord[i], ord[j]) ? 1 : 0);
            if (++nbits == 8) {
                out.push_back(static_cast<std::uint8_t>(acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return out;
}

struct SearchState {
    const Graph& g;
    int n;
    std::vector<std::uint8_t> best;
    std::vector<int> best_ord;
    bool have_best = false;
    std::vector<std::vector<int>> autos;
    long nodes = 0;
};

bool fixes_prefix(const std::vector<int>& perm, const std::vector<int>& prefix) {
    for (int v : prefix)
        if (perm[v] != v) return false;
    return true;
}

void leaf(SearchState& st, const std::vector<int>& color) {
    std::vector<int> ord(st.n);
    for (int v = 0; v < st.n; ++v) ord[color[v]] = v;
    auto s = pack_leaf(st.g, ord);
    if (!st.have_best || s < st.best) {
        st.best = std::move(s);
        st.best_ord = ord;
        st.have_best = true;
    } else if (s == st.best) {
        // Two orderings with the same adjacency string give an automorphism.
        std::vector<int> a(st.n);
        bool identity = true;
        for (int i = 0; i < st.n; ++i) {
            a[st.best_ord[i]] = ord[i];
            identity = identity && st.best_ord[i] == ord[i];
        }
        if (!identity) st.autos.push_back(std::move(a));
    }
}

void descend(SearchState& st, std::vector<int> color, int ncolors, std::vector<int>& prefix) {
    if (++st.nodes > kNodeBudget)
        throw CapacityError("canonicalization search exceeded its node budget");
    ncolors = refine(st.g, color, ncolors);
    if (ncolors == st.n) {
        leaf(st, color);
        return;
    }
    int target = -1;
    for (int c = 0; c < ncolors && target < 0; ++c) {
        int count = 0;
        for (int v = 0; v < st.n; ++v) count += color[v] == c;
        if (count > 1) target = c;
    }
    std::vector<int> cell;
    for (int v = 0; v < st.n; ++v)
        if (color[v] == target) cell.push_back(v);

    std::vector<int> tried;
    for (int v : cell) {
        // Skip v if a known automorphism fixing the branch prefix maps it into
        // the orbit of an already-explored sibling. Rebuilt each time so
        // automorphisms found under earlier siblings take effect immediately.
        Dsu dsu(st.n);
        for (const auto& a : st.autos)
            if (fixes_prefix(a, prefix))
                for (int u = 0; u < st.n; ++u) dsu.unite(u, a[u]);
        bool skip = false;
        for (int u : tried)
            if (dsu.find(u) == dsu.find(v)) {
                skip = true;
                break;
            }
        if (skip) continue;
        tried.push_back(v);
        std::vector<int> child = color;
        int child_colors = individualize(child, ncolors, v);
        prefix.push_back(v);
        descend(st, std::move(child), child_colors, prefix);
        prefix.pop_back();
    }
}

} // namespace

int canonicalization_cap() { return g_cap.load(); }

void set_canonicalization_cap(int n) {
    if (n < 0) throw ParameterError("canonicalization cap must be nonnegative");
    g_cap.store(n);
}

CanonicalResult canonicalize(const Graph& g) {
    const int n = g.vertex_count();
    const int cap = canonicalization_cap();
    if (n > cap)
        throw CapacityError("canonicalization refused for n=" + std::to_string(n) +
                            " above the cap of " + std::to_string(cap) +
                            " (FANFREE_MAX_N raises it)");
    CanonicalResult res;
    if (n == 0) {
        res.form = {0, 0};
        return res;
    }
    SearchState st{g, n, {}, {}, false, {}, 0};
    std::vector<int> prefix;
    descend(st, std::vector<int>(n, 0), 1, prefix);
    res.form = std::move(st.best);
    res.ordering = std::move(st.best_ord);
    return res;
}

std::vector<std::uint8_t> canonical_form(const Graph& g) { return canonicalize(g).form; }

Graph canonical_graph(const Graph& g) {
    const auto res = canonicalize(g);
    std::vector<int> perm(g.vertex_count());
    for (int pos = 0; pos < g.vertex_count(); ++pos) perm[res.ordering[pos]] = pos;
    return g.permuted(perm);
}

} // namespace fanfree
