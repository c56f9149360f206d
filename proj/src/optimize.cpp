#include "fanfree/optimize.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "fanfree/canonical.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/pattern.hpp"

namespace fanfree {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step decorrelates per-restart streams from a shared seed.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph random_connected_with_m(std::mt19937_64& rng, int n, long m) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        b.toggle_unchecked(v, pick(rng));
    }
    long placed = n - 1;
    std::uniform_int_distribution<int> anyv(0, n - 1);
    while (placed < m) {
        const int u = anyv(rng), v = anyv(rng);
        if (u == v || b.has_edge(u, v)) continue;
        b.toggle_unchecked(u, v);
        ++placed;
    }
    return b.build();
}

// State key for the plateau tabu: canonical bytes when the graph fits the
// canonicalization cap, otherwise its labeled graph6 (weaker, still sound:
// tabu only ever blocks sideways moves).
std::string state_key(const Graph& g) {
    if (g.vertex_count() <= canonicalization_cap()) {
        auto f = canonical_form(g);
        return std::string(f.begin(), f.end());
    }
    return "g6:" + to_graph6(g);
}

Graph seed_graph(std::mt19937_64& rng, long m, int k) {
    int n_lo = 2;
    while (static_cast<long>(n_lo) * (n_lo - 1) / 2 < m) ++n_lo;
    const long n_hi = std::min<long>(m + 1, Graph::kMaxVertices);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<long> nd(n_lo, n_hi);
        const int n = static_cast<int>(nd(rng));
        Graph g = random_connected_with_m(rng, n, m);
        if (!contains_fan(g, k)) return g;
    }
    // A star on m edges is always fan-free and connected.
    if (m + 1 <= Graph::kMaxVertices) return star_graph(static_cast<int>(m));
    throw FeasibilityError("no fan-free connected seed found for m = " + std::to_string(m));
}

struct RestartResult {
    Graph best;
    SpectralCertificate cert;
    long moves = 0;
    std::string key;
};

struct Climb {
    const SearchOptions& opts;
    std::mt19937_64 rng;
    std::set<std::string> tabu;

    explicit Climb(const SearchOptions& o, std::uint64_t stream)
        : opts(o), rng(mix_seed(o.seed, stream)) {}

    // Vertex orderings by Perron entry; ties broken by index for stability.
    static std::vector<int> by_perron(const std::vector<double>& x, bool descending) {
        std::vector<int> idx(x.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return descending ? x[a] > x[b] : x[a] < x[b];
        });
        return idx;
    }

    // One hill-climbing step: first acceptable proposal wins. Returns false
    // at a local optimum (or when the per-step evaluation cap is reached).
    bool step(Graph& g, SpectralCertificate& cert, int& sideways, long& accepted) {
        const auto u_order = by_perron(cert.perron, true);
        const auto v_order = by_perron(cert.perron, false);
        int evals = 0;
        for (int u : u_order) {
            for (int v : v_order) {
                if (u == v) continue;
                // Movable neighbors of v, cheapest (smallest Perron) first.
                std::vector<int> cand;
                for (int s : g.neighbors(v))
                    if (s != u && !g.has_edge(u, s)) cand.push_back(s);
                if (cand.empty()) continue;
                std::stable_sort(cand.begin(), cand.end(),
                                 [&](int a, int b) { return cert.perron[a] < cert.perron[b]; });
                // Singleton moves first, then growing prefixes.
                std::vector<std::vector<int>> proposals;
                for (int s : cand) proposals.push_back({s});
                for (std::size_t len = 2; len <= cand.size(); ++len)
                    proposals.emplace_back(cand.begin(), cand.begin() + len);
                for (const auto& s_set : proposals) {
                    GraphBuilder b(g);
                    for (int s : s_set) {
                        b.toggle_unchecked(v, s);
                        b.toggle_unchecked(u, s);
                    }
                    Graph moved = b.build().without_isolated();
                    if (!moved.is_connected()) continue;
                    if (contains_fan(moved, opts.fan_order)) continue;
                    if (++evals > opts.eval_cap) return false;
                    SpectralCertificate next = spectral_radius(moved, opts.tol);
                    if (next.lambda_lo > cert.lambda_hi) {
                        g = std::move(moved);
                        cert = std::move(next);
                        sideways = 0;
                        ++accepted;
                        tabu.insert(state_key(g));
                        return true;
                    }
                    if (next.lambda_hi >= cert.lambda_lo && sideways < opts.sideways_limit) {
                        const std::string key = state_key(moved);
                        if (!tabu.count(key)) {
                            g = std::move(moved);
                            cert = std::move(next);
                            ++sideways;
                            ++accepted;
                            tabu.insert(key);
                            return true;
                        }
                    }
                }
            }
        }
        return false;
    }

    RestartResult run() {
        Graph g = seed_graph(rng, opts.m, opts.fan_order);
        SpectralCertificate cert = spectral_radius(g, opts.tol);
        tabu.clear();
        tabu.insert(state_key(g));
        long accepted = 0;
        int sideways = 0;
        while (accepted < opts.move_budget) {
            if (!step(g, cert, sideways, accepted)) break;
        }
        RestartResult res{std::move(g), std::move(cert), accepted, {}};
        res.key = state_key(res.best);
        return res;
    }
};

} // namespace

Graph rotate(const Graph& g, const RotationMove& move, bool allow_empty) {
    const int n = g.vertex_count();
    if (move.u < 0 || move.u >= n || move.v < 0 || move.v >= n)
        throw MoveError("rotation endpoints out of range");
    if (move.u == move.v) throw MoveError("rotation requires distinct u and v");
    if (!g.is_connected()) throw StructureError("rotation is defined on connected graphs");
    if (move.s.empty()) {
        if (allow_empty) return g;
        throw MoveError("rotation set S must be nonempty");
    }
    std::set<int> seen;
    GraphBuilder b(g);
    for (int s : move.s) {
        if (s == move.u) throw MoveError("S must not contain the target u");
        if (s == move.v) throw MoveError("S must not contain the source v");
        if (s < 0 || s >= n) throw MoveError("S member out of range");
        if (!seen.insert(s).second) throw MoveError("duplicate member in S");
        if (!g.has_edge(move.v, s))
            throw MoveError("S member " + std::to_string(s) + " is not a neighbor of v");
        if (g.has_edge(move.u, s))
            throw MoveError("S member " + std::to_string(s) + " is already a neighbor of u");
        b.toggle_unchecked(move.v, s);
        b.toggle_unchecked(move.u, s);
    }
    return b.build();
}

SearchReport local_search(const SearchOptions& opts) {
    if (opts.m < 1) throw FeasibilityError("no connected graph with m = " + std::to_string(opts.m));
    if (opts.fan_order < 3)
        throw ParameterError("fan order must be at least 3, got " + std::to_string(opts.fan_order));
    if (opts.restarts < 1)
        throw ParameterError("restarts must be at least 1, got " + std::to_string(opts.restarts));
    if (opts.jobs < 1) throw ParameterError("jobs must be at least 1");

    std::vector<RestartResult> results(opts.restarts);
    const int workers = std::max(1, std::min(opts.jobs, opts.restarts));
    if (workers == 1) {
        for (int r = 0; r < opts.restarts; ++r) results[r] = Climb(opts, r).run();
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (int r = w; r < opts.restarts; r += workers) results[r] = Climb(opts, r).run();
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }

    // Best certified lower bound wins; among restarts whose enclosures
    // overlap it, the least state key is reported so that worker scheduling
    // cannot change the outcome.
    std::size_t top = 0;
    for (std::size_t r = 1; r < results.size(); ++r)
        if (results[r].cert.lambda_lo > results[top].cert.lambda_lo) top = r;
    std::size_t pick = top;
    for (std::size_t r = 0; r < results.size(); ++r) {
        if (results[r].cert.lambda_hi < results[top].cert.lambda_lo) continue;
        if (results[r].key < results[pick].key) pick = r;
    }

    const RestartResult& win = results[pick];
    if (win.best.edge_count() != opts.m)
        throw std::logic_error("search result lost edges");
    if (contains_fan(win.best, opts.fan_order))
        throw std::logic_error("search result failed fan-freeness re-validation");

    SearchReport rep;
    rep.best_g6 = to_graph6(win.best.vertex_count() <= canonicalization_cap()
                                ? canonical_graph(win.best)
                                : win.best);
    rep.lambda_lo = win.cert.lambda_lo;
    rep.lambda_hi = win.cert.lambda_hi;
    rep.restarts_used = opts.restarts;
    rep.moves_accepted = 0;
    for (const auto& r : results) rep.moves_accepted += r.moves;
    rep.seed = opts.seed;
    return rep;
}

RotationLemmaReport check_rotation_lemma(long trials, int n_lo, int n_hi, std::uint64_t seed) {
    if (trials < 1) throw ParameterError("trials must be at least 1");
    if (n_lo < 3 || n_hi < n_lo)
        throw ParameterError("need 3 <= n_lo <= n_hi for rotation sampling");

    RotationLemmaReport rep;
    for (long trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        Graph g = empty_graph(0);
        RotationMove move;
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            std::uniform_int_distribution<int> nd(n_lo, n_hi);
            const int n = nd(rng);
            const long mmax = std::min<long>(static_cast<long>(n) * (n - 1) / 2, 2L * n);
            std::uniform_int_distribution<long> md(n - 1, mmax);
            Graph cand = random_connected_with_m(rng, n, md(rng));
            const auto x = spectral_radius(cand, 1e-10).perron;
            // Legal pairs under the lemma hypothesis x_u >= x_v.
            std::vector<RotationMove> legal;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v || x[u] < x[v]) continue;
                    std::vector<int> s;
                    for (int w : cand.neighbors(v))
                        if (w != u && !cand.has_edge(u, w)) s.push_back(w);
                    if (!s.empty()) legal.push_back({u, v, std::move(s)});
                }
            if (legal.empty()) continue;
            std::uniform_int_distribution<std::size_t> pd(0, legal.size() - 1);
            RotationMove chosen = legal[pd(rng)];
            // Random nonempty subset of the movable neighbors.
            std::vector<int> subset;
            for (int w : chosen.s)
                if (rng() & 1) subset.push_back(w);
            if (subset.empty()) {
                std::uniform_int_distribution<std::size_t> sd(0, chosen.s.size() - 1);
                subset.push_back(chosen.s[sd(rng)]);
            }
            chosen.s = std::move(subset);
            g = std::move(cand);
            move = std::move(chosen);
            found = true;
        }
        if (!found) throw std::logic_error("rotation sampler failed to find a legal move");

        const auto before = spectral_radius(g, 1e-10);
        const auto after = spectral_radius(rotate(g, move), 1e-10);
        ++rep.trials;
        if (after.lambda_lo > before.lambda_hi)
            ++rep.certified_increase;
        else if (after.lambda_hi < before.lambda_lo)
            ++rep.violations;
        else
            ++rep.inconclusive;
    }
    return rep;
}

} // namespace fanfree
