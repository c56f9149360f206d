#include "fanfree/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <thread>

#include "fanfree/canonical.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/optimize.hpp"
#include "fanfree/pattern.hpp"
#include "fanfree/spectral.hpp"

namespace fanfree {

namespace {

struct Stored {
    Graph g; // canonically labeled representative
    std::vector<std::uint8_t> form;
};

struct ResolvedSpec {
    long m;
    std::optional<int> fan_order;
    int n_min;
    int n_max;
};

ResolvedSpec resolve(const EnumSpec& spec, bool connected) {
    if (spec.m < 1) throw ParameterError("edge count must be at least 1, got " + std::to_string(spec.m));
    if (spec.fan_order && *spec.fan_order < 3)
        throw ParameterError("fan order must be at least 3, got " + std::to_string(*spec.fan_order));
    int n_min = spec.n_min;
    if (n_min == 0) {
        n_min = 2;
        while (static_cast<long>(n_min) * (n_min - 1) / 2 < spec.m) ++n_min;
    }
    // m edges reach m+1 vertices when connected (a tree) and 2m when
    // components may be split off (a perfect matching of K2 parts).
    const long n_reach = connected ? spec.m + 1 : 2 * spec.m;
    int n_max = spec.n_max;
    if (n_max == 0) n_max = static_cast<int>(std::min<long>(n_reach, Graph::kMaxVertices));
    if (n_min < 2) throw ParameterError("n_min must be at least 2, got " + std::to_string(n_min));
    if (n_max < n_min)
        throw ParameterError("empty vertex window: n_min=" + std::to_string(n_min) +
                             " n_max=" + std::to_string(n_max));
    if (n_max > canonicalization_cap())
        throw CapacityError("enumeration window n_max=" + std::to_string(n_max) +
                            " exceeds the canonicalization cap of " +
                            std::to_string(canonicalization_cap()));
    return {spec.m, spec.fan_order, n_min, n_max};
}

bool connected_after_edge_removal(const Graph& g, int a, int b) {
    // BFS from a with the edge {a,b} masked; the removal disconnects iff b
    // becomes unreachable (all other adjacency is intact).
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> stack = {a};
    seen[a] = true;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if ((u == a && v == b) || (u == b && v == a)) continue;
            if (!seen[v]) {
                seen[v] = true;
                if (v == b) return true;
                stack.push_back(v);
            }
        }
    }
    return seen[b];
}

// Lex-least edge of the canonically labeled graph whose removal (plus
// stripping a stranded endpoint) leaves a connected graph with m-1 >= 1
// edges. Well-defined for every connected graph with m >= 2: a pendant edge
// qualifies, and a graph with minimum degree 2 has a cycle edge.
std::pair<int, int> canonical_last_edge(const Graph& c) {
    for (const auto& [i, j] : c.edges()) {
        if (c.degree(i) == 1 || c.degree(j) == 1) return {i, j};
        if (connected_after_edge_removal(c, i, j)) return {i, j};
    }
    throw std::logic_error("connected graph with m >= 2 must have a deletable edge");
}

std::vector<std::uint8_t> parent_form_of(const Graph& canon_child) {
    const auto [i, j] = canonical_last_edge(canon_child);
    return canonical_form(canon_child.without_edge(i, j).without_isolated());
}

std::vector<Stored> children_of(const Stored& parent, const ResolvedSpec& spec) {
    std::vector<Stored> out;
    std::map<std::vector<std::uint8_t>, bool> seen;
    auto consider = [&](const Graph& raw) {
        if (spec.fan_order && contains_fan(raw, *spec.fan_order)) return;
        auto cres = canonicalize(raw);
        if (!seen.emplace(cres.form, true).second) return;
        std::vector<int> perm(raw.vertex_count());
        for (int pos = 0; pos < raw.vertex_count(); ++pos) perm[cres.ordering[pos]] = pos;
        Graph canon = raw.permuted(perm);
        if (parent_form_of(canon) == parent.form) out.push_back({std::move(canon), std::move(cres.form)});
    };

    const int n = parent.g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!parent.g.has_edge(u, v)) consider(parent.g.with_edge(u, v));
    if (n + 1 <= spec.n_max) {
        for (int u = 0; u < n; ++u) {
            GraphBuilder b(n + 1);
            for (const auto& [x, y] : parent.g.edges()) b.toggle_unchecked(x, y);
            b.toggle_unchecked(u, n);
            consider(b.build());
        }
    }
    return out;
}

std::vector<Stored> expand_level(const std::vector<Stored>& parents, const ResolvedSpec& spec,
                                 int jobs) {
    std::vector<std::vector<Stored>> per_parent(parents.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < parents.size(); ++i) per_parent[i] = children_of(parents[i], spec);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errs(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < parents.size(); i += workers)
                        per_parent[i] = children_of(parents[i], spec);
                } catch (...) {
                    errs[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
    }

    std::vector<Stored> level;
    for (auto& bucket : per_parent)
        for (auto& s : bucket) level.push_back(std::move(s));
    std::sort(level.begin(), level.end(), [](const Stored& a, const Stored& b) { return a.form < b.form; });
    for (std::size_t i = 1; i < level.size(); ++i)
        if (level[i].form == level[i - 1].form)
            throw std::logic_error("isomorph rejection failure: duplicate class generated");
    return level;
}

std::vector<Stored> generate_levels(const ResolvedSpec& spec, int jobs) {
    std::vector<Stored> level;
    {
        Graph k2 = complete_graph(2);
        level.push_back({canonical_graph(k2), canonical_form(k2)});
    }
    for (long cur = 2; cur <= spec.m; ++cur) level = expand_level(level, spec, jobs);
    return level;
}

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

long enumerate_connected(const EnumSpec& spec, const std::function<void(const Graph&)>& visit,
                         int jobs) {
    if (jobs < 1) throw ParameterError("jobs must be at least 1, got " + std::to_string(jobs));
    const ResolvedSpec rs = resolve(spec, true);
    auto level = generate_levels(rs, jobs);
    long count = 0;
    for (const Stored& s : level) {
        if (s.g.vertex_count() < rs.n_min) continue;
        ++count;
        if (visit) visit(s.g);
    }
    return count;
}

long enumerate_all(const EnumSpec& spec, const std::function<void(const Graph&)>& visit, int jobs) {
    if (jobs < 1) throw ParameterError("jobs must be at least 1, got " + std::to_string(jobs));
    const ResolvedSpec rs = resolve(spec, false);

    // Connected classes per component size, each within the global n cap.
    std::vector<std::vector<Graph>> classes(rs.m + 1);
    for (long mc = 1; mc <= rs.m; ++mc) {
        EnumSpec comp;
        comp.m = mc;
        comp.fan_order = rs.fan_order;
        comp.n_max = static_cast<int>(std::min<long>(mc + 1, rs.n_max));
        if (comp.n_max < 2) continue;
        enumerate_connected(comp, [&](const Graph& g) { classes[mc].push_back(g); }, jobs);
    }

    // Multisets of connected classes, chosen in non-increasing (m, index)
    // order so each isomorphism class of unions appears exactly once.
    std::vector<Stored> found;
    std::vector<const Graph*> parts;
    auto emit = [&]() {
        Graph acc = empty_graph(0);
        for (const Graph* p : parts) acc = disjoint_union(acc, *p);
        auto cres = canonicalize(acc);
        std::vector<int> perm(acc.vertex_count());
        for (int pos = 0; pos < acc.vertex_count(); ++pos) perm[cres.ordering[pos]] = pos;
        found.push_back({acc.permuted(perm), std::move(cres.form)});
    };
    auto rec = [&](auto&& self, long m_rem, int n_used, long max_m, long max_idx) -> void {
        if (m_rem == 0) {
            if (n_used >= rs.n_min) emit();
            return;
        }
        for (long m1 = std::min(m_rem, max_m); m1 >= 1; --m1) {
            const long idx_hi =
                m1 == max_m ? max_idx : static_cast<long>(classes[m1].size()) - 1;
            for (long idx = idx_hi; idx >= 0; --idx) {
                const Graph& comp = classes[m1][idx];
                if (n_used + comp.vertex_count() > rs.n_max) continue;
                parts.push_back(&comp);
                self(self, m_rem - m1, n_used + comp.vertex_count(), m1, idx);
                parts.pop_back();
            }
        }
    };
    rec(rec, rs.m, 0, rs.m, static_cast<long>(classes[rs.m].size()) - 1);

    std::sort(found.begin(), found.end(),
              [](const Stored& a, const Stored& b) { return a.form < b.form; });
    for (std::size_t i = 1; i < found.size(); ++i)
        if (found[i].form == found[i - 1].form)
            throw std::logic_error("duplicate union class in disconnected enumeration");
    long count = 0;
    for (const Stored& s : found) {
        ++count;
        if (visit) visit(s.g);
    }
    return count;
}

VerificationRecord max_lambda_over_class(long m, int k, int jobs, double tol) {
    if (k < 5)
        throw ParameterError("fan order below 5 has no associated bound; got " + std::to_string(k));
    const int bound_k = (k - 1) / 2;

    struct Entry {
        Graph g;
        SpectralCertificate cert;
    };
    std::vector<Entry> entries;
    EnumSpec spec;
    spec.m = m;
    spec.fan_order = k;
    enumerate_connected(spec, [&](const Graph& g) { entries.push_back({g, spectral_radius(g, tol)}); },
                        jobs);
    if (entries.empty()) throw std::logic_error("no fan-free class at m >= 1 (stars are always free)");

    std::size_t best = 0;
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].cert.lambda_lo > entries[best].cert.lambda_lo) best = i;

    VerificationRecord rec;
    rec.k = bound_k;
    rec.m = m;
    rec.lambda_lo = entries[best].cert.lambda_lo;
    rec.lambda_hi = entries[best].cert.lambda_hi;
    rec.bound = conjecture_bound(bound_k, m);
    rec.satisfies_bound = rec.lambda_hi <= rec.bound + 1e-9;
    rec.method = "exhaustive";
    for (const Entry& e : entries) {
        if (e.cert.lambda_hi < rec.lambda_lo) continue; // no enclosure overlap
        if (contains_fan(e.g, k))
            throw std::logic_error("maximizer failed fan-freeness re-validation");
        if (rec.maximizers.empty()) rec.n = e.g.vertex_count();
        rec.maximizers.push_back(to_graph6(e.g));
    }
    return rec;
}

std::vector<VerificationRecord> verify_table(int k, const std::vector<long>& m_list,
                                             const VerifyTableOptions& opts) {
    if (k < 2) throw ParameterError("bound parameter k must be at least 2, got " + std::to_string(k));
    const int fan_order = 2 * k + 2;
    std::vector<VerificationRecord> out;
    for (long m : m_list) {
        if (m <= opts.exhaustive_limit) {
            out.push_back(max_lambda_over_class(m, fan_order, opts.jobs, opts.tol));
            continue;
        }
        SearchOptions so;
        so.m = m;
        so.fan_order = fan_order;
        so.restarts = opts.restarts;
        so.move_budget = opts.move_budget;
        so.seed = opts.seed;
        so.jobs = opts.jobs;
        so.tol = opts.tol;
        const SearchReport rep = local_search(so);
        VerificationRecord rec;
        rec.k = k;
        rec.m = m;
        rec.n = from_graph6(rep.best_g6).vertex_count();
        rec.maximizers = {rep.best_g6};
        rec.lambda_lo = rep.lambda_lo;
        rec.lambda_hi = rep.lambda_hi;
        rec.bound = conjecture_bound(k, m);
        rec.satisfies_bound = rec.lambda_hi <= rec.bound + 1e-9;
        rec.method = "search";
        out.push_back(std::move(rec));
    }
    return out;
}

std::string verification_table_csv(const std::vector<VerificationRecord>& records) {
    std::string out = "k,m,n,graph6,lambda_lo,lambda_hi,bound,satisfies_bound,method\n";
    for (const auto& r : records) {
        out += std::to_string(r.k) + ',' + std::to_string(r.m) + ',' + std::to_string(r.n) + ',';
        for (std::size_t i = 0; i < r.maximizers.size(); ++i) {
            if (i) out += ';';
            out += r.maximizers[i];
        }
        out += ',' + fmt_real(r.lambda_lo) + ',' + fmt_real(r.lambda_hi) + ',' + fmt_real(r.bound) +
               ',' + (r.satisfies_bound ? "true" : "false") + ',' + r.method + '\n';
    }
    return out;
}

} // namespace fanfree
