#ifndef FANFREE_ENUMERATE_HPP
#define FANFREE_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

/// Selection window for exhaustive generation. Defaults: n_min = smallest n
/// with C(n,2) >= m, n_max = m+1 (a connected graph with m edges cannot
/// have more vertices). When fan_order is set, only F_k-free classes are
/// visited; freeness is monotone under edge addition, so the generator also
/// prunes intermediates containing the fan.
struct EnumSpec {
    long m = 1;
    std::optional<int> fan_order;
    int n_min = 0; // 0: default
    int n_max = 0; // 0: default
    bool connected_only = true;
};

/// Visits exactly one representative per isomorphism class of connected
/// graphs with m edges and n in the window, in canonical-form order per
/// edge level. Representatives are canonically labeled. Returns the visit
/// count. jobs > 1 parallelizes each level; the visit sequence is unchanged
/// (callbacks are serialized). Throws CapacityError before any visit if the
/// window exceeds the canonicalization cap.
long enumerate_connected(const EnumSpec& spec,
                         const std::function<void(const Graph&)>& visit, int jobs = 1);

/// Audit-only composition over connected classes: visits one representative
/// per isomorphism class of graphs with m edges, no isolated vertices, and
/// every component connected (i.e. all of them). connected_only is ignored.
long enumerate_all(const EnumSpec& spec, const std::function<void(const Graph&)>& visit,
                   int jobs = 1);

/// One verification row: the spectral maximum over F_k-free connected
/// classes at edge count m, against the conjectured bound.
struct VerificationRecord {
    int k = 0;
    long m = 0;
    int n = 0;                          // vertex count of the first maximizer
    std::vector<std::string> maximizers; // graph6, canonically sorted
    double lambda_lo = 0;
    double lambda_hi = 0;
    double bound = 0;
    bool satisfies_bound = false;
    std::string method; // "exhaustive" or "search"
};

/// Exhaustive maximizer search: enumerates F_k-free connected classes with
/// m edges, certifies each radius, and reports every graph whose enclosure
/// overlaps the best one (certified ties are never dropped).
VerificationRecord max_lambda_over_class(long m, int k, int jobs = 1, double tol = 1e-10);

struct VerifyTableOptions {
    long exhaustive_limit = 10; // largest m handled exhaustively
    int jobs = 1;
    int restarts = 20;
    long move_budget = 200;
    std::uint64_t seed = 1;
    double tol = 1e-10;
};

/// One record per m: exhaustive when m <= exhaustive_limit, otherwise the
/// optimize module's local search (method = "search").
std::vector<VerificationRecord> verify_table(int k, const std::vector<long>& m_list,
                                             const VerifyTableOptions& opts = {});

/// CSV per the documented header; floats round-trip exactly.
std::string verification_table_csv(const std::vector<VerificationRecord>& records);

} // namespace fanfree

#endif
