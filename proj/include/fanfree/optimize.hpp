#ifndef FANFREE_OPTIMIZE_HPP
#define FANFREE_OPTIMIZE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fanfree/graph.hpp"
#include "fanfree/spectral.hpp"

namespace fanfree {

/// Edge rotation: delete the edges from v to every vertex of S, add edges
/// from u to them. When x_u >= x_v for the Perron vector this strictly
/// increases the spectral radius.
struct RotationMove {
    int u = 0;
    int v = 0;
    std::vector<int> s;
};

/// Applies the move. Validation: u != v, S nonempty (unless allow_empty,
/// which returns g unchanged), S subset of N(v)\N(u), u not in S, g
/// connected. The result keeps m but may disconnect or isolate v.
Graph rotate(const Graph& g, const RotationMove& move, bool allow_empty = false);

struct SearchOptions {
    long m = 1;
    int fan_order = 6;
    int restarts = 20;
    long move_budget = 200;  // accepted moves per restart
    std::uint64_t seed = 1;
    int jobs = 1;
    double tol = 1e-10;
    int sideways_limit = 6;   // plateau moves between strict improvements
    int eval_cap = 400;       // certificate evaluations per climb step
};

struct SearchReport {
    std::string best_g6;
    double lambda_lo = 0;
    double lambda_hi = 0;
    int restarts_used = 0;
    long moves_accepted = 0;
    std::uint64_t seed = 0;
};

/// Hill climbing over F_k-free connected graphs with m edges using rotation
/// moves, best over restarts. Deterministic for fixed options including
/// jobs (parallel restarts are merged by a scheduling-independent rule).
SearchReport local_search(const SearchOptions& opts);

struct RotationLemmaReport {
    long trials = 0;
    long certified_increase = 0;
    long inconclusive = 0;
    long violations = 0;
};

/// Randomized property check of the rotation lemma: samples connected
/// graphs and legal moves with x_u >= x_v, certifies both radii to width
/// 1e-10, and counts certified increases, unseparated enclosures, and
/// certified decreases (the last must stay 0).
RotationLemmaReport check_rotation_lemma(long trials, int n_lo, int n_hi, std::uint64_t seed);

} // namespace fanfree

#endif
