#ifndef FANFREE_ANALYZE_HPP
#define FANFREE_ANALYZE_HPP

#include <string>
#include <vector>

#include "fanfree/graph.hpp"
#include "fanfree/spectral.hpp"

namespace fanfree {

// The shapes a neighborhood component can take in a fan-free graph: stars,
// double stars, a star plus one edge (triangle when r = 2), C4, K4-e, K4.
// Anything else is `other` and certifies a fan through the shared hub.
enum class ShapeTag { star, double_star, star_plus_edge, c4, k4_minus_e, k4, other };

struct ShapeClass {
    ShapeTag tag = ShapeTag::other;
    std::vector<long> params;  // star/star_plus_edge: {r}; double_star: {a, b} with a <= b
    std::string name() const;  // "star(4)", "double_star(1,2)", "C4", "K4-e", ...
};

/// Exact shape of a connected graph on >= 2 vertices via degree dispatch,
/// confirmed against a constructed instance when the size permits.
ShapeClass classify_component(const Graph& h);

/// gamma(H) = sum_u (d_H(u) - 1) * ratio_u - e(H), the per-component excess.
/// ratios are x_u / x_{u*} taken from an ambient Perron vector; each must be
/// positive and at most 1 + 1e-12.
double gamma_value(const Graph& h, const std::vector<double>& ratios);

struct ComponentReport {
    std::vector<int> vertices;  // ambient labels, sorted
    ShapeClass shape;
    double gamma = 0;
};

/// Neighborhood split around the extremal vertex: U = N(u*), W the rest,
/// U0 the vertices isolated inside G[U].
struct Decomposition {
    int u_star = 0;
    std::vector<int> U;
    std::vector<int> W;
    std::vector<int> U0;
    std::vector<int> U_plus;
    std::vector<ComponentReport> components;  // nontrivial components of G[U]
    long e_U = 0;
    long e_W = 0;
    long e_UW = 0;
};

/// Splits a connected graph around its extremal vertex and classifies the
/// nontrivial neighborhood components, with gamma taken from the graph's own
/// Perron vector. e(G) = |U| + e_U + e_UW + e_W always holds afterwards.
Decomposition decompose(const Graph& g);

struct LemmaCheck {
    std::string name;
    bool holds = false;
    double residual = 0;  // holds iff residual >= -1e-9
};

/// Diagnostic report: each named conclusion of the structural argument,
/// evaluated numerically on the given graph. The conclusions are theorems
/// only for the spectral maximizer at large m; on other inputs a failed
/// check is information, not an error. hypothesis_residual tracks
/// lambda^2 - lambda - (m - 1), the assumption behind inequality (1).
struct LemmaAudit {
    Decomposition decomposition;
    long m = 0;
    double lambda_lo = 0;
    double lambda_hi = 0;
    double hypothesis_residual = 0;
    bool hypothesis_holds = false;
    double master_lhs = 0;  // both sides of inequality (1)
    double master_rhs = 0;
    std::vector<LemmaCheck> checks;
};

/// Runs every check on a connected graph with no fan on k vertices.
LemmaAudit audit(const Graph& g, int k);

} // namespace fanfree

#endif
