#ifndef FANFREE_SPECTRAL_HPP
#define FANFREE_SPECTRAL_HPP

#include <span>
#include <vector>

#include "fanfree/graph.hpp"

namespace fanfree {

/// Certified enclosure of the spectral radius. lambda_lo and lambda_hi are
/// the extreme quotients (A x)_u / x_u of the reported vector over the
/// component achieving the radius, so the bracket can be re-verified from
/// (perron, adjacency) alone. perron is unit-norm and positive on that
/// component, zero elsewhere.
struct SpectralCertificate {
    double lambda_lo = 0;
    double lambda_hi = 0;
    std::vector<double> perron;
    long iterations = 0;
    double residual = 0;
    bool restricted_to_component = false;

    double point() const { return 0.5 * (lambda_lo + lambda_hi); }
    double width() const { return lambda_hi - lambda_lo; }
};

struct PowerIterationOptions {
    double tol = 1e-10;
    /// <= 0 means the default budget 100 n ln(n+1) + 1000 per component.
    long max_iterations = 0;
};

/// Power iteration on A + I (shifted to stay primitive on bipartite
/// components), started from the normalized degree vector, stopping when the
/// quotient spread of A falls under tol. Occasional Aitken extrapolation is
/// attempted and kept only when it tightens the certified spread. Exceeding
/// the budget raises BudgetError carrying the best enclosure reached.
SpectralCertificate spectral_radius(const Graph& g, const PowerIterationOptions& opts = {});
SpectralCertificate spectral_radius(const Graph& g, double tol);

/// Perron vector of a connected graph (unit norm, strictly positive).
std::vector<double> perron_vector(const Graph& g, double tol = 1e-10);

/// Lowest-index vertex whose entry is within 1e-12 of the maximum.
int extremal_vertex(std::span<const double> perron);

/// (k-1 + sqrt(4m - k^2 + 1)) / 2: the spectral-radius ceiling for m-edge
/// graphs avoiding the fan on 2k+1 or 2k+2 vertices, attained by
/// K_k v sK_1. Requires k >= 2 and a nonnegative radicand.
double conjecture_bound(int k, long m);

/// Spectral radius of K_k v sK_1 in closed form: the largest root of
/// x^2 - (k-1)x - ks = 0.
double closed_form_join_lambda(int k, long s);

} // namespace fanfree

#endif
