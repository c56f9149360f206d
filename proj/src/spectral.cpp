#include "fanfree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fanfree {

namespace {

struct ComponentResult {
    double lo = 0;
    double hi = 0;
    std::vector<double> x; // indexed like comp
    long iterations = 0;
    double residual = 0;
};

// y_u = sum of x over N(u), restricted to the component (components are
// closed under adjacency, so plain row iteration stays inside).
void matvec(const Graph& g, const std::vector<int>& comp, const std::vector<int>& local,
            const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
        double acc = 0;
        for (int v : g.neighbors(comp[i])) acc += x[local[v]];
        y[i] = acc;
    }
}

void normalize(std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    s = std::sqrt(s);
    for (double& v : x) v /= s;
}

ComponentResult solve_component(const Graph& g, const std::vector<int>& comp,
                                const std::vector<int>& local, const PowerIterationOptions& opts,
                                long budget) {
    const std::size_t sz = comp.size();
    ComponentResult res;
    res.x.assign(sz, 0.0);
    if (sz == 1) {
        // K1: radius exactly 0, zero-width certificate.
        res.x[0] = 1.0;
        return res;
    }

    std::vector<double> x(sz), ax(sz), prev1, prev2, accel(sz);
    for (std::size_t i = 0; i < sz; ++i) x[i] = static_cast<double>(g.degree(comp[i]));
    normalize(x);

    double best_lo = -std::numeric_limits<double>::infinity();
    double best_hi = std::numeric_limits<double>::infinity();

    auto quotients = [&](const std::vector<double>& v, const std::vector<double>& av, double& lo,
                         double& hi) {
        lo = std::numeric_limits<double>::infinity();
        hi = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < sz; ++i) {
            const double q = av[i] / v[i];
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
    };

    long it = 0;
    while (true) {
        matvec(g, comp, local, x, ax);
        ++it;
        double lo, hi;
        quotients(x, ax, lo, hi);
        if (hi - lo < best_hi - best_lo) {
            best_lo = lo;
            best_hi = hi;
        }
        if (hi - lo <= opts.tol) {
            res.lo = lo;
            res.hi = hi;
            res.x = x;
            res.iterations = it;
            double rq = 0;
            for (std::size_t i = 0; i < sz; ++i) rq += x[i] * ax[i];
            double rs = 0;
            for (std::size_t i = 0; i < sz; ++i) {
                const double d = ax[i] - rq * x[i];
                rs += d * d;
            }
            res.residual = std::sqrt(rs);
            return res;
        }
        if (it >= budget)
            throw BudgetError("power iteration exhausted its budget of " + std::to_string(budget) +
                                  " steps (component of " + std::to_string(sz) + " vertices)",
                              best_lo, best_hi);

        // Shifted step keeps the iteration primitive on bipartite components.
        for (std::size_t i = 0; i < sz; ++i) ax[i] += x[i];
        normalize(ax);

        // Every 8th step, try componentwise Aitken extrapolation through the
        // last three iterates; adopt only on a certified tighter spread.
        if (it % 8 == 0 && !prev2.empty()) {
            bool usable = true;
            for (std::size_t i = 0; i < sz && usable; ++i) {
                const double d2 = ax[i] - 2 * prev1[i] + prev2[i];
                if (std::abs(d2) < 1e-300) {
                    usable = false;
                    break;
                }
                const double diff = ax[i] - prev1[i];
                accel[i] = ax[i] - diff * diff / d2;
                usable = accel[i] > 0;
            }
            if (usable) {
                normalize(accel);
                std::vector<double> a_ax(sz);
                matvec(g, comp, local, accel, a_ax);
                ++it;
                double alo, ahi;
                quotients(accel, a_ax, alo, ahi);
                double clo, chi;
                matvec(g, comp, local, ax, a_ax); // reuse buffer for the plain iterate
                ++it;
                quotients(ax, a_ax, clo, chi);
                if (ahi - alo < chi - clo) {
                    x = accel;
                    prev1.clear();
                    prev2.clear();
                    continue;
                }
            }
        }
        prev2 = prev1;
        prev1 = ax;
        x = ax;
    }
}

} // namespace

SpectralCertificate spectral_radius(const Graph& g, const PowerIterationOptions& opts) {
    if (g.vertex_count() == 0) throw StructureError("spectral radius of the empty graph is undefined");
    if (opts.tol <= 0) throw ParameterError("tolerance must be positive");

    std::vector<int> local(g.vertex_count(), -1);
    const auto comps = g.components();
    for (const auto& comp : comps)
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);

    SpectralCertificate cert;
    cert.perron.assign(g.vertex_count(), 0.0);
    cert.restricted_to_component = comps.size() > 1;

    const double n = static_cast<double>(g.vertex_count());
    const long budget =
        opts.max_iterations > 0 ? opts.max_iterations
                                : static_cast<long>(100.0 * n * std::log(n + 1.0)) + 1000;

    // The achieving component is the one with the largest upper quotient;
    // its own bracket enclosed every other component's radius as well.
    ComponentResult best;
    bool have = false;
    std::size_t best_at = 0;
    long total_iterations = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        ComponentResult r = solve_component(g, comps[c], local, opts, budget);
        total_iterations += r.iterations;
        if (!have || r.hi > best.hi) {
            best = std::move(r);
            best_at = c;
            have = true;
        }
    }
    cert.lambda_lo = best.lo;
    cert.lambda_hi = best.hi;
    cert.iterations = total_iterations;
    cert.residual = best.residual;
    for (std::size_t i = 0; i < comps[best_at].size(); ++i) cert.perron[comps[best_at][i]] = best.x[i];
    return cert;
}

SpectralCertificate spectral_radius(const Graph& g, double tol) {
    PowerIterationOptions opts;
    opts.tol = tol;
    return spectral_radius(g, opts);
}

std::vector<double> perron_vector(const Graph& g, double tol) {
    if (!g.is_connected() || g.vertex_count() == 0)
        throw StructureError("Perron vector requires a connected nonempty graph");
    return spectral_radius(g, tol).perron;
}

int extremal_vertex(std::span<const double> perron) {
    if (perron.empty()) throw ParameterError("empty vector has no extremal vertex");
    double top = perron[0];
    for (double v : perron) top = std::max(top, v);
    for (std::size_t i = 0; i < perron.size(); ++i)
        if (perron[i] >= top - 1e-12) return static_cast<int>(i);
    return 0;
}

double conjecture_bound(int k, long m) {
    if (k < 2) throw ParameterError("bound parameter k must be at least 2, got " + std::to_string(k));
    if (m < 0) throw ParameterError("edge count must be nonnegative");
    const double radicand = 4.0 * static_cast<double>(m) - static_cast<double>(k) * k + 1.0;
    if (radicand < 0)
        throw DomainError("bound undefined: 4m - k^2 + 1 = " + std::to_string(radicand) +
                          " is negative");
    return (static_cast<double>(k) - 1.0 + std::sqrt(radicand)) / 2.0;
}

double closed_form_join_lambda(int k, long s) {
    if (k < 2) throw ParameterError("clique order k must be at least 2, got " + std::to_string(k));
    if (s < 1) throw ParameterError("independent-set size s must be positive, got " + std::to_string(s));
    const double km1 = static_cast<double>(k) - 1.0;
    return (km1 + std::sqrt(km1 * km1 + 4.0 * static_cast<double>(k) * static_cast<double>(s))) / 2.0;
}

} // namespace fanfree
