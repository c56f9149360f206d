#include "fanfree/analyze.hpp"

#include <algorithm>
#include <cmath>

#include "fanfree/canonical.hpp"
#include "fanfree/pattern.hpp"

namespace fanfree {

namespace {

constexpr double kTol = 1e-9;

Graph shape_instance(const ShapeClass& s) {
    switch (s.tag) {
        case ShapeTag::star: return star_graph(static_cast<int>(s.params[0]));
        case ShapeTag::double_star:
            return double_star_graph(static_cast<int>(s.params[0]), static_cast<int>(s.params[1]));
        case ShapeTag::star_plus_edge:
            return star_plus_edge_graph(static_cast<int>(s.params[0]));
        case ShapeTag::c4: return cycle_graph(4);
        case ShapeTag::k4_minus_e: return complete_graph(4).without_edge(0, 1);
        case ShapeTag::k4: return complete_graph(4);
        case ShapeTag::other: break;
    }
    throw std::logic_error("no instance for shape `other`");
}

Decomposition decompose_with(const Graph& g, const SpectralCertificate& cert) {
    Decomposition d;
    d.u_star = extremal_vertex(cert.perron);
    d.U = g.neighbors(d.u_star);

    std::vector<bool> in_closed(g.vertex_count(), false);
    in_closed[d.u_star] = true;
    for (int u : d.U) in_closed[u] = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_closed[v]) d.W.push_back(v);

    const Graph gu = g.induced(d.U);
    d.e_U = gu.edge_count();
    for (int i = 0; i < gu.vertex_count(); ++i)
        (gu.degree(i) == 0 ? d.U0 : d.U_plus).push_back(d.U[i]);

    for (const auto& comp : gu.components()) {
        if (comp.size() < 2) continue;
        ComponentReport rep;
        for (int i : comp) rep.vertices.push_back(d.U[i]);
        const Graph h = gu.induced(comp);
        rep.shape = classify_component(h);
        std::vector<double> ratios(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            ratios[i] = cert.perron[rep.vertices[i]] / cert.perron[d.u_star];
        rep.gamma = gamma_value(h, ratios);
        d.components.push_back(std::move(rep));
    }

    d.e_W = g.induced(d.W).edge_count();
    for (int w : d.W)
        for (int u : d.U) d.e_UW += g.has_edge(w, u) ? 1 : 0;

    if (g.edge_count() !=
        static_cast<long>(d.U.size()) + d.e_U + d.e_UW + d.e_W)
        throw std::logic_error("decomposition violated e(G) = |U| + e(U) + e(U,W) + e(W)");
    return d;
}

} // namespace

std::string ShapeClass::name() const {
    switch (tag) {
        case ShapeTag::star: return "star(" + std::to_string(params[0]) + ")";
        case ShapeTag::double_star:
            return "double_star(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")";
        case ShapeTag::star_plus_edge: return "star_plus_edge(" + std::to_string(params[0]) + ")";
        case ShapeTag::c4: return "C4";
        case ShapeTag::k4_minus_e: return "K4-e";
        case ShapeTag::k4: return "K4";
        case ShapeTag::other: return "other";
    }
    return "other";
}

ShapeClass classify_component(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 2) throw StructureError("shape classification needs at least 2 vertices");
    if (!h.is_connected()) throw StructureError("shape classification needs a connected graph");
    const long m = h.edge_count();

    ShapeClass out;
    if (m == n - 1) {
        // Trees: the non-leaf vertices of a tree induce a subtree, so their
        // count alone separates stars (<= 1) from double stars (exactly 2).
        std::vector<int> internal;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) >= 2) internal.push_back(v);
        if (internal.size() <= 1) {
            out.tag = ShapeTag::star;
            out.params = {n - 1};
        } else if (internal.size() == 2) {
            const long a = h.degree(internal[0]) - 1;
            const long b = h.degree(internal[1]) - 1;
            out.tag = ShapeTag::double_star;
            out.params = {std::min(a, b), std::max(a, b)};
        }
    } else if (m == n) {
        // Unicyclic: a dominating vertex plus one edge among the rest is
        // exactly K_{1,n-1}+e; the 2-regular case on four vertices is C4.
        int dominating = -1;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) == n - 1) dominating = v;
        if (dominating >= 0 && n >= 3) {
            out.tag = ShapeTag::star_plus_edge;
            out.params = {n - 1};
        } else if (n == 4) {
            out.tag = ShapeTag::c4;  // 4 vertices, 4 edges, no dominating vertex
        }
    } else if (n == 4 && m == 5) {
        out.tag = ShapeTag::k4_minus_e;
    } else if (n == 4 && m == 6) {
        out.tag = ShapeTag::k4;
    }

    // The dispatch above is exact; confirm against a constructed instance
    // whenever the graph is small enough to canonicalize.
    if (out.tag != ShapeTag::other && n <= canonicalization_cap() &&
        canonical_form(h) != canonical_form(shape_instance(out)))
        throw std::logic_error("shape dispatch disagrees with canonical form for " + out.name());
    return out;
}

double gamma_value(const Graph& h, const std::vector<double>& ratios) {
    if (static_cast<int>(ratios.size()) != h.vertex_count())
        throw ParameterError("need one ratio per vertex: " + std::to_string(ratios.size()) +
                             " for " + std::to_string(h.vertex_count()) + " vertices");
    double acc = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
        const double r = ratios[v];
        if (!(r > 0.0) || r > 1.0 + 1e-12)
            throw DomainError("Perron ratio " + std::to_string(r) + " outside (0, 1]");
        acc += (h.degree(v) - 1) * r;
    }
    return acc - static_cast<double>(h.edge_count());
}

Decomposition decompose(const Graph& g) {
    if (!g.is_connected()) throw StructureError("decomposition requires a connected graph");
    return decompose_with(g, spectral_radius(g, 1e-10));
}

LemmaAudit audit(const Graph& g, int k) {
    if (k < 3) throw ParameterError("fan order must be at least 3, got " + std::to_string(k));
    if (!g.is_connected()) throw StructureError("audit requires a connected graph");
    if (contains_fan(g, k))
        throw StructureError("audit requires a graph with no fan on " + std::to_string(k) +
                             " vertices");

    const SpectralCertificate cert = spectral_radius(g, 1e-10);
    LemmaAudit a;
    a.decomposition = decompose_with(g, cert);
    a.m = g.edge_count();
    a.lambda_lo = cert.lambda_lo;
    a.lambda_hi = cert.lambda_hi;

    const Decomposition& d = a.decomposition;
    const double lambda = cert.point();
    a.hypothesis_residual = lambda * lambda - lambda - static_cast<double>(a.m - 1);
    a.hypothesis_holds = a.hypothesis_residual >= -kTol;

    const double x_star = cert.perron[d.u_star];
    auto ratio = [&](int v) { return cert.perron[v] / x_star; };

    const Graph gu = g.induced(d.U);
    std::vector<double> du_in_u(g.vertex_count(), 0);  // degree inside G[U], ambient labels
    for (int i = 0; i < gu.vertex_count(); ++i) du_in_u[d.U[i]] = gu.degree(i);

    // Inequality (1): the squared-eigenvalue expansion at u*, under the
    // hypothesis lambda^2 - lambda >= m - 1.
    a.master_lhs = 0;
    for (int u : d.U_plus) a.master_lhs += (du_in_u[u] - 1) * ratio(u);
    for (int w : d.W) {
        long du_w = 0;
        for (int u : d.U) du_w += g.has_edge(w, u) ? 1 : 0;
        a.master_lhs += static_cast<double>(du_w) * ratio(w);
    }
    double u0_ratio_sum = 0;
    for (int u : d.U0) u0_ratio_sum += ratio(u);
    a.master_rhs = static_cast<double>(d.e_U + d.e_UW + d.e_W) + u0_ratio_sum - 1.0;

    double gamma_sum = 0, gamma_max = 0, table_slack = 0;
    bool first = true;
    long n_k4 = 0, n_k4e = 0, n_c4 = 0, n_spe = 0;
    double signature_dev = d.components.empty() ? 1.0 : 0.0;
    for (const ComponentReport& c : d.components) {
        gamma_sum += c.gamma;
        double cap;
        switch (c.shape.tag) {
            case ShapeTag::star:
            case ShapeTag::double_star: cap = -1; break;
            case ShapeTag::star_plus_edge:
            case ShapeTag::c4: cap = 0; break;
            case ShapeTag::k4_minus_e: cap = 1; ++n_k4e; break;
            case ShapeTag::k4: cap = 2; ++n_k4; break;
            default: {
                // Generic bound from ratios <= 1: gamma <= e(H) - |H|.
                const Graph h = g.induced(c.vertices);
                cap = static_cast<double>(h.edge_count() - h.vertex_count());
                break;
            }
        }
        if (c.shape.tag == ShapeTag::c4) ++n_c4;
        if (c.shape.tag == ShapeTag::star_plus_edge) ++n_spe;
        table_slack = first ? cap - c.gamma : std::min(table_slack, cap - c.gamma);
        gamma_max = first ? c.gamma : std::max(gamma_max, c.gamma);
        first = false;
        signature_dev = std::max(signature_dev, std::abs(c.gamma + 1.0));
    }
    signature_dev = std::max(signature_dev, static_cast<double>(d.U0.size()));
    signature_dev = std::max(signature_dev, static_cast<double>(d.W.size()));

    auto push = [&](std::string name, double residual) {
        a.checks.push_back({std::move(name), residual >= -kTol, residual});
    };
    push("edges-within-U-at-least-4", static_cast<double>(d.e_U) - 4.0);
    push("inequality-1", a.master_lhs - a.master_rhs);
    push("inequality-2-slack", gamma_sum - u0_ratio_sum + 1.0 - static_cast<double>(d.e_W));
    push("gamma-table", d.components.empty() ? 0.0 : table_slack);
    push("gamma-nonpositive", d.components.empty() ? 0.0 : -gamma_max);
    push("no-K4", -static_cast<double>(n_k4));
    push("no-K4-minus-e", -static_cast<double>(n_k4e));
    push("edges-within-W-zero", -static_cast<double>(d.e_W));
    push("no-C4", -static_cast<double>(n_c4));
    push("no-star-plus-edge", -static_cast<double>(n_spe));
    push("equality-signature", -signature_dev);
    return a;
}

} // namespace fanfree
