#include "hyperlap/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperlap/maxflow.hpp"

namespace hyperlap {

namespace {

Vec weighted_values(const Hypergraph& h, const StateVector& v) {
    return convert(h, v, Space::Weighted).values;
}

std::vector<EdgeExtremes> extremes_of(const Hypergraph& h, const Vec& f, double tol) {
    std::vector<EdgeExtremes> out;
    out.reserve(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& ed = h.edge(e);
        double lo = f[ed.nodes[0]], hi = lo;
        for (int u : ed.nodes) {
            lo = std::min(lo, f[u]);
            hi = std::max(hi, f[u]);
        }
        EdgeExtremes ex;
        ex.edge = e;
        ex.delta = hi - lo;  // raw, never snapped
        ex.c = ed.weight * ex.delta;
        for (int u : ed.nodes) {
            if (f[u] >= hi - tol) ex.max_set.push_back(u);
            if (f[u] <= lo + tol) ex.min_set.push_back(u);
        }
        out.push_back(std::move(ex));
    }
    return out;
}

/// Class index per node: sort by f descending and merge runs whose
/// consecutive gap is at most tol.
std::vector<int> class_ids(const Vec& f, double tol, int& class_count) {
    const int n = static_cast<int>(f.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (f[a] != f[b]) return f[a] > f[b];
        return a < b;
    });
    std::vector<int> cls(n, -1);
    int c = -1;
    double prev = 0.0;
    for (int i = 0; i < n; ++i) {
        const int u = order[i];
        if (i == 0 || prev - f[u] > tol) ++c;
        cls[u] = c;
        prev = f[u];
    }
    class_count = c + 1;
    return cls;
}

std::uint32_t subset_mask(const std::vector<int>& nodes, const std::vector<int>& position) {
    std::uint32_t mask = 0;
    for (int u : nodes) mask |= 1u << position[u];
    return mask;
}

DensityResult brute_force_density(const DensitySubproblem& sub) {
    const int k = static_cast<int>(sub.nodes.size());
    if (k > 22)
        throw std::invalid_argument("brute-force density refused for class size " +
                                    std::to_string(k) + " (> 22)");
    const Vec& w = sub.graph->node_weights();
    std::vector<int> position(sub.graph->node_count(), -1);
    for (int i = 0; i < k; ++i) position[sub.nodes[i]] = i;

    std::vector<std::uint32_t> in_masks, out_masks;
    std::vector<double> in_c, out_c;
    for (const auto& se : sub.in_edges) {
        in_masks.push_back(subset_mask(se.nodes, position));
        in_c.push_back(se.c);
    }
    for (const auto& se : sub.out_edges) {
        out_masks.push_back(subset_mask(se.nodes, position));
        out_c.push_back(se.c);
    }
    std::vector<double> wpos(k);
    for (int i = 0; i < k; ++i) wpos[i] = w[sub.nodes[i]];

    auto density_of_mask = [&](std::uint32_t mask) {
        double c = 0.0;
        for (std::size_t j = 0; j < in_masks.size(); ++j)
            if ((in_masks[j] & mask) == in_masks[j]) c += in_c[j];
        for (std::size_t j = 0; j < out_masks.size(); ++j)
            if (out_masks[j] & mask) c -= out_c[j];
        double wx = 0.0;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) wx += wpos[i];
        return c / wx;
    };

    const std::uint32_t all = (k == 32) ? ~0u : ((1u << k) - 1);
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        best = std::max(best, density_of_mask(mask));

    // Maximizers are closed under union; collect them all.
    const double eps = 1e-12 * std::max(1.0, std::abs(best));
    std::uint32_t union_mask = 0;
    for (std::uint32_t mask = 1; mask <= all; ++mask)
        if (density_of_mask(mask) >= best - eps) union_mask |= mask;

    DensityResult res;
    for (int i = 0; i < k; ++i)
        if (union_mask & (1u << i)) res.set.push_back(sub.nodes[i]);
    res.delta = density_of(sub, res.set);
    return res;
}

/// Maximal maximizer of C(X) - g * w(X) over subsets of the class, by
/// min-cut on the usual coverage network.  Returns the node subset.
std::vector<int> cut_maximizer(const DensitySubproblem& sub, double g) {
    const int k = static_cast<int>(sub.nodes.size());
    const Vec& w = sub.graph->node_weights();
    const int s = 0, t = 1;
    const int node_base = 2;
    const int in_base = node_base + k;
    const int out_base = in_base + static_cast<int>(sub.in_edges.size());
    FlowNetwork net(out_base + static_cast<int>(sub.out_edges.size()));

    std::vector<int> position(sub.graph->node_count(), -1);
    for (int i = 0; i < k; ++i) position[sub.nodes[i]] = i;

    double cap_sum = 0.0;
    for (const auto& se : sub.in_edges) cap_sum += se.c;
    for (const auto& se : sub.out_edges) cap_sum += se.c;
    for (int i = 0; i < k; ++i) cap_sum += std::abs(g) * w[sub.nodes[i]];
    const double inf = 2.0 * cap_sum + 1.0;

    for (std::size_t j = 0; j < sub.in_edges.size(); ++j) {
        const auto& se = sub.in_edges[j];
        net.add_arc(s, in_base + static_cast<int>(j), se.c);
        for (int u : se.nodes) net.add_arc(in_base + static_cast<int>(j), node_base + position[u], inf);
    }
    for (std::size_t j = 0; j < sub.out_edges.size(); ++j) {
        const auto& se = sub.out_edges[j];
        net.add_arc(out_base + static_cast<int>(j), t, se.c);
        for (int u : se.nodes) net.add_arc(node_base + position[u], out_base + static_cast<int>(j), inf);
    }
    for (int i = 0; i < k; ++i) {
        const double d = g * w[sub.nodes[i]];
        if (d >= 0.0)
            net.add_arc(node_base + i, t, d);
        else
            net.add_arc(s, node_base + i, -d);
    }

    net.max_flow(s, t);
    const std::vector<char> side = net.max_source_side(t);
    std::vector<int> set;
    for (int i = 0; i < k; ++i)
        if (side[node_base + i]) set.push_back(sub.nodes[i]);
    return set;
}

DensityResult parametric_cut_density(const DensitySubproblem& sub) {
    double scale = 1.0;
    for (const auto& se : sub.in_edges) scale += se.c;
    for (const auto& se : sub.out_edges) scale += se.c;
    const double eps_term = 1e-13 * scale;

    std::vector<int> current = sub.nodes;
    double g = density_of(sub, current);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<int> cand = cut_maximizer(sub, g);
        if (cand.empty()) return {current, density_of(sub, current)};
        const double next = density_of(sub, cand);
        double wc = 0.0;
        for (int u : cand) wc += sub.graph->node_weight(u);
        if ((next - g) * wc <= eps_term)  // F_g(cand) ~ 0: cand is the maximal maximizer
            return {cand, next};
        current = std::move(cand);
        g = next;
    }
    throw std::logic_error("parametric cut did not converge (density oscillation)");
}

struct LayerPlan {
    std::vector<int> nodes;
    double delta = 0.0;
    std::vector<int> in_edge_ids;
    std::vector<int> out_edge_ids;
    std::vector<SubEdge> flow_in;   // receivers within the layer
    std::vector<SubEdge> flow_out;  // donors within the layer
};

/// The peeling loop, shared by the full operator (with flows) and the
/// rates-only fast path.
std::vector<LayerPlan> peel_plan(const DensitySubproblem& sub, DensityMethod method) {
    std::vector<LayerPlan> plans;
    std::vector<int> remaining = sub.nodes;
    std::vector<SubEdge> in_rem = sub.in_edges;
    std::vector<SubEdge> out_rem = sub.out_edges;

    while (!remaining.empty()) {
        LayerPlan plan;
        if (remaining.size() == 1) {
            // Forced: the single node absorbs every remaining edge.
            const int u = remaining[0];
            double c = 0.0;
            for (const auto& se : in_rem) {
                c += se.c;
                plan.in_edge_ids.push_back(se.edge);
                plan.flow_in.push_back(se);
            }
            for (const auto& se : out_rem) {
                c -= se.c;
                plan.out_edge_ids.push_back(se.edge);
                plan.flow_out.push_back(se);
            }
            plan.nodes = {u};
            plan.delta = c / sub.graph->node_weight(u);
            plans.push_back(std::move(plan));
            break;
        }

        DensitySubproblem cur{remaining, in_rem, out_rem, sub.graph};
        const DensityResult dr = max_density_set(cur, method);
        if (dr.set.empty()) throw std::logic_error("empty maximal density set");
        plan.nodes = dr.set;
        plan.delta = dr.delta;

        std::vector<char> in_layer(sub.graph->node_count(), 0);
        for (int u : dr.set) in_layer[u] = 1;

        std::vector<SubEdge> in_next, out_next;
        for (auto& se : in_rem) {
            const bool inside = std::all_of(se.nodes.begin(), se.nodes.end(),
                                            [&](int u) { return in_layer[u]; });
            if (inside) {
                plan.in_edge_ids.push_back(se.edge);
                plan.flow_in.push_back(se);
            } else {
                // Receivers in the layer leave the edge behind; it feeds a
                // later (slower) layer through what is left.
                SubEdge trimmed = se;
                trimmed.nodes.erase(std::remove_if(trimmed.nodes.begin(), trimmed.nodes.end(),
                                                   [&](int u) { return in_layer[u]; }),
                                    trimmed.nodes.end());
                in_next.push_back(std::move(trimmed));
            }
        }
        for (auto& se : out_rem) {
            const bool touches = std::any_of(se.nodes.begin(), se.nodes.end(),
                                             [&](int u) { return in_layer[u]; });
            if (touches) {
                plan.out_edge_ids.push_back(se.edge);
                SubEdge donors = se;
                donors.nodes.erase(std::remove_if(donors.nodes.begin(), donors.nodes.end(),
                                                  [&](int u) { return !in_layer[u]; }),
                                   donors.nodes.end());
                plan.flow_out.push_back(std::move(donors));
            } else {
                out_next.push_back(se);
            }
        }

        std::vector<int> rest;
        for (int u : remaining)
            if (!in_layer[u]) rest.push_back(u);
        remaining = std::move(rest);
        in_rem = std::move(in_next);
        out_rem = std::move(out_next);
        plans.push_back(std::move(plan));
    }
    return plans;
}

}  // namespace

double density_of(const DensitySubproblem& sub, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("density of the empty set");
    std::vector<char> in(sub.graph->node_count(), 0);
    double wx = 0.0;
    for (int u : subset) {
        in[u] = 1;
        wx += sub.graph->node_weight(u);
    }
    double c = 0.0;
    for (const auto& se : sub.in_edges)
        if (std::all_of(se.nodes.begin(), se.nodes.end(), [&](int u) { return in[u]; }))
            c += se.c;
    for (const auto& se : sub.out_edges)
        if (std::any_of(se.nodes.begin(), se.nodes.end(), [&](int u) { return in[u]; }))
            c -= se.c;
    return c / wx;
}

DensityResult max_density_set(const DensitySubproblem& sub, DensityMethod method) {
    if (sub.nodes.empty()) throw std::invalid_argument("density subproblem with empty class");
    switch (method) {
        case DensityMethod::BruteForce:
            return brute_force_density(sub);
        case DensityMethod::ParametricCut:
            return parametric_cut_density(sub);
        case DensityMethod::Auto:
        default:
            return sub.nodes.size() <= 22 ? brute_force_density(sub)
                                          : parametric_cut_density(sub);
    }
}

std::vector<RhoEntry> solve_layer_flow(const std::vector<int>& layer_nodes, double delta,
                                       const std::vector<SubEdge>& in_edges,
                                       const std::vector<SubEdge>& out_edges,
                                       const Vec& node_weights) {
    const int k = static_cast<int>(layer_nodes.size());
    std::vector<RhoEntry> rho;

    if (k == 1) {
        const int u = layer_nodes[0];
        for (const auto& se : in_edges)
            if (se.c != 0.0) rho.push_back({u, se.edge, se.c});
        for (const auto& se : out_edges)
            if (se.c != 0.0) rho.push_back({u, se.edge, -se.c});
        return rho;
    }

    const int s = 0, t = 1;
    const int node_base = 2;
    const int in_base = node_base + k;
    const int out_base = in_base + static_cast<int>(in_edges.size());
    FlowNetwork net(out_base + static_cast<int>(out_edges.size()));

    std::vector<int> position;  // dense map node -> layer slot
    int max_node = 0;
    for (int u : layer_nodes) max_node = std::max(max_node, u);
    for (const auto& se : in_edges)
        for (int u : se.nodes) max_node = std::max(max_node, u);
    for (const auto& se : out_edges)
        for (int u : se.nodes) max_node = std::max(max_node, u);
    position.assign(max_node + 1, -1);
    for (int i = 0; i < k; ++i) position[layer_nodes[i]] = i;

    double supply = 0.0, inf = 1.0;
    for (const auto& se : in_edges) inf += se.c;
    for (const auto& se : out_edges) inf += se.c;
    for (int u : layer_nodes) inf += std::abs(delta) * node_weights[u];
    inf *= 2.0;

    std::vector<std::pair<int, int>> in_arc_ids;   // (arc id of in_j -> v, flat index)
    std::vector<std::pair<int, int>> out_arc_ids;  // (arc id of v -> out_j, flat index)
    std::vector<std::pair<int, int>> in_arcs_nodes, out_arcs_nodes;  // (edge idx, node)

    for (std::size_t j = 0; j < in_edges.size(); ++j) {
        const auto& se = in_edges[j];
        if (se.c == 0.0) continue;
        net.add_arc(s, in_base + static_cast<int>(j), se.c);
        supply += se.c;
        for (int u : se.nodes) {
            if (position[u] < 0) throw std::logic_error("layer flow: receiver outside layer");
            const int id = net.add_arc(in_base + static_cast<int>(j), node_base + position[u], inf);
            in_arc_ids.push_back({id, 0});
            in_arcs_nodes.push_back({static_cast<int>(j), u});
        }
    }
    for (std::size_t j = 0; j < out_edges.size(); ++j) {
        const auto& se = out_edges[j];
        if (se.c == 0.0) continue;
        net.add_arc(out_base + static_cast<int>(j), t, se.c);
        for (int u : se.nodes) {
            if (position[u] < 0) throw std::logic_error("layer flow: donor outside layer");
            const int id = net.add_arc(node_base + position[u], out_base + static_cast<int>(j), inf);
            out_arc_ids.push_back({id, 0});
            out_arcs_nodes.push_back({static_cast<int>(j), u});
        }
    }
    for (int i = 0; i < k; ++i) {
        const double d = node_weights[layer_nodes[i]] * delta;
        if (d > 0.0) {
            net.add_arc(node_base + i, t, d);
        } else if (d < 0.0) {
            net.add_arc(s, node_base + i, -d);
            supply += -d;
        }
    }

    const double flow = net.max_flow(s, t);
    if (std::abs(flow - supply) > 1e-9 * std::max(1.0, supply)) {
        std::ostringstream msg;
        msg << "layer flow infeasible (flow " << flow << " of supply " << supply
            << "); delta=" << delta << " layer={";
        for (int u : layer_nodes) msg << u << ",";
        msg << "} — the zero-surplus configuration must exist, so this is a bug";
        throw std::logic_error(msg.str());
    }

    for (std::size_t i = 0; i < in_arc_ids.size(); ++i) {
        const double val = net.flow_on(in_arc_ids[i].first);
        if (val != 0.0) rho.push_back({in_arcs_nodes[i].second, in_edges[in_arcs_nodes[i].first].edge, val});
    }
    for (std::size_t i = 0; i < out_arc_ids.size(); ++i) {
        const double val = net.flow_on(out_arc_ids[i].first);
        if (val != 0.0)
            rho.push_back({out_arcs_nodes[i].second, out_edges[out_arcs_nodes[i].first].edge, -val});
    }
    std::sort(rho.begin(), rho.end(), [](const RhoEntry& a, const RhoEntry& b) {
        return a.node != b.node ? a.node < b.node : a.edge < b.edge;
    });
    return rho;
}

std::vector<PeelLayer> peel(const DensitySubproblem& sub, DensityMethod method) {
    std::vector<PeelLayer> layers;
    for (auto& plan : peel_plan(sub, method)) {
        PeelLayer layer;
        layer.nodes = plan.nodes;
        layer.delta = plan.delta;
        layer.in_edges = plan.in_edge_ids;
        layer.out_edges = plan.out_edge_ids;
        layer.rho = solve_layer_flow(plan.nodes, plan.delta, plan.flow_in, plan.flow_out,
                                     sub.graph->node_weights());
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<EdgeExtremes> edge_extremes(const Hypergraph& h, const StateVector& v, double tol) {
    return extremes_of(h, weighted_values(h, v), tol);
}

std::vector<DensitySubproblem> density_subproblems(const Hypergraph& h,
                                                   const std::vector<EdgeExtremes>& extremes,
                                                   const StateVector& v, double tol) {
    const Vec f = weighted_values(h, v);
    int class_count = 0;
    const std::vector<int> cls = class_ids(f, tol, class_count);

    std::vector<DensitySubproblem> subs(class_count);
    for (auto& s : subs) s.graph = &h;
    for (int u = 0; u < h.node_count(); ++u) subs[cls[u]].nodes.push_back(u);
    for (auto& s : subs) std::sort(s.nodes.begin(), s.nodes.end());

    for (const auto& ex : extremes) {
        // All nodes of an extremal set share one value, hence one class.
        subs[cls[ex.min_set[0]]].in_edges.push_back({ex.edge, ex.c, ex.min_set});
        subs[cls[ex.max_set[0]]].out_edges.push_back({ex.edge, ex.c, ex.max_set});
    }
    return subs;
}

Vec OperatorResult::laplacian_weighted() const {
    Vec out = r;
    scale(out, -1.0);
    return out;
}

Vec OperatorResult::laplacian_measure() const {
    Vec out = rho;
    scale(out, -1.0);
    return out;
}

Vec OperatorResult::laplacian_normalized(const Hypergraph& h) const {
    Vec out(r.size());
    for (std::size_t u = 0; u < r.size(); ++u) out[u] = -std::sqrt(h.node_weights()[u]) * r[u];
    return out;
}

OperatorResult apply_operator(const Hypergraph& h, const StateVector& v, double tol,
                              DensityMethod method) {
    OperatorResult res;
    res.f = weighted_values(h, v);
    StateVector fv{Space::Weighted, res.f};
    res.extremes = extremes_of(h, res.f, tol);
    res.r.assign(h.node_count(), 0.0);
    res.rho.assign(h.node_count(), 0.0);
    for (const auto& sub : density_subproblems(h, res.extremes, fv, tol)) {
        for (auto& layer : peel(sub, method)) {
            for (int u : layer.nodes) {
                res.r[u] = layer.delta;
                res.rho[u] = h.node_weight(u) * layer.delta;
            }
            res.layers.push_back(std::move(layer));
        }
    }
    return res;
}

void operator_rates(const Hypergraph& h, const Vec& f, double tol, Vec& r_out,
                    DensityMethod method) {
    const auto extremes = extremes_of(h, f, tol);
    StateVector fv{Space::Weighted, f};
    r_out.assign(h.node_count(), 0.0);
    for (const auto& sub : density_subproblems(h, extremes, fv, tol))
        for (const auto& plan : peel_plan(sub, method))
            for (int u : plan.nodes) r_out[u] = plan.delta;
}

std::vector<Vec> even_split_matrix(const Hypergraph& h, const StateVector& v, double tol) {
    const int n = h.node_count();
    const Vec f = weighted_values(h, v);
    std::vector<Vec> a(n, Vec(n, 0.0));
    for (const auto& ex : extremes_of(h, f, tol)) {
        const auto& ed = h.edge(ex.edge);
        if (ex.max_set.size() == ed.nodes.size() && ex.min_set.size() == ed.nodes.size()) {
            // Tied edge: any split works; spread it over all pairs.
            const std::size_t sz = ed.nodes.size();
            if (sz == 1) continue;  // self-loop weight lands on the diagonal
            const double share = ed.weight / (0.5 * static_cast<double>(sz * (sz - 1)));
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = i + 1; j < sz; ++j) {
                    a[ed.nodes[i]][ed.nodes[j]] += 0.5 * share;
                    a[ed.nodes[j]][ed.nodes[i]] += 0.5 * share;
                }
        } else {
            const double share =
                ed.weight / static_cast<double>(ex.max_set.size() * ex.min_set.size());
            for (int u : ex.max_set)
                for (int w : ex.min_set) {
                    a[u][w] += share;
                    a[w][u] += share;
                }
        }
    }
    for (int u = 0; u < n; ++u) {
        double off = 0.0;
        for (int w = 0; w < n; ++w)
            if (w != u) off += a[u][w];
        a[u][u] = h.node_weight(u) - off;
    }
    return a;
}

OperatorResult apply_even_split_operator(const Hypergraph& h, const StateVector& v, double tol) {
    OperatorResult res;
    res.f = weighted_values(h, v);
    res.extremes = extremes_of(h, res.f, tol);
    const auto a = even_split_matrix(h, StateVector{Space::Weighted, res.f}, tol);
    const int n = h.node_count();
    res.r.assign(n, 0.0);
    res.rho.assign(n, 0.0);
    for (int u = 0; u < n; ++u) {
        double av = 0.0;
        for (int w = 0; w < n; ++w) av += a[u][w] * res.f[w];
        // L f = f - W^-1 A f; r = -L f.
        res.r[u] = av / h.node_weight(u) - res.f[u];
        res.rho[u] = h.node_weight(u) * res.r[u];
    }
    return res;
}

std::vector<Vec> edge_weight_split(const Hypergraph& h, const OperatorResult& result) {
    const int n = h.node_count();
    std::vector<Vec> a(n, Vec(n, 0.0));

    // rho by (edge, node)
    std::vector<std::vector<std::pair<int, double>>> edge_rho(h.edge_count());
    for (const auto& layer : result.layers)
        for (const auto& entry : layer.rho) edge_rho[entry.edge].push_back({entry.node, entry.value});

    for (const auto& ex : result.extremes) {
        const auto& ed = h.edge(ex.edge);
        const bool tied = ex.max_set.size() == ed.nodes.size() && ex.min_set.size() == ed.nodes.size();
        if (tied) {
            const std::size_t sz = ed.nodes.size();
            if (sz == 1) continue;
            const double share = ed.weight / (0.5 * static_cast<double>(sz * (sz - 1)));
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = i + 1; j < sz; ++j) {
                    a[ed.nodes[i]][ed.nodes[j]] += 0.5 * share;
                    a[ed.nodes[j]][ed.nodes[i]] += 0.5 * share;
                }
            continue;
        }
        // Transportation on S_e x I_e: donor u supplies -rho_u(e)/delta,
        // receiver v demands rho_v(e)/delta; any feasible split works, take
        // the greedy one in node order.
        std::vector<std::pair<int, double>> supplies, demands;
        for (const auto& [node, value] : edge_rho[ex.edge]) {
            if (value < 0.0) supplies.push_back({node, -value / ex.delta});
            else if (value > 0.0) demands.push_back({node, value / ex.delta});
        }
        std::sort(supplies.begin(), supplies.end());
        std::sort(demands.begin(), demands.end());
        std::size_t di = 0;
        for (auto& [u, sup] : supplies) {
            while (sup > 1e-14 && di < demands.size()) {
                auto& [w, dem] = demands[di];
                const double amount = std::min(sup, dem);
                a[u][w] += amount;
                a[w][u] += amount;
                sup -= amount;
                dem -= amount;
                if (dem <= 1e-14) ++di;
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        double off = 0.0;
        for (int w = 0; w < n; ++w)
            if (w != u) off += a[u][w];
        a[u][u] = h.node_weight(u) - off;
    }
    return a;
}

double rayleigh_quotient(const Hypergraph& h, const StateVector& v, double tol) {
    const Vec f = weighted_values(h, v);
    if (is_zero(f)) throw std::invalid_argument("Rayleigh quotient of the zero vector");
    Vec r;
    operator_rates(h, f, tol, r);
    const Vec& w = h.node_weights();
    // <f, L_w f>_w = -<f, r>_w
    return -dot_w(w, f, r) / dot_w(w, f, f);
}

double energy_identity_residual(const Hypergraph& h, const OperatorResult& result) {
    double lhs = 0.0;
    for (const auto& ex : result.extremes) {
        if (ex.c == 0.0) continue;
        double r_i = std::numeric_limits<double>::infinity();
        double r_s = -std::numeric_limits<double>::infinity();
        for (int u : ex.min_set) r_i = std::min(r_i, result.r[u]);
        for (int u : ex.max_set) r_s = std::max(r_s, result.r[u]);
        lhs += ex.c * (r_i - r_s);
    }
    return lhs - dot_w(h.node_weights(), result.r, result.r);
}

}  // namespace hyperlap
