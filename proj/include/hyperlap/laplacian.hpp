#pragma once

#include <string>
#include <vector>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

/// Default tolerance for snapping nearly-equal weighted values into one
/// equivalence class and into the extremal sets of an edge.
inline constexpr double kDefaultTol = 1e-9;

/// Per-edge extremal data at a weighted vector f: the argmax set S, the
/// argmin set I, the raw discrepancy delta = max f - min f (never snapped),
/// and the flow rate c = w_e * delta.
struct EdgeExtremes {
    int edge = -1;
    std::vector<int> max_set;  // S_e
    std::vector<int> min_set;  // I_e
    double delta = 0.0;
    double c = 0.0;
};

/// One edge as seen from inside a density subproblem: the edge id, its flow
/// rate c, and the nodes of the class it connects to.  For an inflow edge
/// `nodes` is the (residual) receiver set, for an outflow edge the donor set.
struct SubEdge {
    int edge = -1;
    double c = 0.0;
    std::vector<int> nodes;
};

/// The per-equivalence-class rate problem: which subset of equal-valued
/// nodes separates upward first.  delta(X) = (c(in_X) - c(out_X)) / w(X)
/// where an inflow edge counts iff its receiver set lies inside X and an
/// outflow edge counts iff any donor is in X.
struct DensitySubproblem {
    std::vector<int> nodes;          // the class U (sorted)
    std::vector<SubEdge> in_edges;   // edges whose receivers are in U
    std::vector<SubEdge> out_edges;  // edges whose donors are in U
    const Hypergraph* graph = nullptr;
};

enum class DensityMethod { Auto, BruteForce, ParametricCut };

struct DensityResult {
    std::vector<int> set;  // P: the unique maximal maximizer (sorted)
    double delta = 0.0;    // delta(P) = max over nonempty subsets
};

/// delta(X) for an explicit subset; shared by both maximization methods so
/// they agree bit-for-bit when they return the same set.
double density_of(const DensitySubproblem& sub, const std::vector<int>& subset);

/// Maximal maximum-density subset.  BruteForce enumerates all 2^|U|-1
/// subsets and refuses |U| > 22; ParametricCut solves it by min-cut
/// (Dinkelbach iterations on delta).  Auto picks brute force when it fits.
DensityResult max_density_set(const DensitySubproblem& sub,
                              DensityMethod method = DensityMethod::Auto);

struct RhoEntry {
    int node = -1;
    int edge = -1;
    double value = 0.0;  // rate of measure into (positive) or out of node
};

/// One peel layer: a maximal maximum-density subset T together with its rate
/// delta, the inflow and outflow edges it consumes, and a zero-surplus rate
/// assignment rho.
struct PeelLayer {
    std::vector<int> nodes;         // T (sorted)
    double delta = 0.0;
    std::vector<int> in_edges;      // edge ids consumed on the inflow side
    std::vector<int> out_edges;     // edge ids consumed on the outflow side
    std::vector<RhoEntry> rho;
};

/// Recursively peel a class into layers of strictly decreasing delta.  The
/// layers partition U and each carries its zero-surplus flow.
std::vector<PeelLayer> peel(const DensitySubproblem& sub,
                            DensityMethod method = DensityMethod::Auto);

/// Zero-surplus assignment for one layer: inflow edges supply c_e, outflow
/// edges demand c_e, node v absorbs w_v * delta.  `in_edges[i].nodes` /
/// `out_edges[i].nodes` must already be restricted to the layer.  The
/// underlying flow is guaranteed feasible; infeasibility means a broken
/// invariant upstream and throws std::logic_error.
std::vector<RhoEntry> solve_layer_flow(const std::vector<int>& layer_nodes, double delta,
                                       const std::vector<SubEdge>& in_edges,
                                       const std::vector<SubEdge>& out_edges,
                                       const Vec& node_weights);

/// Full evaluation of the diffusion operator at one state.
struct OperatorResult {
    Vec f;                              // weighted-space input
    Vec r;                              // df/dt (weighted space)
    Vec rho;                            // dphi/dt = W r (measure space)
    std::vector<PeelLayer> layers;      // classes in descending f order
    std::vector<EdgeExtremes> extremes;

    Vec laplacian_weighted() const;                        // L_w f  = -r
    Vec laplacian_measure() const;                         // L phi  = -W r
    Vec laplacian_normalized(const Hypergraph& h) const;   // L^ x   = -W^1/2 r
};

std::vector<EdgeExtremes> edge_extremes(const Hypergraph& h, const StateVector& v,
                                        double tol = kDefaultTol);

/// Equivalence classes of equal f value (descending), with their inflow and
/// outflow edges.  Consecutive sorted values within tol are grouped.
std::vector<DensitySubproblem> density_subproblems(const Hypergraph& h,
                                                   const std::vector<EdgeExtremes>& extremes,
                                                   const StateVector& v,
                                                   double tol = kDefaultTol);

/// Evaluate the unique rate vector r = df/dt of the diffusion at v (any
/// space; converted to weighted internally).  Positively homogeneous and
/// measure-conserving; byte-deterministic for fixed instance and tolerance.
OperatorResult apply_operator(const Hypergraph& h, const StateVector& v,
                              double tol = kDefaultTol,
                              DensityMethod method = DensityMethod::Auto);

/// Rate vector only, no diagnostics; the hot path for simulation loops.
void operator_rates(const Hypergraph& h, const Vec& f, double tol, Vec& r_out,
                    DensityMethod method = DensityMethod::Auto);

/// The flawed reference operator that splits each w_e uniformly over the
/// pairs in S_e x I_e.  Provided to reproduce its failure modes; `layers`
/// is empty in the result.
OperatorResult apply_even_split_operator(const Hypergraph& h, const StateVector& v,
                                         double tol = kDefaultTol);

/// The uniform-split adjacency matrix used by apply_even_split_operator.
std::vector<Vec> even_split_matrix(const Hypergraph& h, const StateVector& v,
                                   double tol = kDefaultTol);

/// A symmetric edge-weight split A_f consistent with the flows of `result`:
/// nonnegative pair weights summing to w_e per edge, row sums w_u, and
/// (I - W^-1 A_f) f = -r.  The split is not unique; one feasible choice is
/// returned (edges with delta = 0 are split uniformly).
std::vector<Vec> edge_weight_split(const Hypergraph& h, const OperatorResult& result);

/// <f, L_w f>_w / <f, f>_w via the operator; coincides with the discrepancy
/// ratio.  Throws std::invalid_argument on the zero vector.
double rayleigh_quotient(const Hypergraph& h, const StateVector& v,
                         double tol = kDefaultTol);

/// sum_e c_e (r_I(e) - r_S(e)) - ||r||_w^2, which is identically zero; the
/// residual is a health signal for the flow decomposition.
double energy_identity_residual(const Hypergraph& h, const OperatorResult& result);

}  // namespace hyperlap
