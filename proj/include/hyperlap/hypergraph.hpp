#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperlap/vecmath.hpp"

namespace hyperlap {

/// The three isomorphic coordinate systems.  A measure vector phi describes
/// how much measure sits on each node; f = W^-1 phi is the weighted view the
/// discrepancy ratio lives in; x = W^1/2 f is the normalized view the
/// Laplacian lives in.
enum class Space { Measure, Weighted, Normalized };

const char* space_name(Space s);
Space parse_space(const std::string& name);

/// A vector over the nodes of a hypergraph, tagged with its space.
struct StateVector {
    Space space = Space::Weighted;
    Vec values;

    StateVector() = default;
    StateVector(Space s, Vec v) : space(s), values(std::move(v)) {}
};

/// Immutable weighted hypergraph.  Node weights are always derived from the
/// incident edge weights (w_u = sum of w_e over edges containing u), never
/// supplied by the caller.  Size-1 edges (self-loops) are allowed: they add
/// node weight but can never carry a discrepancy.
class Hypergraph {
public:
    struct Edge {
        std::vector<int> nodes;  // sorted node indices, no duplicates
        double weight = 0.0;
    };

    Hypergraph(std::vector<std::string> node_names, std::vector<Edge> edges);

    int node_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& node_names() const { return names_; }
    const std::string& node_name(int u) const { return names_[u]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    /// Derived node weights w_u (all strictly positive).
    const Vec& node_weights() const { return weights_; }
    double node_weight(int u) const { return weights_[u]; }
    double total_weight() const { return total_weight_; }  // w(V)

    /// Index of a node name; throws std::invalid_argument if unknown.
    int node_index(const std::string& name) const;

    /// FNV-1a hash of the canonical content (names, edges, weight bits);
    /// stable across runs for identical instances.
    std::uint64_t content_hash() const;

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    Vec weights_;
    double total_weight_ = 0.0;
    std::unordered_map<std::string, int> index_;
};

/// Parse the JSON instance format
///   {"nodes": ["a","b"], "edges": [{"nodes":["a","b"], "weight": 1.0}]}
/// Rejects duplicate node ids, unknown node references, nonpositive weights
/// and nodes covered by no edge.  Node order is the file order.
Hypergraph load_hypergraph(const std::string& json_text);

/// Serialize back to the JSON instance format (canonical field order).
std::string hypergraph_to_json(const Hypergraph& h);

/// Change coordinates between the three spaces.  Round trips are identities
/// up to floating-point rounding.
StateVector convert(const Hypergraph& h, const StateVector& v, Space target);

/// D_w(f) = sum_e w_e max_{u,v in e}(f_u - f_v)^2 / sum_u w_u f_u^2.
/// Any input space is accepted (converted to weighted internally).
/// Scale-invariant; throws std::invalid_argument on the zero vector.
double discrepancy_ratio(const Hypergraph& h, const StateVector& v);

/// Edge expansion w(boundary S) / w(S) for a nonempty proper subset S,
/// given as node indices.  Equals discrepancy_ratio of the indicator of S.
double edge_expansion(const Hypergraph& h, const std::vector<int>& subset);

/// Equilibrium measure: total measure of phi redistributed proportionally to
/// node weights.  The fixed point of the diffusion.
StateVector equilibrium(const Hypergraph& h, const StateVector& phi);

}  // namespace hyperlap
