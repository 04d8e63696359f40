#pragma once

#include <vector>

namespace hyperlap {

/// Real-capacity max-flow via shortest augmenting paths (Edmonds-Karp).
/// Residual capacities below eps are treated as saturated; instances here are
/// tiny, so exactness wins over asymptotics.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count);

    int add_node();
    int node_count() const { return static_cast<int>(adjacency_.size()); }

    /// Adds a directed arc and its zero-capacity reverse; returns the arc id.
    int add_arc(int from, int to, double capacity);

    double max_flow(int source, int sink);

    double flow_on(int arc_id) const { return arcs_[arc_id].flow; }

    /// After max_flow: the maximal source side of a minimum cut, i.e. the
    /// complement of every node that can still reach the sink in the residual
    /// graph.  This is the union of the source sides of all minimum cuts.
    std::vector<char> max_source_side(int sink) const;

private:
    struct Arc {
        int to;
        double capacity;
        double flow;
    };

    double residual(int arc_id) const { return arcs_[arc_id].capacity - arcs_[arc_id].flow; }

    std::vector<Arc> arcs_;                    // arc 2k and 2k+1 are a pair
    std::vector<std::vector<int>> adjacency_;  // arc ids per node
    double eps_ = 1e-12;
};

}  // namespace hyperlap
