#include "hyperlap/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace hyperlap {

FlowNetwork::FlowNetwork(int node_count) : adjacency_(node_count) {}

int FlowNetwork::add_node() {
    adjacency_.emplace_back();
    return static_cast<int>(adjacency_.size()) - 1;
}

int FlowNetwork::add_arc(int from, int to, double capacity) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0.0});
    arcs_.push_back({from, 0.0, 0.0});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    eps_ = std::max(eps_, 1e-12 * capacity);
    return id;
}

double FlowNetwork::max_flow(int source, int sink) {
    double total = 0.0;
    std::vector<int> parent_arc(node_count());
    for (;;) {
        // BFS for the shortest augmenting path.
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        parent_arc[source] = -2;
        std::deque<int> queue{source};
        while (!queue.empty() && parent_arc[sink] == -1) {
            const int u = queue.front();
            queue.pop_front();
            for (int id : adjacency_[u]) {
                const int v = arcs_[id].to;
                if (parent_arc[v] == -1 && residual(id) > eps_) {
                    parent_arc[v] = id;
                    queue.push_back(v);
                }
            }
        }
        if (parent_arc[sink] == -1) break;
        double bottleneck = std::numeric_limits<double>::infinity();
        for (int v = sink; v != source;) {
            const int id = parent_arc[v];
            bottleneck = std::min(bottleneck, residual(id));
            v = arcs_[id ^ 1].to;
        }
        for (int v = sink; v != source;) {
            const int id = parent_arc[v];
            arcs_[id].flow += bottleneck;
            arcs_[id ^ 1].flow -= bottleneck;
            v = arcs_[id ^ 1].to;
        }
        total += bottleneck;
    }
    return total;
}

std::vector<char> FlowNetwork::max_source_side(int sink) const {
    // Nodes that can reach the sink through residual arcs are excluded.
    std::vector<char> reaches_sink(node_count(), 0);
    reaches_sink[sink] = 1;
    std::deque<int> queue{sink};
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int id : adjacency_[v]) {
            // id goes v -> u; its pair (id^1) is the arc u -> v whose residual
            // tells us whether u can step to v.
            const int u = arcs_[id].to;
            if (!reaches_sink[u] && residual(id ^ 1) > eps_) {
                reaches_sink[u] = 1;
                queue.push_back(u);
            }
        }
    }
    std::vector<char> side(node_count());
    for (int v = 0; v < node_count(); ++v) side[v] = reaches_sink[v] ? 0 : 1;
    return side;
}

}  // namespace hyperlap
