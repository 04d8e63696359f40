#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace hyperlap {

using nlohmann::json;

const char* space_name(Space s) {
    switch (s) {
        case Space::Measure: return "measure";
        case Space::Weighted: return "weighted";
        case Space::Normalized: return "normalized";
    }
    return "?";
}

Space parse_space(const std::string& name) {
    if (name == "measure") return Space::Measure;
    if (name == "weighted") return Space::Weighted;
    if (name == "normalized") return Space::Normalized;
    throw std::invalid_argument("unknown space: " + name);
}

Hypergraph::Hypergraph(std::vector<std::string> node_names, std::vector<Edge> edges)
    : names_(std::move(node_names)), edges_(std::move(edges)) {
    const int n = static_cast<int>(names_.size());
    if (n == 0) throw std::invalid_argument("hypergraph has no nodes");
    for (int u = 0; u < n; ++u) {
        auto [it, fresh] = index_.emplace(names_[u], u);
        (void)it;
        if (!fresh) throw std::invalid_argument("duplicate node id: " + names_[u]);
    }
    weights_.assign(n, 0.0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        Edge& ed = edges_[e];
        if (ed.nodes.empty())
            throw std::invalid_argument("edge " + std::to_string(e) + " is empty");
        if (!(ed.weight > 0.0) || !std::isfinite(ed.weight))
            throw std::invalid_argument("edge " + std::to_string(e) +
                                        " has nonpositive weight");
        std::sort(ed.nodes.begin(), ed.nodes.end());
        for (std::size_t i = 0; i < ed.nodes.size(); ++i) {
            const int u = ed.nodes[i];
            if (u < 0 || u >= n)
                throw std::invalid_argument("edge " + std::to_string(e) +
                                            " references unknown node index");
            if (i > 0 && ed.nodes[i] == ed.nodes[i - 1])
                throw std::invalid_argument("edge " + std::to_string(e) +
                                            " repeats node " + names_[u]);
            weights_[u] += ed.weight;
        }
    }
    for (int u = 0; u < n; ++u) {
        if (!(weights_[u] > 0.0))
            throw std::invalid_argument("node " + names_[u] +
                                        " is covered by no edge (zero weight)");
        total_weight_ += weights_[u];
    }
}

int Hypergraph::node_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("unknown node id: " + name);
    return it->second;
}

std::uint64_t Hypergraph::content_hash() const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV offset basis
    auto mix_byte = [&h](unsigned char b) {
        h ^= b;
        h *= 1099511628211ULL;
    };
    auto mix_str = [&](const std::string& s) {
        for (unsigned char c : s) mix_byte(c);
        mix_byte(0);
    };
    auto mix_u64 = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(v >> (8 * i)));
    };
    for (const auto& name : names_) mix_str(name);
    for (const auto& ed : edges_) {
        mix_u64(ed.nodes.size());
        for (int u : ed.nodes) mix_u64(static_cast<std::uint64_t>(u));
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(ed.weight));
        std::memcpy(&bits, &ed.weight, sizeof(bits));
        mix_u64(bits);
    }
    return h;
}

Hypergraph load_hypergraph(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("invalid instance JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
        throw std::invalid_argument("instance JSON must have 'nodes' and 'edges'");

    std::vector<std::string> names;
    for (const auto& n : doc["nodes"]) {
        if (!n.is_string()) throw std::invalid_argument("node ids must be strings");
        names.push_back(n.get<std::string>());
    }
    std::unordered_map<std::string, int> index;
    for (int u = 0; u < static_cast<int>(names.size()); ++u) {
        if (!index.emplace(names[u], u).second)
            throw std::invalid_argument("duplicate node id: " + names[u]);
    }

    std::vector<Hypergraph::Edge> edges;
    for (const auto& je : doc["edges"]) {
        if (!je.is_object() || !je.contains("nodes") || !je.contains("weight"))
            throw std::invalid_argument("each edge needs 'nodes' and 'weight'");
        Hypergraph::Edge ed;
        for (const auto& n : je["nodes"]) {
            const std::string name = n.get<std::string>();
            auto it = index.find(name);
            if (it == index.end())
                throw std::invalid_argument("edge references unknown node: " + name);
            ed.nodes.push_back(it->second);
        }
        ed.weight = je["weight"].get<double>();
        edges.push_back(std::move(ed));
    }
    return Hypergraph(std::move(names), std::move(edges));
}

std::string hypergraph_to_json(const Hypergraph& h) {
    json doc;
    doc["nodes"] = h.node_names();
    doc["edges"] = json::array();
    for (const auto& ed : h.edges()) {
        json je;
        je["nodes"] = json::array();
        for (int u : ed.nodes) je["nodes"].push_back(h.node_name(u));
        je["weight"] = ed.weight;
        doc["edges"].push_back(je);
    }
    return doc.dump(2);
}

static void check_size(const Hypergraph& h, const StateVector& v) {
    if (static_cast<int>(v.values.size()) != h.node_count())
        throw std::invalid_argument("state vector length does not match node count");
}

StateVector convert(const Hypergraph& h, const StateVector& v, Space target) {
    check_size(h, v);
    if (v.space == target) return v;
    const Vec& w = h.node_weights();
    const int n = h.node_count();
    // Go through the weighted representation.
    Vec f(n);
    switch (v.space) {
        case Space::Weighted:
            f = v.values;
            break;
        case Space::Measure:
            for (int u = 0; u < n; ++u) f[u] = v.values[u] / w[u];
            break;
        case Space::Normalized:
            for (int u = 0; u < n; ++u) f[u] = v.values[u] / std::sqrt(w[u]);
            break;
    }
    StateVector out;
    out.space = target;
    out.values.resize(n);
    switch (target) {
        case Space::Weighted:
            out.values = f;
            break;
        case Space::Measure:
            for (int u = 0; u < n; ++u) out.values[u] = f[u] * w[u];
            break;
        case Space::Normalized:
            for (int u = 0; u < n; ++u) out.values[u] = f[u] * std::sqrt(w[u]);
            break;
    }
    return out;
}

double discrepancy_ratio(const Hypergraph& h, const StateVector& v) {
    check_size(h, v);
    const Vec f = convert(h, v, Space::Weighted).values;
    if (is_zero(f)) throw std::invalid_argument("discrepancy ratio of the zero vector");
    double num = 0.0;
    for (const auto& ed : h.edges()) {
        double lo = f[ed.nodes[0]], hi = lo;
        for (int u : ed.nodes) {
            lo = std::min(lo, f[u]);
            hi = std::max(hi, f[u]);
        }
        const double d = hi - lo;
        num += ed.weight * d * d;
    }
    const double den = dot_w(h.node_weights(), f, f);
    return num / den;
}

double edge_expansion(const Hypergraph& h, const std::vector<int>& subset) {
    const int n = h.node_count();
    std::vector<char> in(n, 0);
    int count = 0;
    for (int u : subset) {
        if (u < 0 || u >= n) throw std::invalid_argument("subset node index out of range");
        if (!in[u]) {
            in[u] = 1;
            ++count;
        }
    }
    if (count == 0 || count == n)
        throw std::invalid_argument("edge expansion needs a nonempty proper subset");
    double cut = 0.0;
    for (const auto& ed : h.edges()) {
        bool any_in = false, any_out = false;
        for (int u : ed.nodes) (in[u] ? any_in : any_out) = true;
        if (any_in && any_out) cut += ed.weight;
    }
    double w_s = 0.0;
    for (int u = 0; u < n; ++u)
        if (in[u]) w_s += h.node_weight(u);
    return cut / w_s;
}

StateVector equilibrium(const Hypergraph& h, const StateVector& phi) {
    check_size(h, phi);
    const Vec p = convert(h, phi, Space::Measure).values;
    const double total = sum(p);
    const double rate = total / h.total_weight();
    StateVector out;
    out.space = Space::Measure;
    out.values.resize(h.node_count());
    for (int u = 0; u < h.node_count(); ++u) out.values[u] = rate * h.node_weight(u);
    return out;
}

}  // namespace hyperlap
