#include "hyperlap/instances.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyperlap {

namespace {

// 4 nodes of weight 3 each; the size-3 edge e5 plus the self-loop e4 make
// the naive even-split operator misbehave while gamma_2 = 2/3 stays clean.
const char* kLouis4 = R"JSON({
  "nodes": ["a", "b", "c", "d"],
  "edges": [
    {"nodes": ["a", "b"], "weight": 1.0},
    {"nodes": ["b", "d"], "weight": 1.0},
    {"nodes": ["c", "d"], "weight": 2.0},
    {"nodes": ["a"], "weight": 1.0},
    {"nodes": ["a", "b", "c"], "weight": 1.0}
  ]
})JSON";

// 5 nested unit edges {a}, {a,b}, ..., {a,..,e}; the second minimizer is not
// unique, so the third sequential minimum depends on the branch taken.
const char* kNested5 = R"JSON({
  "nodes": ["a", "b", "c", "d", "e"],
  "edges": [
    {"nodes": ["a"], "weight": 1.0},
    {"nodes": ["a", "b"], "weight": 1.0},
    {"nodes": ["a", "b", "c"], "weight": 1.0},
    {"nodes": ["a", "b", "c", "d"], "weight": 1.0},
    {"nodes": ["a", "b", "c", "d", "e"], "weight": 1.0}
  ]
})JSON";

// Two edges, one of size 3: the third sequential minimizer exists but is not
// an eigenvector of the operator.
const char* kTwoedge4 = R"JSON({
  "nodes": ["a", "b", "c", "d"],
  "edges": [
    {"nodes": ["a", "b"], "weight": 1.0},
    {"nodes": ["b", "c", "d"], "weight": 1.0}
  ]
})JSON";

}  // namespace

std::vector<std::string> bundled_instance_names() { return {"louis4", "nested5", "twoedge4"}; }

bool is_bundled_instance(const std::string& name) {
    return name == "louis4" || name == "nested5" || name == "twoedge4";
}

std::string bundled_instance_json(const std::string& name) {
    if (name == "louis4") return kLouis4;
    if (name == "nested5") return kNested5;
    if (name == "twoedge4") return kTwoedge4;
    throw std::invalid_argument("unknown bundled instance: " + name);
}

Hypergraph load_bundled_instance(const std::string& name) {
    return load_hypergraph(bundled_instance_json(name));
}

Hypergraph load_instance(const std::string& name_or_path) {
    if (is_bundled_instance(name_or_path)) return load_bundled_instance(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + name_or_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_hypergraph(buf.str());
}

}  // namespace hyperlap
