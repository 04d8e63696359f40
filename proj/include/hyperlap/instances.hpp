#pragma once

#include <string>
#include <vector>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

/// Names of the instances compiled into the library.
std::vector<std::string> bundled_instance_names();

bool is_bundled_instance(const std::string& name);

/// JSON text of a bundled instance; throws std::invalid_argument if unknown.
std::string bundled_instance_json(const std::string& name);

Hypergraph load_bundled_instance(const std::string& name);

/// Resolve a CLI instance argument: a bundled name first, else a file path.
Hypergraph load_instance(const std::string& name_or_path);

}  // namespace hyperlap
