#pragma once

#include <string>

#include "causalsearch/graph.hpp"

namespace causalsearch {

/// Parses the graph JSON format
///   {"nodes":["A",...],"directed":[["A","B"],...],"undirected":[["A","C"],...]}
/// Reports parse errors with location, duplicate pairs and unknown endpoints.
Pdag load_graph(const std::string& text);

/// Canonical serialization: nodes sorted, pair lists sorted lexicographically,
/// undirected pairs low-before-high. Output is bit-exact for equal graphs.
std::string save_graph(const Pdag& g);

Pdag load_graph_file(const std::string& path);
void save_graph_file(const Pdag& g, const std::string& path);

}  // namespace causalsearch
