#pragma once

#include <string>
#include <string_view>

#include "graph.hpp"

namespace dio {

enum class GraphFormat { edges, json, graph6, dot };

// Accepts "edges"/"edge-list", "json", "graph6"/"g6", "dot".
GraphFormat parse_format(std::string_view name);

// Edge-list: one "u v" pair per line, 1-based, '#' comments; order is the
// largest vertex id seen. JSON: {"n":int,"edges":[[u,v],...]}. graph6 per the
// standard encoding. dot is serialize-only.
Graph parse_graph(std::string_view text, GraphFormat format);

// Deterministic output: edges sorted lexicographically, JSON compact with
// fixed key order, graph6 canonical bytes.
std::string serialize_graph(const Graph& g, GraphFormat format);

// Same graph on max(n, order) vertices; new vertices are isolated.
Graph pad_to_order(const Graph& g, int n);

} // namespace dio
