#pragma once

#include <map>
#include <string>

#include "corank/graph.hpp"

namespace corank {

enum class GraphFormat { kGraphML, kDot, kTsv };

GraphFormat graph_format_from_string(const std::string& s);

// Serializations with nodes and edges in sorted order. GraphML carries the
// edge weight attribute and, when given, a per-node score attribute; weights
// use shortest round-trip formatting so a re-import is exact.
std::string to_graphml(const Graph& g,
                       const std::map<std::string, double>* scores = nullptr);
std::string to_dot(const Graph& g);
std::string to_edge_list_tsv(const Graph& g);

void export_graph(const Graph& g, GraphFormat format, const std::string& sink,
                  const std::map<std::string, double>* scores = nullptr);

struct GraphMLData {
    Graph graph{false};
    std::map<std::string, double> scores;
};

// Reads GraphML as produced by to_graphml.
GraphMLData load_graphml(const std::string& path);

Graph load_edge_list_tsv(const std::string& path, bool directed);

void write_file(const std::string& path, const std::string& content);

}  // namespace corank
