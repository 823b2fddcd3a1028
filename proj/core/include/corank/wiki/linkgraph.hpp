#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "corank/graph.hpp"
#include "corank/wiki/person.hpp"

namespace corank::wiki {

struct LinkGraphResult {
    Graph graph{true};  // directed article link graph
    std::size_t dropped_redirects = 0;  // chains longer than 5 hops
};

// Nodes are the eligible article titles; edge (a, b) exists when a's
// wikitext links to b after redirect resolution (up to 5 hops). Self-loops
// dropped, parallel links collapsed. Callers are expected to cohort-filter
// upstream.
LinkGraphResult build_link_graph(
    const std::vector<PersonArticle>& pages,
    const std::unordered_map<std::string, std::string>& redirects);

// score(v) = in_degree(v) / max(out_degree(v), 1)
std::map<std::string, double> prominence(const Graph& g);

// Induced subgraph on {in_degree > min_inlinks} plus every node with an edge
// to or from one of the top_n nodes by prominence. Degrees are recomputed on
// the subgraph.
Graph prune_graph(const Graph& g, std::size_t min_inlinks, std::size_t top_n);

// Redirect table from raw pages whose wikitext starts with a redirect
// directive, or loaded from a sidecar TSV (from<TAB>to per line).
std::unordered_map<std::string, std::string> load_redirect_tsv(
    const std::string& path);

}  // namespace corank::wiki
