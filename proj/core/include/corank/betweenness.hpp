#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "corank/graph.hpp"

namespace corank {

struct CentralityResult {
    std::unordered_map<std::string, double> raw;
    std::unordered_map<std::string, double> normalized;  // in [0, 1]
    bool directed = false;
    bool weighted = false;
};

// Exact betweenness via Brandes' dependency accumulation. Unweighted mode
// uses breadth-first shortest paths; weighted mode travels distances
// 1/weight, so heavier co-occurrence means closer. Endpoints are excluded
// and undirected pairs are counted once. Normalization divides by
// (n-1)(n-2)/2 for undirected graphs and (n-1)(n-2) for directed ones;
// graphs with n <= 2 score all zeros.
//
// Sources are processed in blocks of fixed size so that the reduction order,
// and therefore the bits of the result, do not depend on the worker count.
CentralityResult betweenness(const Graph& g, bool weighted,
                             unsigned workers = 1);

// Pages ranked by unweighted betweenness of the backlink graph, descending,
// ties broken lexicographically by URL.
std::vector<std::pair<std::string, double>> page_importance(
    const Graph& page_graph, unsigned workers = 1);

}  // namespace corank
