#pragma once

#include <unordered_map>
#include <vector>

#include "corank/graph.hpp"
#include "corank/mention.hpp"

namespace corank {

// Undirected person-person graph: edge weight counts the documents in which
// both entities are mentioned (multiple mentions within one document count
// once).
struct CooccurrenceGraph {
    Graph graph{false};
    // Number of documents mentioning each entity at least once.
    std::unordered_map<std::string, std::size_t> doc_count;
};

CooccurrenceGraph build_cooccurrence(
    const DocumentSet& docs,
    const std::vector<std::vector<Mention>>& mentions_per_doc);

}  // namespace corank
