#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace corank {

using NodeIndex = std::uint32_t;

struct DegreeStats {
    std::size_t in = 0;
    std::size_t out = 0;
    std::size_t total = 0;
    double weighted_total = 0.0;
};

// Weighted graph over string node ids, directed or undirected. Undirected
// edges are stored once under the (min, max) index pair. No self-loops; at
// most one edge per ordered pair (adding again keeps the stored weight,
// bump_edge accumulates). Edge iteration order is sorted by index pair, which
// keeps every downstream computation and export deterministic.
class Graph {
public:
    explicit Graph(bool directed) : directed_(directed) {}

    bool directed() const { return directed_; }
    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    NodeIndex add_node(const std::string& id);
    std::optional<NodeIndex> find_node(const std::string& id) const;
    const std::string& node_id(NodeIndex v) const { return ids_[v]; }
    const std::vector<std::string>& node_ids() const { return ids_; }

    // Drops self-loops. Returns true if a new edge was created.
    bool add_edge(const std::string& from, const std::string& to,
                  double weight = 1.0);
    // Adds delta to the edge weight, creating the edge at delta.
    void bump_edge(const std::string& from, const std::string& to,
                   double delta);

    std::optional<double> edge_weight(const std::string& from,
                                      const std::string& to) const;

    // Sorted by (from, to) node index; for undirected graphs from <= to.
    const std::map<std::pair<NodeIndex, NodeIndex>, double>& edges() const {
        return edges_;
    }

    // Out-neighbors (both directions for undirected graphs), sorted by
    // target index.
    const std::vector<std::pair<NodeIndex, double>>& neighbors(
        NodeIndex v) const;

    DegreeStats degree(NodeIndex v) const;
    std::unordered_map<std::string, DegreeStats> degree_stats() const;

private:
    std::pair<NodeIndex, NodeIndex> edge_key(NodeIndex a, NodeIndex b) const;
    void rebuild_adjacency() const;

    bool directed_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::map<std::pair<NodeIndex, NodeIndex>, double> edges_;

    mutable bool adjacency_valid_ = false;
    mutable std::vector<std::vector<std::pair<NodeIndex, double>>> adjacency_;
};

}  // namespace corank
