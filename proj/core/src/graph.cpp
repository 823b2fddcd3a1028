#include "corank/graph.hpp"

#include <algorithm>

namespace corank {

NodeIndex Graph::add_node(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    const auto v = static_cast<NodeIndex>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, v);
    adjacency_valid_ = false;
    return v;
}

std::optional<NodeIndex> Graph::find_node(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::pair<NodeIndex, NodeIndex> Graph::edge_key(NodeIndex a,
                                                NodeIndex b) const {
    if (!directed_ && b < a) std::swap(a, b);
    return {a, b};
}

bool Graph::add_edge(const std::string& from, const std::string& to,
                     double weight) {
    const NodeIndex a = add_node(from);
    const NodeIndex b = add_node(to);
    if (a == b) return false;
    const bool inserted = edges_.emplace(edge_key(a, b), weight).second;
    if (inserted) adjacency_valid_ = false;
    return inserted;
}

void Graph::bump_edge(const std::string& from, const std::string& to,
                      double delta) {
    const NodeIndex a = add_node(from);
    const NodeIndex b = add_node(to);
    if (a == b) return;
    edges_[edge_key(a, b)] += delta;
    adjacency_valid_ = false;
}

std::optional<double> Graph::edge_weight(const std::string& from,
                                         const std::string& to) const {
    const auto a = find_node(from);
    const auto b = find_node(to);
    if (!a || !b) return std::nullopt;
    auto it = edges_.find(edge_key(*a, *b));
    if (it == edges_.end()) return std::nullopt;
    return it->second;
}

void Graph::rebuild_adjacency() const {
    adjacency_.assign(ids_.size(), {});
    for (const auto& [key, w] : edges_) {
        adjacency_[key.first].emplace_back(key.second, w);
        if (!directed_) adjacency_[key.second].emplace_back(key.first, w);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    adjacency_valid_ = true;
}

const std::vector<std::pair<NodeIndex, double>>& Graph::neighbors(
    NodeIndex v) const {
    if (!adjacency_valid_) rebuild_adjacency();
    return adjacency_[v];
}

DegreeStats Graph::degree(NodeIndex v) const {
    DegreeStats d;
    for (const auto& [key, w] : edges_) {
        if (key.first == v) {
            ++d.out;
            d.weighted_total += w;
            if (!directed_) ++d.in;
        }
        if (key.second == v) {
            ++d.in;
            d.weighted_total += w;
            if (!directed_) ++d.out;
        }
    }
    d.total = directed_ ? d.in + d.out : d.in;
    return d;
}

std::unordered_map<std::string, DegreeStats> Graph::degree_stats() const {
    std::vector<DegreeStats> stats(ids_.size());
    for (const auto& [key, w] : edges_) {
        auto& from = stats[key.first];
        auto& to = stats[key.second];
        ++from.out;
        ++to.in;
        from.weighted_total += w;
        to.weighted_total += w;
        if (!directed_) {
            ++from.in;
            ++to.out;
        }
    }
    std::unordered_map<std::string, DegreeStats> out;
    out.reserve(ids_.size());
    for (NodeIndex v = 0; v < ids_.size(); ++v) {
        stats[v].total = directed_ ? stats[v].in + stats[v].out : stats[v].in;
        out[ids_[v]] = stats[v];
    }
    return out;
}

}  // namespace corank
