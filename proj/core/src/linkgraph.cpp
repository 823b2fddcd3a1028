#include "corank/wiki/linkgraph.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "corank/error.hpp"
#include "corank/wiki/wikitext.hpp"

namespace corank::wiki {

namespace {

constexpr int kMaxRedirectHops = 5;

}  // namespace

LinkGraphResult build_link_graph(
    const std::vector<PersonArticle>& pages,
    const std::unordered_map<std::string, std::string>& redirects) {
    LinkGraphResult result;
    std::unordered_set<std::string> eligible;
    for (const auto& p : pages) {
        eligible.insert(p.title);
        result.graph.add_node(p.title);
    }

    auto resolve = [&](std::string target) -> std::string {
        int hops = 0;
        while (true) {
            auto it = redirects.find(target);
            if (it == redirects.end()) return target;
            if (++hops > kMaxRedirectHops) {
                ++result.dropped_redirects;
                return {};
            }
            target = it->second;
        }
    };

    for (const auto& p : pages) {
        for (const auto& raw_target : p.outlinks) {
            const std::string target = resolve(raw_target);
            if (target.empty() || target == p.title) continue;
            if (!eligible.count(target)) continue;
            result.graph.add_edge(p.title, target);
        }
    }
    return result;
}

std::map<std::string, double> prominence(const Graph& g) {
    std::map<std::string, double> scores;
    for (const auto& [id, d] : g.degree_stats())
        scores[id] = static_cast<double>(d.in) /
                     static_cast<double>(std::max<std::size_t>(d.out, 1));
    return scores;
}

Graph prune_graph(const Graph& g, std::size_t min_inlinks, std::size_t top_n) {
    const auto degrees = g.degree_stats();

    // Top nodes by prominence, descending score then ascending title.
    std::vector<std::pair<std::string, double>> by_prominence;
    for (const auto& [id, score] : prominence(g))
        by_prominence.emplace_back(id, score);
    std::sort(by_prominence.begin(), by_prominence.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    if (top_n > by_prominence.size()) top_n = by_prominence.size();

    std::unordered_set<std::string> prominent;
    for (std::size_t i = 0; i < top_n; ++i)
        prominent.insert(by_prominence[i].first);

    std::unordered_set<std::string> keep;
    for (const auto& [id, d] : degrees)
        if (d.in > min_inlinks) keep.insert(id);
    for (const auto& [key, w] : g.edges()) {
        (void)w;
        const std::string& from = g.node_id(key.first);
        const std::string& to = g.node_id(key.second);
        if (prominent.count(from)) keep.insert(to);
        if (prominent.count(to)) keep.insert(from);
    }

    Graph pruned(g.directed());
    std::vector<std::string> kept_sorted(keep.begin(), keep.end());
    std::sort(kept_sorted.begin(), kept_sorted.end());
    for (const auto& id : kept_sorted) pruned.add_node(id);
    for (const auto& [key, w] : g.edges()) {
        const std::string& from = g.node_id(key.first);
        const std::string& to = g.node_id(key.second);
        if (keep.count(from) && keep.count(to)) pruned.add_edge(from, to, w);
    }
    return pruned;
}

std::unordered_map<std::string, std::string> load_redirect_tsv(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open redirect table: " + path);
    std::unordered_map<std::string, std::string> redirects;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("redirect table line " + std::to_string(lineno) +
                                 ": expected from<TAB>to",
                             lineno);
        redirects[normalize_title(line.substr(0, tab))] =
            normalize_title(line.substr(tab + 1));
    }
    return redirects;
}

}  // namespace corank::wiki
