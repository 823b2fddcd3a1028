#include "corank/betweenness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <thread>

#include "corank/error.hpp"

namespace corank {

namespace {

constexpr std::size_t kSourceBlock = 64;

// One Brandes accumulation from source s, added into acc.
void accumulate_from_source(const Graph& g, NodeIndex s, bool weighted,
                            std::vector<double>& acc) {
    const std::size_t n = g.node_count();
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<std::vector<NodeIndex>> preds(n);
    std::vector<NodeIndex> order;
    order.reserve(n);
    sigma[s] = 1.0;

    if (!weighted) {
        std::vector<int> dist(n, -1);
        dist[s] = 0;
        std::deque<NodeIndex> queue{s};
        while (!queue.empty()) {
            const NodeIndex u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (const auto& [v, w] : g.neighbors(u)) {
                (void)w;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
                if (dist[v] == dist[u] + 1) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
    } else {
        constexpr double inf = std::numeric_limits<double>::infinity();
        std::vector<double> dist(n, inf);
        std::vector<char> settled(n, 0);
        dist[s] = 0.0;
        using Item = std::pair<double, NodeIndex>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.emplace(0.0, s);
        while (!pq.empty()) {
            const auto [d, u] = pq.top();
            pq.pop();
            if (settled[u]) continue;
            settled[u] = 1;
            order.push_back(u);
            for (const auto& [v, w] : g.neighbors(u)) {
                const double nd = d + 1.0 / w;
                if (nd < dist[v]) {
                    dist[v] = nd;
                    sigma[v] = sigma[u];
                    preds[v].assign(1, u);
                    pq.emplace(nd, v);
                } else if (nd == dist[v] && !settled[v]) {
                    sigma[v] += sigma[u];
                    preds[v].push_back(u);
                }
            }
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeIndex w = *it;
        for (const NodeIndex u : preds[w])
            delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
        if (w != s) acc[w] += delta[w];
    }
}

}  // namespace

CentralityResult betweenness(const Graph& g, bool weighted, unsigned workers) {
    const std::size_t n = g.node_count();
    if (weighted) {
        for (const auto& [key, w] : g.edges()) {
            if (!(w > 0.0))
                throw Error("non-positive weight on edge " +
                            g.node_id(key.first) + " -> " +
                            g.node_id(key.second));
        }
    }

    if (n > 0) g.neighbors(0);  // build adjacency before the workers start

    const std::size_t blocks = (n + kSourceBlock - 1) / kSourceBlock;
    std::vector<std::vector<double>> partial(blocks);

    auto run_block = [&](std::size_t b) {
        partial[b].assign(n, 0.0);
        const std::size_t lo = b * kSourceBlock;
        const std::size_t hi = std::min(n, lo + kSourceBlock);
        for (std::size_t s = lo; s < hi; ++s)
            accumulate_from_source(g, static_cast<NodeIndex>(s), weighted,
                                   partial[b]);
    };

    workers = std::max(1u, workers);
    if (workers == 1 || blocks <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned count = std::min<std::size_t>(workers, blocks);
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back([&]() {
                for (std::size_t b = next.fetch_add(1); b < blocks;
                     b = next.fetch_add(1))
                    run_block(b);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<double> raw(n, 0.0);
    for (std::size_t b = 0; b < blocks; ++b)
        for (std::size_t v = 0; v < n; ++v) raw[v] += partial[b][v];

    if (!g.directed())
        for (double& r : raw) r /= 2.0;

    const double pairs =
        n <= 2 ? 0.0
               : (g.directed()
                      ? static_cast<double>(n - 1) * static_cast<double>(n - 2)
                      : static_cast<double>(n - 1) * static_cast<double>(n - 2) /
                            2.0);

    CentralityResult result;
    result.directed = g.directed();
    result.weighted = weighted;
    for (std::size_t v = 0; v < n; ++v) {
        result.raw[g.node_id(v)] = raw[v];
        result.normalized[g.node_id(v)] = pairs > 0.0 ? raw[v] / pairs : 0.0;
    }
    return result;
}

std::vector<std::pair<std::string, double>> page_importance(
    const Graph& page_graph, unsigned workers) {
    const CentralityResult c = betweenness(page_graph, false, workers);
    std::vector<std::pair<std::string, double>> ranked(c.normalized.begin(),
                                                       c.normalized.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

}  // namespace corank
