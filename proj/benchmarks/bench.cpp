#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "corank/betweenness.hpp"
#include "corank/cooccurrence.hpp"
#include "corank/corpus.hpp"
#include "corank/entity.hpp"
#include "corank/graph.hpp"
#include "corank/layout.hpp"
#include "corank/mention.hpp"

using namespace corank;

namespace {

// Small deterministic generator so every run benchmarks the same graph.
struct Lcg {
    std::uint64_t state;
    std::uint32_t next(std::uint32_t bound) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<std::uint32_t>((state >> 33) % bound);
    }
};

Graph random_graph(std::size_t nodes, std::size_t edges, bool directed) {
    Graph g(directed);
    for (std::size_t i = 0; i < nodes; ++i) g.add_node("n" + std::to_string(i));
    Lcg rng{nodes * 2654435761ull + edges};
    for (std::size_t e = 0; e < edges; ++e) {
        const auto a = rng.next(static_cast<std::uint32_t>(nodes));
        const auto b = rng.next(static_cast<std::uint32_t>(nodes));
        if (a != b)
            g.add_edge("n" + std::to_string(a), "n" + std::to_string(b),
                       1.0 + static_cast<double>(rng.next(5)));
    }
    return g;
}

void BM_betweenness_unweighted(benchmark::State& state) {
    const auto nodes = static_cast<std::size_t>(state.range(0));
    const Graph g = random_graph(nodes, nodes * 4, false);
    for (auto _ : state)
        benchmark::DoNotOptimize(betweenness(g, false));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_betweenness_unweighted)->Arg(100)->Arg(300)->Arg(1000)->Complexity();

void BM_betweenness_weighted(benchmark::State& state) {
    const auto nodes = static_cast<std::size_t>(state.range(0));
    const Graph g = random_graph(nodes, nodes * 4, false);
    for (auto _ : state)
        benchmark::DoNotOptimize(betweenness(g, true));
}
BENCHMARK(BM_betweenness_weighted)->Arg(100)->Arg(300)->Arg(1000);

void BM_betweenness_workers(benchmark::State& state) {
    const Graph g = random_graph(600, 2400, false);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(betweenness(g, true, workers));
}
BENCHMARK(BM_betweenness_workers)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

EntityRegistry bench_registry(std::size_t entities) {
    std::vector<Entity> list;
    for (std::size_t i = 0; i < entities; ++i) {
        Entity e;
        e.id = "e" + std::to_string(i);
        e.canonical_name = "Thinker Number" + std::to_string(i);
        e.aliases = {"T. Number" + std::to_string(i)};
        list.push_back(std::move(e));
    }
    return EntityRegistry::from_entities(std::move(list));
}

DocumentSet bench_corpus(std::size_t docs, std::size_t entities) {
    Lcg rng{docs * 31 + entities};
    std::vector<Document> list;
    for (std::size_t d = 0; d < docs; ++d) {
        Document doc;
        doc.id = "d" + std::to_string(d);
        doc.url = "https://example.org/" + doc.id;
        doc.title = doc.id;
        for (int s = 0; s < 40; ++s) {
            if (s % 5 == 0) {
                doc.text += "Thinker Number" +
                            std::to_string(rng.next(
                                static_cast<std::uint32_t>(entities))) +
                            " said something. ";
            } else {
                doc.text += "Filler prose about markets and maps. ";
            }
        }
        list.push_back(std::move(doc));
    }
    return DocumentSet::from_documents(std::move(list));
}

void BM_mention_detection(benchmark::State& state) {
    const auto registry = bench_registry(100);
    const auto corpus = bench_corpus(static_cast<std::size_t>(state.range(0)), 100);
    for (auto _ : state)
        benchmark::DoNotOptimize(detect_all_mentions(corpus, registry));
}
BENCHMARK(BM_mention_detection)->Arg(50)->Arg(200);

void BM_mention_detection_workers(benchmark::State& state) {
    const auto registry = bench_registry(100);
    const auto corpus = bench_corpus(200, 100);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(detect_all_mentions(corpus, registry, workers));
}
BENCHMARK(BM_mention_detection_workers)->Arg(1)->Arg(2)->Arg(4);

void BM_spring_layout(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(0)) * 3,
                                 false);
    for (auto _ : state)
        benchmark::DoNotOptimize(spring_layout(g, 42, 100));
}
BENCHMARK(BM_spring_layout)->Arg(100)->Arg(400);

}  // namespace

BENCHMARK_MAIN();
