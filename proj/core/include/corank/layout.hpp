#pragma once

#include <cstdint>
#include <vector>

#include "corank/graph.hpp"

namespace corank {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Node positions indexed like the graph's node indices, centered on the
// origin. All coordinates finite.
struct Layout {
    std::vector<Point> positions;
};

// Fruchterman-Reingold style force-directed layout: repulsion k^2/d between
// all pairs, attraction d^2/k along edges scaled by edge weight, displacement
// capped by a temperature that cools linearly to zero over the iteration
// budget. Initial positions come from a seeded generator, so the same
// (graph, seed, iterations) is bitwise reproducible. A single node lands at
// the origin.
Layout spring_layout(const Graph& g, std::uint64_t seed,
                     std::size_t iterations, double spring_length = 1.0);

}  // namespace corank
