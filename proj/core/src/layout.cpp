#include "corank/layout.hpp"

#include <algorithm>
#include <cmath>

namespace corank {

namespace {

// splitmix64: tiny, portable, fully specified; uniform doubles in [0, 1).
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
};

}  // namespace

Layout spring_layout(const Graph& g, std::uint64_t seed,
                     std::size_t iterations, double spring_length) {
    const std::size_t n = g.node_count();
    Layout layout;
    layout.positions.resize(n);
    if (n == 0) return layout;

    const double k = spring_length > 0.0 ? spring_length : 1.0;
    const double side = k * std::sqrt(static_cast<double>(n));

    SplitMix64 rng{seed};
    for (auto& p : layout.positions) {
        p.x = (rng.next_double() - 0.5) * side;
        p.y = (rng.next_double() - 0.5) * side;
    }

    const double t0 = side / 10.0;
    std::vector<Point> disp(n);
    for (std::size_t iter = 0; iter < iterations; ++iter) {
        const double temp =
            t0 * (1.0 - static_cast<double>(iter) /
                            static_cast<double>(iterations));
        for (auto& d : disp) d = {0.0, 0.0};

        // Repulsion, all pairs in fixed index order.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double dx = layout.positions[i].x - layout.positions[j].x;
                double dy = layout.positions[i].y - layout.positions[j].y;
                double dist = std::sqrt(dx * dx + dy * dy);
                if (dist < 1e-9) {
                    // Deterministic nudge for coincident nodes.
                    dx = 1e-6 * static_cast<double>(j - i);
                    dy = 1e-6;
                    dist = std::sqrt(dx * dx + dy * dy);
                }
                const double force = k * k / dist;
                const double fx = dx / dist * force;
                const double fy = dy / dist * force;
                disp[i].x += fx;
                disp[i].y += fy;
                disp[j].x -= fx;
                disp[j].y -= fy;
            }
        }

        // Attraction along edges, sorted edge order.
        for (const auto& [key, w] : g.edges()) {
            const NodeIndex a = key.first;
            const NodeIndex b = key.second;
            double dx = layout.positions[a].x - layout.positions[b].x;
            double dy = layout.positions[a].y - layout.positions[b].y;
            double dist = std::sqrt(dx * dx + dy * dy);
            if (dist < 1e-9) continue;
            const double force = dist * dist / k * w;
            const double fx = dx / dist * force;
            const double fy = dy / dist * force;
            disp[a].x -= fx;
            disp[a].y -= fy;
            disp[b].x += fx;
            disp[b].y += fy;
        }

        for (std::size_t i = 0; i < n; ++i) {
            const double len = std::sqrt(disp[i].x * disp[i].x +
                                         disp[i].y * disp[i].y);
            if (len < 1e-12) continue;
            const double capped = std::min(len, temp);
            layout.positions[i].x += disp[i].x / len * capped;
            layout.positions[i].y += disp[i].y / len * capped;
        }
    }

    // Center on the origin; a single node sits exactly at (0, 0).
    double cx = 0.0, cy = 0.0;
    for (const auto& p : layout.positions) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<double>(n);
    cy /= static_cast<double>(n);
    for (auto& p : layout.positions) {
        p.x -= cx;
        p.y -= cy;
    }
    return layout;
}

}  // namespace corank
