#pragma once

#include "corank/ranking.hpp"

namespace corank {

enum class CorrelationMethod {
    kSpearman,    // rank correlation, average ranks for ties
    kKendallTauB  // tie-corrected Kendall tau
};

struct CorrelationResult {
    double correlation = 0.0;       // in [-1, 1]
    std::size_t paired = 0;         // entities present in both snapshots
    std::size_t excluded_a = 0;     // only in a
    std::size_t excluded_b = 0;     // only in b
};

// Correlates two rankings over the entities they share; entities present in
// only one snapshot are excluded and counted. Throws Error with fewer than 2
// shared entities.
CorrelationResult compare_rankings(const RankingSnapshot& a,
                                   const RankingSnapshot& b,
                                   CorrelationMethod method);

// The same correlations over raw paired score vectors (scores are converted
// to ranks internally; any strictly increasing transform of either side
// leaves the result unchanged).
double spearman(const std::vector<double>& a, const std::vector<double>& b);
double kendall_tau_b(const std::vector<double>& a,
                     const std::vector<double>& b);

}  // namespace corank
