#include "corank/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "corank/error.hpp"

namespace corank {

namespace {

// Average (fractional) ranks, rank 1 = highest score.
std::vector<double> average_ranks(const std::vector<double>& scores) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) /
                               2.0 +
                           1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw Error("rank correlation undefined: constant ranks");
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw Error("spearman needs two equally sized samples of >= 2");
    return pearson(average_ranks(a), average_ranks(b));
}

double kendall_tau_b(const std::vector<double>& a,
                     const std::vector<double>& b) {
    if (a.size() != b.size() || a.size() < 2)
        throw Error("kendall needs two equally sized samples of >= 2");
    const std::size_t n = a.size();
    long long concordant = 0, discordant = 0;
    long long ties_a = 0, ties_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double da = a[i] - a[j];
            const double db = b[i] - b[j];
            if (da == 0.0 && db == 0.0) continue;  // joint tie
            if (da == 0.0) {
                ++ties_a;
            } else if (db == 0.0) {
                ++ties_b;
            } else if ((da > 0.0) == (db > 0.0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    const double n0 = concordant + discordant;
    const double denom = std::sqrt((n0 + ties_a) * (n0 + ties_b));
    if (denom == 0.0)
        throw Error("rank correlation undefined: constant ranks");
    return (static_cast<double>(concordant) - discordant) / denom;
}

CorrelationResult compare_rankings(const RankingSnapshot& a,
                                   const RankingSnapshot& b,
                                   CorrelationMethod method) {
    std::unordered_map<std::string, double> scores_b;
    for (const auto& e : b.entries) scores_b.emplace(e.entity_id, e.score);

    std::vector<double> xs, ys;
    for (const auto& e : a.entries) {
        auto it = scores_b.find(e.entity_id);
        if (it != scores_b.end()) {
            xs.push_back(e.score);
            ys.push_back(it->second);
        }
    }

    CorrelationResult result;
    result.paired = xs.size();
    result.excluded_a = a.entries.size() - xs.size();
    result.excluded_b = b.entries.size() - xs.size();
    if (result.paired < 2)
        throw Error("fewer than 2 shared entities between snapshots");

    result.correlation = method == CorrelationMethod::kSpearman
                             ? spearman(xs, ys)
                             : kendall_tau_b(xs, ys);
    return result;
}

}  // namespace corank
