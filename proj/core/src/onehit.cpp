#include "corank/onehit.hpp"

#include <algorithm>

namespace corank {

std::string to_string(ThinkerClass c) {
    switch (c) {
        case ThinkerClass::kLongTerm:
            return "long_term";
        case ThinkerClass::kOneHit:
            return "one_hit";
        case ThinkerClass::kInsufficientData:
            return "insufficient_data";
    }
    return "unknown";
}

ThinkerClass classify_one_hit(const std::vector<RankingSnapshot>& history,
                              const std::string& entity_id,
                              double drop_threshold) {
    // history is expected sorted by taken_at (load_snapshots guarantees it).
    std::vector<double> percentiles;
    for (const auto& snapshot : history) {
        for (const auto& e : snapshot.entries) {
            if (e.entity_id == entity_id) {
                percentiles.push_back(static_cast<double>(e.rank) /
                                      static_cast<double>(snapshot.entries.size()));
                break;
            }
        }
    }
    if (percentiles.size() < 2) return ThinkerClass::kInsufficientData;

    const double best = *std::min_element(percentiles.begin(), percentiles.end());
    const auto peaks = std::count(percentiles.begin(), percentiles.end(), best);
    const double last = percentiles.back();
    if (peaks == 1 && last - best > drop_threshold)
        return ThinkerClass::kOneHit;
    return ThinkerClass::kLongTerm;
}

}  // namespace corank
