#pragma once

#include <string>
#include <vector>

#include "corank/ranking.hpp"

namespace corank {

enum class ThinkerClass {
    kLongTerm,
    kOneHit,
    kInsufficientData,  // present in fewer than 2 snapshots
};

std::string to_string(ThinkerClass c);

// Classifies on percentile ranks (rank / field size), so snapshots of
// different sizes compare. One-hit: the entity's best percentile occurs in
// exactly one snapshot and its percentile worsens by more than
// drop_threshold from that peak to the latest snapshot it appears in.
ThinkerClass classify_one_hit(const std::vector<RankingSnapshot>& history,
                              const std::string& entity_id,
                              double drop_threshold);

}  // namespace corank
