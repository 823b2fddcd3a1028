#pragma once

#include <string>
#include <vector>

#include "corank/ranking.hpp"

namespace corank {

// One JSON file per snapshot, named <timestamp>_<metric>.json. Snapshots
// are immutable: saving over an existing (taken_at, metric) pair is an
// error. Writes go through a temp file and rename, so readers never see a
// partial snapshot.
std::string save_snapshot(const RankingSnapshot& snapshot,
                          const std::string& store_dir);

// All snapshots in the store, sorted by taken_at.
std::vector<RankingSnapshot> load_snapshots(const std::string& store_dir);

RankingSnapshot load_snapshot_file(const std::string& path);

}  // namespace corank
