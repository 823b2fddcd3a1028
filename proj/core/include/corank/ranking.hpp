#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corank/entity.hpp"
#include "corank/timeutil.hpp"

namespace corank {

enum class Metric {
    kThoughtLeaderIndex,  // normalized betweenness of the person graph
    kProminence,          // wiki in/out-degree ratio
};

std::string to_string(Metric m);
Metric metric_from_string(const std::string& s);

// External metrics joined onto ranking rows. Absent means the source said
// "undefined", never zero.
struct AuxMetrics {
    std::optional<long> h_index;
    std::optional<long> google_hits;
};

using AuxTable = std::map<std::string, AuxMetrics>;  // entity id -> metrics

struct RankingEntry {
    std::string entity_id;
    std::string name;
    double score = 0.0;
    std::size_t rank = 0;  // 1-based, no gaps
    AuxMetrics aux;
};

struct RankingSnapshot {
    UtcTime taken_at = 0;
    Metric metric = Metric::kThoughtLeaderIndex;
    std::string source;  // corpus hash or dump identifier
    std::vector<RankingEntry> entries;  // score descending, ties by name
};

bool operator==(const AuxMetrics&, const AuxMetrics&);
bool operator==(const RankingEntry&, const RankingEntry&);
bool operator==(const RankingSnapshot&, const RankingSnapshot&);

// Sorted by score descending, equal scores by name ascending; ranks 1..n.
// Every scored id must resolve in the registry. Aux rows whose id matches no
// scored entity are counted in *unmatched_aux (not fatal).
RankingSnapshot rank_entities(const std::map<std::string, double>& scores,
                              const EntityRegistry& registry,
                              const AuxTable* aux, Metric metric,
                              UtcTime taken_at, const std::string& source,
                              std::size_t* unmatched_aux = nullptr);

// Variant for rankings whose ids are their own display names (wiki article
// titles, page URLs).
RankingSnapshot rank_titles(const std::map<std::string, double>& scores,
                            Metric metric, UtcTime taken_at,
                            const std::string& source);

// CSV with columns name, thought_leader_index, h_index, google_hits (or the
// metric's own column name); undefined aux cells emitted as empty strings.
std::string ranking_csv(const RankingSnapshot& snapshot);

// TSV aux metrics: id<TAB>h_index<TAB>google_hits, "undefined" or empty for
// absent cells.
AuxTable load_aux_tsv(const std::string& path);

}  // namespace corank
