#include "corank/ranking.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "corank/error.hpp"

namespace corank {

std::string to_string(Metric m) {
    switch (m) {
        case Metric::kThoughtLeaderIndex:
            return "thought_leader_index";
        case Metric::kProminence:
            return "prominence";
    }
    return "unknown";
}

Metric metric_from_string(const std::string& s) {
    if (s == "thought_leader_index") return Metric::kThoughtLeaderIndex;
    if (s == "prominence") return Metric::kProminence;
    throw Error("unknown metric: " + s);
}

bool operator==(const AuxMetrics& a, const AuxMetrics& b) {
    return a.h_index == b.h_index && a.google_hits == b.google_hits;
}

bool operator==(const RankingEntry& a, const RankingEntry& b) {
    return a.entity_id == b.entity_id && a.name == b.name &&
           a.score == b.score && a.rank == b.rank && a.aux == b.aux;
}

bool operator==(const RankingSnapshot& a, const RankingSnapshot& b) {
    return a.taken_at == b.taken_at && a.metric == b.metric &&
           a.source == b.source && a.entries == b.entries;
}

namespace {

RankingSnapshot make_snapshot(std::vector<RankingEntry> entries, Metric metric,
                              UtcTime taken_at, const std::string& source) {
    std::sort(entries.begin(), entries.end(),
              [](const RankingEntry& a, const RankingEntry& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.name < b.name;
              });
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = i + 1;

    RankingSnapshot s;
    s.taken_at = taken_at;
    s.metric = metric;
    s.source = source;
    s.entries = std::move(entries);
    return s;
}

}  // namespace

RankingSnapshot rank_entities(const std::map<std::string, double>& scores,
                              const EntityRegistry& registry,
                              const AuxTable* aux, Metric metric,
                              UtcTime taken_at, const std::string& source,
                              std::size_t* unmatched_aux) {
    std::vector<RankingEntry> entries;
    entries.reserve(scores.size());
    for (const auto& [id, score] : scores) {
        const Entity* e = registry.find(id);
        if (!e) throw Error("scored entity not in registry: " + id);
        RankingEntry entry;
        entry.entity_id = id;
        entry.name = e->canonical_name;
        entry.score = score;
        if (aux) {
            auto it = aux->find(id);
            if (it != aux->end()) entry.aux = it->second;
        }
        entries.push_back(std::move(entry));
    }
    if (unmatched_aux) {
        *unmatched_aux = 0;
        if (aux)
            for (const auto& [id, metrics] : *aux)
                if (!scores.count(id)) ++*unmatched_aux;
    }
    return make_snapshot(std::move(entries), metric, taken_at, source);
}

RankingSnapshot rank_titles(const std::map<std::string, double>& scores,
                            Metric metric, UtcTime taken_at,
                            const std::string& source) {
    std::vector<RankingEntry> entries;
    entries.reserve(scores.size());
    for (const auto& [id, score] : scores) {
        RankingEntry entry;
        entry.entity_id = id;
        entry.name = id;
        entry.score = score;
        entries.push_back(std::move(entry));
    }
    return make_snapshot(std::move(entries), metric, taken_at, source);
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string format_score(double v) {
    // Shortest representation that round-trips the double.
    return nlohmann::json(v).dump();
}

}  // namespace

std::string ranking_csv(const RankingSnapshot& snapshot) {
    std::string out = "name," + to_string(snapshot.metric) +
                      ",h_index,google_hits\n";
    for (const auto& e : snapshot.entries) {
        out += csv_escape(e.name);
        out += ',';
        out += format_score(e.score);
        out += ',';
        if (e.aux.h_index) out += std::to_string(*e.aux.h_index);
        out += ',';
        if (e.aux.google_hits) out += std::to_string(*e.aux.google_hits);
        out += '\n';
    }
    return out;
}

AuxTable load_aux_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open aux metrics file: " + path);
    AuxTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(
                start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 3)
            throw ParseError("aux metrics line " + std::to_string(lineno) +
                                 ": expected id<TAB>h_index<TAB>google_hits",
                             lineno);
        auto parse_cell = [](const std::string& cell) -> std::optional<long> {
            if (cell.empty() || cell == "undefined") return std::nullopt;
            return std::stol(cell);
        };
        AuxMetrics m;
        m.h_index = parse_cell(fields[1]);
        m.google_hits = parse_cell(fields[2]);
        table[fields[0]] = m;
    }
    return table;
}

}  // namespace corank
