#include "corank/snapshots.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "corank/error.hpp"

namespace corank {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json to_json(const RankingSnapshot& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        json rec{{"entity_id", e.entity_id},
                 {"name", e.name},
                 {"score", e.score},
                 {"rank", e.rank}};
        if (e.aux.h_index) rec["h_index"] = *e.aux.h_index;
        if (e.aux.google_hits) rec["google_hits"] = *e.aux.google_hits;
        entries.push_back(std::move(rec));
    }
    return json{{"taken_at", format_rfc3339(s.taken_at)},
                {"metric", to_string(s.metric)},
                {"source", s.source},
                {"entries", std::move(entries)}};
}

RankingSnapshot from_json(const json& doc) {
    RankingSnapshot s;
    s.taken_at = parse_rfc3339(doc.at("taken_at").get<std::string>());
    s.metric = metric_from_string(doc.at("metric").get<std::string>());
    s.source = doc.at("source").get<std::string>();
    for (const auto& rec : doc.at("entries")) {
        RankingEntry e;
        e.entity_id = rec.at("entity_id").get<std::string>();
        e.name = rec.at("name").get<std::string>();
        e.score = rec.at("score").get<double>();
        e.rank = rec.at("rank").get<std::size_t>();
        if (rec.contains("h_index")) e.aux.h_index = rec.at("h_index").get<long>();
        if (rec.contains("google_hits"))
            e.aux.google_hits = rec.at("google_hits").get<long>();
        s.entries.push_back(std::move(e));
    }
    return s;
}

}  // namespace

std::string save_snapshot(const RankingSnapshot& snapshot,
                          const std::string& store_dir) {
    fs::create_directories(store_dir);
    const std::string name = format_compact(snapshot.taken_at) + "_" +
                             to_string(snapshot.metric) + ".json";
    const fs::path path = fs::path(store_dir) / name;
    if (fs::exists(path))
        throw Error("snapshot already exists (snapshots are immutable): " +
                    path.string());

    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write snapshot: " + tmp.string());
        out << to_json(snapshot).dump(2) << '\n';
    }
    fs::rename(tmp, path);
    return path.string();
}

RankingSnapshot load_snapshot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open snapshot: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("snapshot parse error in " + path + ": " + e.what(),
                         e.byte);
    }
    return from_json(doc);
}

std::vector<RankingSnapshot> load_snapshots(const std::string& store_dir) {
    std::vector<RankingSnapshot> history;
    if (!fs::exists(store_dir)) return history;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(store_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) history.push_back(load_snapshot_file(f.string()));
    std::stable_sort(history.begin(), history.end(),
                     [](const RankingSnapshot& a, const RankingSnapshot& b) {
                         return a.taken_at < b.taken_at;
                     });
    return history;
}

}  // namespace corank
