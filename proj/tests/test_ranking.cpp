#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corank/correlate.hpp"
#include "corank/error.hpp"
#include "corank/onehit.hpp"
#include "corank/ranking.hpp"
#include "corank/snapshots.hpp"
#include "corank/timeutil.hpp"
#include "oracles.hpp"

using namespace corank;
namespace fs = std::filesystem;

namespace {

// Published benchmark table bundled as tests/data/table1.tsv:
// name <TAB> index <TAB> h_index-or-"undefined" <TAB> google_hits.
struct TableRow {
    std::string name;
    double index;
    std::optional<long> h_index;
    long google_hits;
};

std::vector<TableRow> load_table1() {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/table1.tsv");
    REQUIRE(in.good());
    std::vector<TableRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string name, index, h, hits;
        std::getline(fields, name, '\t');
        std::getline(fields, index, '\t');
        std::getline(fields, h, '\t');
        std::getline(fields, hits, '\t');
        TableRow row;
        row.name = name;
        row.index = std::stod(index);
        if (h != "undefined") row.h_index = std::stol(h);
        row.google_hits = std::stol(hits);
        rows.push_back(std::move(row));
    }
    return rows;
}

EntityRegistry small_registry() {
    std::vector<Entity> entities;
    for (const auto& [id, name] : std::vector<std::pair<std::string, std::string>>{
             {"florida", "Richard Florida"},
             {"kahneman", "Daniel Kahneman"},
             {"sarrazin", "Thilo Sarrazin"},
             {"pinker", "Steven Pinker"}}) {
        Entity e;
        e.id = id;
        e.canonical_name = name;
        entities.push_back(std::move(e));
    }
    return EntityRegistry::from_entities(std::move(entities));
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("rank_entities: descending by score, ties by name, ranks 1..n") {
    const auto registry = small_registry();
    std::map<std::string, double> scores{{"florida", 0.5},
                                         {"kahneman", 0.25},
                                         {"sarrazin", 0.25},
                                         {"pinker", 0.1}};
    const auto snap = rank_entities(scores, registry, nullptr,
                                    Metric::kThoughtLeaderIndex, 0, "test");
    REQUIRE(snap.entries.size() == 4);
    CHECK(snap.entries[0].entity_id == "florida");
    // Kahneman and Sarrazin tie; "Daniel Kahneman" < "Thilo Sarrazin".
    CHECK(snap.entries[1].entity_id == "kahneman");
    CHECK(snap.entries[2].entity_id == "sarrazin");
    CHECK(snap.entries[3].entity_id == "pinker");
    for (std::size_t i = 0; i < 4; ++i) CHECK(snap.entries[i].rank == i + 1);
    CHECK(snap.entries[0].name == "Richard Florida");
}

TEST_CASE("rank_entities: unknown id is fatal, unmatched aux is not") {
    const auto registry = small_registry();
    CHECK_THROWS_AS(rank_entities({{"nobody", 1.0}}, registry, nullptr,
                                  Metric::kThoughtLeaderIndex, 0, "test"),
                    Error);

    AuxTable aux{{"florida", {58, 815000}}, {"ghost", {1, 2}}};
    std::size_t unmatched = 0;
    const auto snap =
        rank_entities({{"florida", 0.5}}, registry, &aux,
                      Metric::kThoughtLeaderIndex, 0, "test", &unmatched);
    CHECK(unmatched == 1);
    CHECK(snap.entries[0].aux.h_index == 58);
    CHECK(snap.entries[0].aux.google_hits == 815000);
}

TEST_CASE("ranking_csv: header, undefined cells empty, quoting") {
    std::vector<Entity> entities;
    Entity e;
    e.id = "doe";
    e.canonical_name = "Doe, Jane \"JD\"";
    entities.push_back(e);
    const auto registry = EntityRegistry::from_entities(std::move(entities));
    AuxTable aux{{"doe", {std::nullopt, 42}}};
    const auto snap = rank_entities({{"doe", 0.25}}, registry, &aux,
                                    Metric::kThoughtLeaderIndex, 0, "test");
    const std::string csv = ranking_csv(snap);
    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "name,thought_leader_index,h_index,google_hits");
    CHECK(row == "\"Doe, Jane \"\"JD\"\"\",0.25,,42");
}

TEST_CASE("ranking_csv: prominence metric renames the score column") {
    const auto snap =
        rank_titles({{"Alice Ahlgren", 2.5}}, Metric::kProminence, 0, "test");
    CHECK(ranking_csv(snap).rfind("name,prominence,h_index,google_hits", 0) ==
          0);
}

TEST_CASE("load_aux_tsv: undefined and empty cells become absent") {
    const fs::path path = fs::temp_directory_path() / "aux_test.tsv";
    std::ofstream(path) << "stiglitz\tundefined\t4490000\n"
                        << "kelly\t\t2410000\n"
                        << "florida\t58\t815000\n";
    const auto aux = load_aux_tsv(path.string());
    CHECK_FALSE(aux.at("stiglitz").h_index.has_value());
    CHECK_FALSE(aux.at("kelly").h_index.has_value());
    CHECK(aux.at("florida").h_index == 58);
    CHECK(aux.at("stiglitz").google_hits == 4490000);
}

TEST_CASE("table 1: sorting the published index reproduces the row order") {
    const auto rows = load_table1();
    REQUIRE(rows.size() == 41);

    std::map<std::string, double> scores;
    for (const auto& row : rows) scores[row.name] = row.index;
    const auto snap = rank_titles(scores, Metric::kThoughtLeaderIndex,
                                  parse_rfc3339("2012-09-01T00:00:00Z"),
                                  "table1");
    REQUIRE(snap.entries.size() == 41);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(snap.entries[i].name == rows[i].name);
        CHECK(snap.entries[i].rank == i + 1);
    }
    CHECK(snap.entries.front().name == "Richard Florida");
    CHECK(snap.entries.back().name == "Nassim Taleb");
}

TEST_CASE("table 1: CSV reproduces the column structure, two empty cells") {
    const auto rows = load_table1();
    std::map<std::string, double> scores;
    AuxTable aux;
    for (const auto& row : rows) {
        scores[row.name] = row.index;
        aux[row.name] = {row.h_index, row.google_hits};
    }
    auto snap = rank_titles(scores, Metric::kThoughtLeaderIndex, 0, "table1");
    for (auto& entry : snap.entries) entry.aux = aux.at(entry.entity_id);

    const std::string csv = ranking_csv(snap);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "name,thought_leader_index,h_index,google_hits");
    std::size_t empty_h = 0, data_rows = 0;
    while (std::getline(lines, line)) {
        ++data_rows;
        // name has no comma in this table, so cells split plainly
        std::istringstream cells(line);
        std::string name, index, h, hits;
        std::getline(cells, name, ',');
        std::getline(cells, index, ',');
        std::getline(cells, h, ',');
        std::getline(cells, hits, ',');
        CHECK_FALSE(name.empty());
        CHECK_FALSE(index.empty());
        CHECK_FALSE(hits.empty());
        if (h.empty()) {
            ++empty_h;
            CHECK((name == "Joseph Stiglitz" || name == "Kevin Kelly"));
        }
    }
    CHECK(data_rows == 41);
    CHECK(empty_h == 2);
}

TEST_CASE("table 1: spot values") {
    const auto rows = load_table1();
    long best_h = 0;
    std::string best_h_name;
    long best_hits = 0;
    std::string best_hits_name;
    for (const auto& row : rows) {
        if (row.h_index && *row.h_index > best_h) {
            best_h = *row.h_index;
            best_h_name = row.name;
        }
        if (row.google_hits > best_hits) {
            best_hits = row.google_hits;
            best_hits_name = row.name;
        }
    }
    CHECK(best_h_name == "Daniel Kahneman");
    CHECK(best_h == 131);
    CHECK(best_hits_name == "Stephen Hawking");
    CHECK(best_hits == 13900000);
    CHECK(rows[0].index == doctest::Approx(0.15532562));
}

TEST_CASE("spearman: identity 1, reversal -1") {
    const std::vector<double> up{1, 2, 3, 4, 5};
    const std::vector<double> down{5, 4, 3, 2, 1};
    CHECK(spearman(up, up) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spearman(up, down) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(kendall_tau_b(up, up) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kendall_tau_b(up, down) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("spearman: invariant under strictly increasing transforms") {
    const std::vector<double> a{0.3, 0.1, 0.9, 0.4, 0.7};
    const std::vector<double> b{2.0, 8.0, 1.0, 9.0, 5.0};
    std::vector<double> a_cubed;
    for (double x : a) a_cubed.push_back(x * x * x);
    CHECK(spearman(a, b) == doctest::Approx(spearman(a_cubed, b)).epsilon(1e-12));
    CHECK(kendall_tau_b(a, b) ==
          doctest::Approx(kendall_tau_b(a_cubed, b)).epsilon(1e-12));
}

TEST_CASE("correlation: table 1 index vs h-index matches the oracles") {
    const auto rows = load_table1();
    std::vector<double> index, h;
    for (const auto& row : rows) {
        if (!row.h_index) continue;
        index.push_back(row.index);
        h.push_back(static_cast<double>(*row.h_index));
    }
    REQUIRE(index.size() == 39);
    CHECK(spearman(index, h) ==
          doctest::Approx(oracle::spearman_pearson_on_ranks(index, h))
              .epsilon(1e-12));
    CHECK(kendall_tau_b(index, h) ==
          doctest::Approx(oracle::kendall_direct(index, h)).epsilon(1e-12));
}

TEST_CASE("correlation: tie-free samples also satisfy the difference formula") {
    const std::vector<double> a{0.9, 0.5, 0.3, 0.8, 0.1, 0.6};
    const std::vector<double> b{12, 7, 20, 3, 15, 9};
    CHECK(spearman(a, b) ==
          doctest::Approx(oracle::spearman_difference_formula(a, b))
              .epsilon(1e-12));
}

TEST_CASE("correlation: random vectors with ties match the oracles") {
    oracle::Lcg rng{8128};
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> a, b;
        const std::size_t m = 3 + rng.next(10);
        for (std::size_t i = 0; i < m; ++i) {
            a.push_back(static_cast<double>(rng.next(6)));  // ties likely
            b.push_back(static_cast<double>(rng.next(6)));
        }
        // Skip degenerate constant vectors.
        bool const_a = true, const_b = true;
        for (double x : a) const_a = const_a && x == a[0];
        for (double x : b) const_b = const_b && x == b[0];
        if (const_a || const_b) continue;
        CAPTURE(trial);
        CHECK(spearman(a, b) ==
              doctest::Approx(oracle::spearman_pearson_on_ranks(a, b))
                  .epsilon(1e-12));
        CHECK(kendall_tau_b(a, b) ==
              doctest::Approx(oracle::kendall_direct(a, b)).epsilon(1e-12));
    }
}

namespace {

RankingSnapshot snapshot_of(const std::vector<std::pair<std::string, double>>&
                                scored,
                            UtcTime taken_at) {
    std::map<std::string, double> scores(scored.begin(), scored.end());
    return rank_titles(scores, Metric::kThoughtLeaderIndex, taken_at, "test");
}

}  // namespace

TEST_CASE("compare_rankings: pairing and exclusion counts") {
    const auto a = snapshot_of({{"x", 3.0}, {"y", 2.0}, {"z", 1.0},
                                {"only_a", 0.5}},
                               100);
    const auto b = snapshot_of({{"x", 1.0}, {"y", 2.0}, {"z", 3.0},
                                {"only_b1", 9.0}, {"only_b2", 8.0}},
                               200);
    const auto r = compare_rankings(a, b, CorrelationMethod::kSpearman);
    CHECK(r.paired == 3);
    CHECK(r.excluded_a == 1);
    CHECK(r.excluded_b == 2);
    CHECK(r.correlation == doctest::Approx(-1.0));  // shared part reversed

    const auto same = compare_rankings(a, a, CorrelationMethod::kKendallTauB);
    CHECK(same.correlation == doctest::Approx(1.0));
}

TEST_CASE("compare_rankings: fewer than two shared entities throws") {
    const auto a = snapshot_of({{"x", 1.0}, {"p", 2.0}}, 1);
    const auto b = snapshot_of({{"x", 1.0}, {"q", 2.0}}, 2);
    CHECK_THROWS_AS(compare_rankings(a, b, CorrelationMethod::kSpearman),
                    Error);
}

TEST_CASE("snapshots: round-trip, naming, immutability, sorted load") {
    const auto dir = fresh_dir("corank_snap_test");
    auto first = snapshot_of({{"x", 2.0}, {"y", 1.0}},
                             parse_rfc3339("2012-08-01T12:30:00Z"));
    first.entries[0].aux.h_index = 58;
    const auto second = snapshot_of({{"x", 1.0}, {"y", 2.0}},
                                    parse_rfc3339("2012-09-01T00:00:00Z"));

    // Save out of order; load comes back sorted by taken_at.
    const std::string second_path = save_snapshot(second, dir.string());
    const std::string first_path = save_snapshot(first, dir.string());
    CHECK(fs::path(first_path).filename() ==
          "20120801T123000Z_thought_leader_index.json");

    const auto loaded = load_snapshots(dir.string());
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0] == first);   // aux round-trips too
    CHECK(loaded[1] == second);

    CHECK_THROWS_WITH_AS(save_snapshot(first, dir.string()),
                         doctest::Contains("immutable"), Error);
}

TEST_CASE("one-hit: the documented percentile example") {
    // Rank 1 of 76 in the first snapshot, rank 60 of 76 in the second:
    // percentile worsens by 59/76 ~ 0.776 > 0.5, so one-hit.
    std::vector<std::pair<std::string, double>> field;
    for (int i = 0; i < 76; ++i)
        field.emplace_back("p" + std::to_string(i), 0.0);

    auto early = field;
    for (std::size_t i = 0; i < early.size(); ++i)
        early[i].second = static_cast<double>(100 - i);  // p0 first
    auto late = field;
    for (std::size_t i = 0; i < late.size(); ++i)
        late[i].second = static_cast<double>(100 - i);
    std::swap(late[0].second, late[59].second);  // p0 drops to rank 60

    const std::vector<RankingSnapshot> history{snapshot_of(early, 1),
                                               snapshot_of(late, 2)};
    CHECK(classify_one_hit(history, "p0", 0.5) == ThinkerClass::kOneHit);
    // p1 held rank 2 both times.
    CHECK(classify_one_hit(history, "p1", 0.5) == ThinkerClass::kLongTerm);
}

TEST_CASE("one-hit: threshold is strict and insufficient data is its own class") {
    const std::vector<RankingSnapshot> history{
        snapshot_of({{"a", 2.0}, {"b", 1.0}}, 1),
        snapshot_of({{"a", 1.0}, {"b", 2.0}}, 2)};
    // a: percentile 1/2 -> 2/2, drop exactly 0.5, not > 0.5.
    CHECK(classify_one_hit(history, "a", 0.5) == ThinkerClass::kLongTerm);
    CHECK(classify_one_hit(history, "a", 0.49) == ThinkerClass::kOneHit);
    CHECK(classify_one_hit(history, "newcomer", 0.5) ==
          ThinkerClass::kInsufficientData);

    const std::vector<RankingSnapshot> single{snapshot_of({{"a", 1.0},
                                                           {"b", 2.0}}, 1)};
    CHECK(classify_one_hit(single, "a", 0.5) ==
          ThinkerClass::kInsufficientData);
}

TEST_CASE("metric names round-trip") {
    CHECK(to_string(Metric::kThoughtLeaderIndex) == "thought_leader_index");
    CHECK(metric_from_string("prominence") == Metric::kProminence);
    CHECK_THROWS_AS(metric_from_string("bogus"), Error);
}
