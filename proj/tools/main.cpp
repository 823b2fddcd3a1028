// corank: mines influence networks from blog corpora and MediaWiki dumps.
//
// Subcommands: hunt (blog co-occurrence pipeline), wiki (living-people link
// graph), compare (temporal snapshot comparison), tagcloud, export.
// Exit codes: 0 success, 1 runtime failure, 2 configuration error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corank/betweenness.hpp"
#include "corank/config.hpp"
#include "corank/context.hpp"
#include "corank/cooccurrence.hpp"
#include "corank/corpus.hpp"
#include "corank/correlate.hpp"
#include "corank/entity.hpp"
#include "corank/error.hpp"
#include "corank/exports.hpp"
#include "corank/layout.hpp"
#include "corank/mention.hpp"
#include "corank/onehit.hpp"
#include "corank/ranking.hpp"
#include "corank/render.hpp"
#include "corank/search.hpp"
#include "corank/snapshots.hpp"
#include "corank/text.hpp"
#include "corank/wiki/dump.hpp"
#include "corank/wiki/linkgraph.hpp"
#include "corank/wiki/wikitext.hpp"

namespace fs = std::filesystem;
using namespace corank;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct FlagOverrides {
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
};

PipelineConfig load_config(const std::string& path, const FlagOverrides& flags) {
    PipelineConfig cfg = PipelineConfig::load(path);
    if (flags.out)
        cfg.output_dir = fs::absolute(*flags.out).lexically_normal().string();
    if (flags.seed) cfg.layout.seed = *flags.seed;
    if (flags.workers) cfg.workers = *flags.workers;
    cfg.validate_common();
    return cfg;
}

void write_echo(const PipelineConfig& cfg) {
    fs::create_directories(cfg.output_dir);
    write_file((fs::path(cfg.output_dir) / "config.echo.json").string(),
               cfg.echo_json());
}

// Snapshots are immutable, but re-running an identical pipeline must stay
// byte-identical: an existing file with equal content is fine.
void save_snapshot_idempotent(const RankingSnapshot& snapshot,
                              const std::string& store) {
    const std::string name = format_compact(snapshot.taken_at) + "_" +
                             to_string(snapshot.metric) + ".json";
    const fs::path path = fs::path(store) / name;
    if (fs::exists(path)) {
        if (load_snapshot_file(path.string()) == snapshot) return;
        throw Error("snapshot clash (snapshots are immutable): " +
                    path.string());
    }
    save_snapshot(snapshot, store);
}

std::map<std::string, std::string> discipline_colors(
    const EntityRegistry& registry) {
    static const std::vector<std::string> palette = {
        "#4878a8", "#d1605e", "#6aa56a", "#e49444", "#8a6fae",
        "#bf7fa0", "#857855", "#6ab0c4", "#c8b94e", "#999999"};
    std::map<std::string, std::string> by_discipline;
    for (const auto& e : registry.entities())
        if (e.discipline) by_discipline.emplace(*e.discipline, "");
    std::size_t i = 0;
    for (auto& [name, color] : by_discipline)
        color = palette[i++ % palette.size()];
    std::map<std::string, std::string> by_id;
    for (const auto& e : registry.entities())
        if (e.discipline) by_id[e.id] = by_discipline[*e.discipline];
    return by_id;
}

std::string basename_of(const std::string& path) {
    return fs::path(path).filename().string();
}

// ---------------------------------------------------------------- hunt ----

int cmd_hunt(const PipelineConfig& cfg) {
    cfg.require_corpus();
    const EntityRegistry registry = EntityRegistry::load(*cfg.registry);
    const DocumentSet corpus = DocumentSet::load(*cfg.corpus);

    const auto mentions = detect_all_mentions(corpus, registry, cfg.workers);
    const CooccurrenceGraph cooc = build_cooccurrence(corpus, mentions);
    const CentralityResult centrality =
        betweenness(cooc.graph, cfg.weighted_betweenness, cfg.workers);

    std::map<std::string, double> scores(centrality.normalized.begin(),
                                         centrality.normalized.end());
    AuxTable aux;
    if (cfg.aux_metrics) aux = load_aux_tsv(*cfg.aux_metrics);

    UtcTime taken_at = 0;
    for (const auto& d : corpus.documents())
        taken_at = std::max(taken_at, d.fetched_at);

    std::size_t unmatched_aux = 0;
    const RankingSnapshot snapshot = rank_entities(
        scores, registry, cfg.aux_metrics ? &aux : nullptr,
        Metric::kThoughtLeaderIndex, taken_at,
        "corpus:" + basename_of(*cfg.corpus), &unmatched_aux);
    if (unmatched_aux > 0)
        std::cerr << "hunt: " << unmatched_aux
                  << " aux metric rows matched no mentioned entity\n";

    fs::create_directories(cfg.output_dir);
    const fs::path out(cfg.output_dir);
    write_file((out / "ranking.csv").string(), ranking_csv(snapshot));
    export_graph(cooc.graph, GraphFormat::kGraphML,
                 (out / "graph.graphml").string(), &scores);

    const Layout layout = spring_layout(cooc.graph, cfg.layout.seed,
                                        cfg.layout.iterations,
                                        cfg.layout.spring_length);
    std::map<std::string, std::string> labels;
    for (const auto& id : cooc.graph.node_ids())
        labels[id] = registry.find(id)->canonical_name;
    RenderOptions render_opts;
    render_opts.node_colors = discipline_colors(registry);
    write_file((out / "map.svg").string(),
               render_svg(cooc.graph, layout, scores, labels, render_opts));

    // Fig-1 analogue: rank the pages discovered through the search frontier.
    if (cfg.search_fixture && cfg.seed_query) {
        FileSearchClient client = FileSearchClient::load(*cfg.search_fixture);
        const FrontierResult frontier =
            expand_frontier(*cfg.seed_query, client, cfg.thresholds.depth,
                            cfg.thresholds.max_per_step);
        if (frontier.failures > 0)
            std::cerr << "hunt: " << frontier.failures
                      << " frontier URLs skipped after client failures\n";
        Graph page_graph(true);
        for (const auto& url : frontier.urls) page_graph.add_node(url);
        for (const auto& [from, to] : frontier.edges)
            page_graph.add_edge(from, to);
        std::string pages_csv = "url,betweenness\n";
        for (const auto& [url, score] : page_importance(page_graph, cfg.workers))
            pages_csv += url + "," + nlohmann::json(score).dump() + "\n";
        write_file((out / "pages.csv").string(), pages_csv);
    }

    save_snapshot_idempotent(snapshot, cfg.snapshot_store_dir());
    write_echo(cfg);
    return kExitOk;
}

// ---------------------------------------------------------------- wiki ----

int cmd_wiki(const PipelineConfig& cfg) {
    cfg.require_wiki();

    std::vector<wiki::PersonArticle> eligible;
    std::unordered_map<std::string, std::string> redirects;
    if (cfg.redirects_tsv) redirects = wiki::load_redirect_tsv(*cfg.redirects_tsv);

    UtcTime taken_at = 0;
    wiki::DumpReader reader = wiki::DumpReader::open(*cfg.wiki_dump);
    while (auto page = reader.next()) {
        if (page->namespace_id != 0) continue;
        taken_at = std::max(taken_at, page->revision_timestamp);
        if (const auto target = wiki::parse_redirect(page->wikitext)) {
            redirects.emplace(wiki::normalize_title(page->title), *target);
            continue;
        }
        wiki::PersonArticle person =
            wiki::extract_person_meta(*page, cfg.language);
        if (wiki::cohort_eligible(person)) eligible.push_back(std::move(person));
    }

    const wiki::LinkGraphResult built = wiki::build_link_graph(eligible, redirects);
    if (built.dropped_redirects > 0)
        std::cerr << "wiki: dropped " << built.dropped_redirects
                  << " links through over-long redirect chains\n";
    const Graph pruned = wiki::prune_graph(built.graph, cfg.thresholds.min_inlinks,
                                           cfg.thresholds.top_n);
    const std::map<std::string, double> prom = wiki::prominence(pruned);

    const std::string source = "dump:" + basename_of(*cfg.wiki_dump);
    const RankingSnapshot snapshot =
        rank_titles(prom, Metric::kProminence, taken_at, source);
    if (snapshot.entries.empty())
        std::cerr << "wiki: no cohort-eligible people found in " << source
                  << "\n";

    fs::create_directories(cfg.output_dir);
    const fs::path out(cfg.output_dir);
    write_file((out / "prominence.csv").string(), ranking_csv(snapshot));
    std::map<std::string, double> scores(prom.begin(), prom.end());
    export_graph(pruned, GraphFormat::kGraphML,
                 (out / "wiki_graph.graphml").string(), &scores);

    const Layout layout = spring_layout(pruned, cfg.layout.seed,
                                        cfg.layout.iterations,
                                        cfg.layout.spring_length);
    std::map<std::string, std::string> labels;
    for (const auto& id : pruned.node_ids()) labels[id] = id;
    write_file((out / "wiki_map.svg").string(),
               render_svg(pruned, layout, scores, labels, {}));

    save_snapshot_idempotent(snapshot, cfg.snapshot_store_dir());
    write_echo(cfg);
    return kExitOk;
}

// ------------------------------------------------------------- compare ----

int cmd_compare(const std::string& store, const std::string& method_name,
                const std::string& metric_name, double drop_threshold,
                const std::optional<std::string>& out_path) {
    const CorrelationMethod method = method_name == "kendall"
                                         ? CorrelationMethod::kKendallTauB
                                         : CorrelationMethod::kSpearman;
    std::vector<RankingSnapshot> history;
    for (auto& s : load_snapshots(store)) {
        if (metric_name.empty() || to_string(s.metric) == metric_name)
            history.push_back(std::move(s));
    }
    if (history.size() < 2)
        throw ConfigError("need at least 2 snapshots in store: " + store);

    const RankingSnapshot& a = history[history.size() - 2];
    const RankingSnapshot& b = history.back();
    const CorrelationResult corr = compare_rankings(a, b, method);
    std::cout << method_name << " correlation: " << corr.correlation << " ("
              << corr.paired << " shared entities, " << corr.excluded_a
              << " only in " << format_rfc3339(a.taken_at) << ", "
              << corr.excluded_b << " only in " << format_rfc3339(b.taken_at)
              << ")\n";

    std::map<std::string, std::size_t> ranks_a, ranks_b;
    std::map<std::string, std::string> names;
    for (const auto& e : a.entries) {
        ranks_a[e.entity_id] = e.rank;
        names[e.entity_id] = e.name;
    }
    for (const auto& e : b.entries) {
        ranks_b[e.entity_id] = e.rank;
        names[e.entity_id] = e.name;
    }

    std::string csv = "entity_id,name,rank_from,rank_to,delta,class\n";
    for (const auto& [id, name] : names) {
        const auto ra = ranks_a.find(id);
        const auto rb = ranks_b.find(id);
        csv += id + "," + name + ",";
        if (ra != ranks_a.end()) csv += std::to_string(ra->second);
        csv += ",";
        if (rb != ranks_b.end()) csv += std::to_string(rb->second);
        csv += ",";
        if (ra != ranks_a.end() && rb != ranks_b.end())
            csv += std::to_string(static_cast<long long>(rb->second) -
                                  static_cast<long long>(ra->second));
        csv += "," + to_string(classify_one_hit(history, id, drop_threshold)) +
               "\n";
    }
    if (out_path) {
        write_file(*out_path, csv);
    } else {
        std::cout << csv;
    }
    return kExitOk;
}

// ------------------------------------------------------------ tagcloud ----

int cmd_tagcloud(const PipelineConfig& cfg) {
    cfg.require_corpus();
    const EntityRegistry registry = EntityRegistry::load(*cfg.registry);
    const DocumentSet corpus = DocumentSet::load(*cfg.corpus);

    std::unordered_set<std::string> stopwords;
    if (cfg.stopwords) stopwords = load_stopwords(*cfg.stopwords);
    // The cloud describes the discourse around the thinkers, not their
    // names: alias tokens are filtered like stopwords.
    for (const auto& [alias, idx] : registry.alias_index())
        for (const auto& tok : text::tokenize(alias))
            stopwords.insert(tok.text);

    const auto mentions = detect_all_mentions(corpus, registry, cfg.workers);
    std::vector<std::vector<std::string>> contexts;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto windows = extract_contexts(corpus.documents()[i], mentions[i],
                                        cfg.thresholds.window);
        for (auto& w : windows) contexts.push_back(std::move(w));
    }
    const TagCloud cloud =
        build_tagcloud(contexts, stopwords, cfg.thresholds.top_k);

    fs::create_directories(cfg.output_dir);
    const fs::path out(cfg.output_dir);
    write_file((out / "tagcloud.csv").string(), tagcloud_csv(cloud));
    write_file((out / "tagcloud.json").string(), tagcloud_json(cloud));
    write_file((out / "tagcloud.svg").string(), render_tagcloud_svg(cloud));
    write_echo(cfg);
    return kExitOk;
}

// -------------------------------------------------------------- export ----

int cmd_export(const std::string& input, const std::string& format_name,
               const std::string& sink, bool directed) {
    Graph g(directed);
    std::map<std::string, double> scores;
    if (fs::path(input).extension() == ".graphml") {
        GraphMLData data = load_graphml(input);
        g = std::move(data.graph);
        scores = std::move(data.scores);
    } else {
        g = load_edge_list_tsv(input, directed);
    }
    export_graph(g, graph_format_from_string(format_name), sink,
                 scores.empty() ? nullptr : &scores);
    return kExitOk;
}

template <typename Fn>
int run_stage(const char* stage, Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        std::cerr << "corank " << stage << ": " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "corank " << stage << ": " << e.what() << "\n";
        return kExitRuntime;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"influence network miner for blog corpora and wiki dumps"};
    app.require_subcommand(1);

    std::string config_path;
    FlagOverrides flags;

    auto add_common = [&](CLI::App* cmd, bool config_required = true) {
        auto* opt = cmd->add_option("--config", config_path, "pipeline config JSON");
        if (config_required) opt->required();
        cmd->add_option("--out", flags.out, "output directory (overrides config)");
        cmd->add_option("--seed", flags.seed, "layout seed (overrides config)");
        cmd->add_option("--workers", flags.workers,
                        "worker cap for all parallel stages");
    };

    CLI::App* hunt = app.add_subcommand(
        "hunt", "corpus -> co-occurrence -> betweenness -> map/ranking");
    add_common(hunt);

    CLI::App* wiki = app.add_subcommand(
        "wiki", "dump -> living-people link graph -> prominence ranking");
    add_common(wiki);

    CLI::App* tagcloud = app.add_subcommand(
        "tagcloud", "terms around entity mentions, ranked by frequency");
    add_common(tagcloud);

    CLI::App* compare = app.add_subcommand(
        "compare", "correlate the two latest snapshots, classify one-hits");
    std::string store;
    std::string method = "spearman";
    std::string metric;
    double drop_threshold = 0.5;
    std::optional<std::string> compare_out;
    compare->add_option("--store", store, "snapshot store directory");
    compare->add_option("--config", config_path,
                        "config (for the snapshot store path)");
    compare->add_option("--method", method, "spearman | kendall")
        ->check(CLI::IsMember({"spearman", "kendall"}));
    compare->add_option("--metric", metric,
                        "restrict to one metric (default: all)");
    compare->add_option("--drop-threshold", drop_threshold,
                        "percentile drop for one-hit classification");
    compare->add_option("--out-file", compare_out, "write rank deltas CSV here");

    CLI::App* exp = app.add_subcommand("export", "convert graph files");
    std::string exp_in, exp_format = "graphml", exp_out;
    bool exp_directed = false;
    exp->add_option("--in", exp_in, "input graph (.tsv edge list or .graphml)")
        ->required();
    exp->add_option("--format", exp_format, "graphml | dot | tsv")
        ->check(CLI::IsMember({"graphml", "dot", "tsv"}));
    exp->add_option("--to", exp_out, "output file")->required();
    exp->add_flag("--directed", exp_directed,
                  "treat a TSV edge list as directed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (hunt->parsed())
        return run_stage("hunt", [&] { return cmd_hunt(load_config(config_path, flags)); });
    if (wiki->parsed())
        return run_stage("wiki", [&] { return cmd_wiki(load_config(config_path, flags)); });
    if (tagcloud->parsed())
        return run_stage("tagcloud",
                         [&] { return cmd_tagcloud(load_config(config_path, flags)); });
    if (compare->parsed())
        return run_stage("compare", [&] {
            std::string store_dir = store;
            if (store_dir.empty()) {
                if (config_path.empty())
                    throw ConfigError("compare needs --store or --config");
                store_dir = load_config(config_path, flags).snapshot_store_dir();
            }
            return cmd_compare(store_dir, method, metric, drop_threshold,
                               compare_out);
        });
    if (exp->parsed())
        return run_stage("export", [&] {
            return cmd_export(exp_in, exp_format, exp_out, exp_directed);
        });
    return kExitConfig;
}
