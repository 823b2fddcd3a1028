#include "corank/config.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace corank {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string resolve(const std::string& base_dir, const std::string& path) {
    fs::path p(path);
    if (p.is_absolute()) return p.lexically_normal().string();
    return (fs::path(base_dir) / p).lexically_normal().string();
}

void read_path(const json& obj, const char* key, const std::string& base_dir,
               std::optional<std::string>& out) {
    if (obj.contains(key) && !obj.at(key).is_null())
        out = resolve(base_dir, obj.at(key).get<std::string>());
}

void check_exists(const char* what, const std::optional<std::string>& path) {
    if (path && !fs::exists(*path))
        throw ConfigError(std::string(what) + " path does not exist: " + *path);
}

}  // namespace

PipelineConfig PipelineConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }

    const std::string base_dir =
        fs::absolute(fs::path(path)).parent_path().lexically_normal().string();

    PipelineConfig cfg;
    read_path(doc, "corpus", base_dir, cfg.corpus);
    read_path(doc, "registry", base_dir, cfg.registry);
    read_path(doc, "search_fixture", base_dir, cfg.search_fixture);
    read_path(doc, "aux_metrics", base_dir, cfg.aux_metrics);
    read_path(doc, "wiki_dump", base_dir, cfg.wiki_dump);
    read_path(doc, "redirects_tsv", base_dir, cfg.redirects_tsv);
    read_path(doc, "stopwords", base_dir, cfg.stopwords);
    read_path(doc, "snapshot_store", base_dir, cfg.snapshot_store);
    if (doc.contains("seed_query") && !doc.at("seed_query").is_null())
        cfg.seed_query = doc.at("seed_query").get<std::string>();

    if (doc.contains("language")) {
        const json& lang = doc.at("language");
        if (lang.contains("category_namespaces"))
            cfg.language.category_namespaces =
                lang.at("category_namespaces").get<std::vector<std::string>>();
        if (lang.contains("living_category"))
            cfg.language.living_category =
                lang.at("living_category").get<std::string>();
        if (lang.contains("birth_pattern"))
            cfg.language.birth_pattern =
                lang.at("birth_pattern").get<std::string>();
        if (lang.contains("death_pattern"))
            cfg.language.death_pattern =
                lang.at("death_pattern").get<std::string>();
    }

    if (doc.contains("thresholds")) {
        const json& t = doc.at("thresholds");
        auto read_size = [&](const char* key, std::size_t& out) {
            if (!t.contains(key)) return;
            const auto v = t.at(key).get<long long>();
            if (v < 0)
                throw ConfigError(std::string("threshold '") + key +
                                  "' must be non-negative");
            out = static_cast<std::size_t>(v);
        };
        read_size("min_inlinks", cfg.thresholds.min_inlinks);
        read_size("top_n", cfg.thresholds.top_n);
        read_size("window", cfg.thresholds.window);
        read_size("top_k", cfg.thresholds.top_k);
        read_size("depth", cfg.thresholds.depth);
        read_size("max_per_step", cfg.thresholds.max_per_step);
        if (t.contains("drop_threshold")) {
            cfg.thresholds.drop_threshold = t.at("drop_threshold").get<double>();
            if (cfg.thresholds.drop_threshold < 0.0)
                throw ConfigError("threshold 'drop_threshold' must be non-negative");
        }
    }

    if (!doc.contains("layout") || !doc.at("layout").contains("seed") ||
        !doc.at("layout").contains("iterations"))
        throw ConfigError(
            "config must state layout.seed and layout.iterations explicitly");
    const json& lay = doc.at("layout");
    cfg.layout.seed = lay.at("seed").get<std::uint64_t>();
    cfg.layout.iterations = lay.at("iterations").get<std::size_t>();
    if (lay.contains("spring_length"))
        cfg.layout.spring_length = lay.at("spring_length").get<double>();

    if (doc.contains("weighted_betweenness"))
        cfg.weighted_betweenness = doc.at("weighted_betweenness").get<bool>();
    if (doc.contains("workers"))
        cfg.workers = doc.at("workers").get<unsigned>();
    if (doc.contains("output_dir"))
        cfg.output_dir = resolve(base_dir, doc.at("output_dir").get<std::string>());
    else
        cfg.output_dir = resolve(base_dir, "out");

    return cfg;
}

std::string PipelineConfig::echo_json() const {
    json doc;
    auto put_path = [&](const char* key, const std::optional<std::string>& v) {
        if (v) doc[key] = *v;
    };
    put_path("corpus", corpus);
    put_path("registry", registry);
    put_path("search_fixture", search_fixture);
    put_path("aux_metrics", aux_metrics);
    put_path("wiki_dump", wiki_dump);
    put_path("redirects_tsv", redirects_tsv);
    put_path("stopwords", stopwords);
    doc["snapshot_store"] = snapshot_store_dir();
    if (seed_query) doc["seed_query"] = *seed_query;
    doc["language"] = {
        {"category_namespaces", language.category_namespaces},
        {"living_category", language.living_category},
        {"birth_pattern", language.birth_pattern},
        {"death_pattern", language.death_pattern},
    };
    doc["thresholds"] = {
        {"min_inlinks", thresholds.min_inlinks},
        {"top_n", thresholds.top_n},
        {"window", thresholds.window},
        {"top_k", thresholds.top_k},
        {"depth", thresholds.depth},
        {"max_per_step", thresholds.max_per_step},
        {"drop_threshold", thresholds.drop_threshold},
    };
    doc["layout"] = {
        {"seed", layout.seed},
        {"iterations", layout.iterations},
        {"spring_length", layout.spring_length},
    };
    doc["weighted_betweenness"] = weighted_betweenness;
    doc["workers"] = workers;
    doc["output_dir"] = output_dir;
    return doc.dump(2) + "\n";
}

std::string PipelineConfig::snapshot_store_dir() const {
    if (snapshot_store) return *snapshot_store;
    return (fs::path(output_dir) / "snapshots").lexically_normal().string();
}

void PipelineConfig::validate_common() const {
    check_exists("corpus", corpus);
    check_exists("registry", registry);
    check_exists("search_fixture", search_fixture);
    check_exists("aux_metrics", aux_metrics);
    check_exists("wiki_dump", wiki_dump);
    check_exists("redirects_tsv", redirects_tsv);
    check_exists("stopwords", stopwords);
    if (workers == 0) throw ConfigError("workers must be >= 1");
}

void PipelineConfig::require_corpus() const {
    if (!corpus) throw ConfigError("config is missing 'corpus'");
    if (!registry) throw ConfigError("config is missing 'registry'");
}

void PipelineConfig::require_wiki() const {
    if (!wiki_dump) throw ConfigError("config is missing 'wiki_dump'");
}

}  // namespace corank
