#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "corank/error.hpp"
#include "corank/wiki/person.hpp"

namespace corank {

class ConfigError : public Error {
public:
    using Error::Error;
};

struct LayoutConfig {
    std::uint64_t seed = 0;
    std::size_t iterations = 0;
    double spring_length = 1.0;
};

struct Thresholds {
    std::size_t min_inlinks = 5;
    std::size_t top_n = 50;
    std::size_t window = 25;
    std::size_t top_k = 50;
    std::size_t depth = 1;
    std::size_t max_per_step = 10;
    double drop_threshold = 0.5;
};

// One config file drives every subcommand. Relative paths are resolved
// against the config file's directory at load time, so the echoed effective
// config reruns identically from anywhere. seed and iterations have no
// hidden defaults: they must appear in the file (or be set by flags) and are
// echoed into every output directory.
struct PipelineConfig {
    std::optional<std::string> corpus;
    std::optional<std::string> registry;
    std::optional<std::string> search_fixture;
    std::optional<std::string> seed_query;
    std::optional<std::string> aux_metrics;  // TSV joined onto rankings
    std::optional<std::string> wiki_dump;
    std::optional<std::string> redirects_tsv;
    std::optional<std::string> stopwords;
    std::optional<std::string> snapshot_store;  // default: <output_dir>/snapshots

    wiki::LanguageConfig language;
    Thresholds thresholds;
    LayoutConfig layout;
    bool weighted_betweenness = true;
    unsigned workers = 1;
    std::string output_dir = "out";

    static PipelineConfig load(const std::string& path);

    // Canonical JSON of the effective configuration.
    std::string echo_json() const;

    std::string snapshot_store_dir() const;

    // Shared invariants plus per-command requirements; throws ConfigError.
    void require_corpus() const;
    void require_wiki() const;
    void validate_common() const;
};

}  // namespace corank
