#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace corank {

// Pluggable search backend. Implementations must be deterministic for the
// file-backed fixture: the same query always returns the same list.
class SearchClient {
public:
    virtual ~SearchClient() = default;

    virtual std::vector<std::string> query(const std::string& q,
                                           std::size_t max_results) = 0;
    // Pages that link back to url, most relevant first.
    virtual std::vector<std::string> backlinks(const std::string& url,
                                               std::size_t max_results) = 0;
};

// Fixture-backed client keyed by exact query string. Unknown queries and
// URLs yield empty lists.
class FileSearchClient : public SearchClient {
public:
    static FileSearchClient load(const std::string& path);

    std::vector<std::string> query(const std::string& q,
                                   std::size_t max_results) override;
    std::vector<std::string> backlinks(const std::string& url,
                                       std::size_t max_results) override;

private:
    std::unordered_map<std::string, std::vector<std::string>> queries_;
    std::unordered_map<std::string, std::vector<std::string>> backlinks_;
};

struct FrontierResult {
    std::vector<std::string> urls;  // deduplicated, insertion order
    // Backlink edges discovered during expansion: from links to to.
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t failures = 0;  // URLs skipped because the client failed
};

// Level 0 is the seed query's result list; every further level asks for the
// backlinks of each URL first seen at the previous level. Client failures on
// a single URL are skipped and counted, not fatal.
FrontierResult expand_frontier(const std::string& seed_query,
                               SearchClient& client, unsigned depth,
                               std::size_t max_per_step);

}  // namespace corank
