#include "corank/search.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "corank/error.hpp"

namespace corank {

using nlohmann::json;

FileSearchClient FileSearchClient::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open search fixture: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("search fixture parse error in " + path + ": " +
                             e.what(),
                         e.byte);
    }
    FileSearchClient client;
    if (doc.contains("queries"))
        for (const auto& [q, urls] : doc.at("queries").items())
            client.queries_[q] = urls.get<std::vector<std::string>>();
    if (doc.contains("backlinks"))
        for (const auto& [u, urls] : doc.at("backlinks").items())
            client.backlinks_[u] = urls.get<std::vector<std::string>>();
    return client;
}

namespace {

std::vector<std::string> take(
    const std::unordered_map<std::string, std::vector<std::string>>& table,
    const std::string& key, std::size_t max_results) {
    auto it = table.find(key);
    if (it == table.end()) return {};
    std::vector<std::string> out = it->second;
    if (out.size() > max_results) out.resize(max_results);
    return out;
}

}  // namespace

std::vector<std::string> FileSearchClient::query(const std::string& q,
                                                 std::size_t max_results) {
    return take(queries_, q, max_results);
}

std::vector<std::string> FileSearchClient::backlinks(const std::string& url,
                                                     std::size_t max_results) {
    return take(backlinks_, url, max_results);
}

FrontierResult expand_frontier(const std::string& seed_query,
                               SearchClient& client, unsigned depth,
                               std::size_t max_per_step) {
    FrontierResult result;
    std::unordered_set<std::string> seen;

    auto add_url = [&](const std::string& url) -> bool {
        if (!seen.insert(url).second) return false;
        result.urls.push_back(url);
        return true;
    };

    std::vector<std::string> level;
    for (const auto& url : client.query(seed_query, max_per_step))
        if (add_url(url)) level.push_back(url);

    for (unsigned d = 0; d < depth && !level.empty(); ++d) {
        std::vector<std::string> next;
        for (const auto& url : level) {
            std::vector<std::string> links;
            try {
                links = client.backlinks(url, max_per_step);
            } catch (const std::exception&) {
                ++result.failures;
                continue;
            }
            for (const auto& from : links) {
                // A backlink of url is a page linking to it.
                result.edges.emplace_back(from, url);
                if (add_url(from)) next.push_back(from);
            }
        }
        level = std::move(next);
    }
    return result;
}

}  // namespace corank
