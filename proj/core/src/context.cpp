#include "corank/context.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "corank/error.hpp"
#include "corank/text.hpp"

namespace corank {

std::vector<std::vector<std::string>> extract_contexts(
    const Document& doc, const std::vector<Mention>& mentions,
    std::size_t window) {
    const std::vector<text::Token> tokens = text::tokenize(doc.text);

    std::vector<std::vector<std::string>> contexts;
    contexts.reserve(mentions.size());
    for (const Mention& m : mentions) {
        const std::size_t begin = m.offset;
        const std::size_t end = m.offset + m.matched_alias.size();

        // First token index at or past the alias span.
        std::size_t before_end = 0;
        while (before_end < tokens.size() && tokens[before_end].end <= begin)
            ++before_end;
        std::size_t after_begin = before_end;
        while (after_begin < tokens.size() && tokens[after_begin].begin < end)
            ++after_begin;

        std::vector<std::string> ctx;
        const std::size_t from =
            before_end > window ? before_end - window : 0;
        for (std::size_t i = from; i < before_end; ++i)
            ctx.push_back(tokens[i].text);
        const std::size_t to = std::min(tokens.size(), after_begin + window);
        for (std::size_t i = after_begin; i < to; ++i)
            ctx.push_back(tokens[i].text);
        contexts.push_back(std::move(ctx));
    }
    return contexts;
}

TagCloud build_tagcloud(const std::vector<std::vector<std::string>>& contexts,
                        const std::unordered_set<std::string>& stopwords,
                        std::size_t top_k) {
    std::map<std::string, std::size_t> counts;
    for (const auto& ctx : contexts) {
        for (const auto& token : ctx) {
            if (stopwords.count(token)) continue;
            if (text::is_number_token(token)) continue;
            ++counts[token];
        }
    }

    std::vector<TagTerm> terms;
    terms.reserve(counts.size());
    for (const auto& [term, count] : counts) terms.push_back({term, count, 0.0});
    std::sort(terms.begin(), terms.end(), [](const TagTerm& a, const TagTerm& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.term < b.term;
    });
    if (terms.size() > top_k) terms.resize(top_k);
    if (!terms.empty()) {
        const double max_count = static_cast<double>(terms.front().count);
        for (auto& t : terms) t.weight = static_cast<double>(t.count) / max_count;
    }

    TagCloud cloud;
    cloud.terms = std::move(terms);
    cloud.top_k = top_k;
    return cloud;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stopword list: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(text::fold(line));
    }
    return words;
}

std::string tagcloud_csv(const TagCloud& cloud) {
    std::string out = "term,count,weight\n";
    for (const auto& t : cloud.terms) {
        out += t.term;
        out += ',';
        out += std::to_string(t.count);
        out += ',';
        out += nlohmann::json(t.weight).dump();
        out += '\n';
    }
    return out;
}

std::string tagcloud_json(const TagCloud& cloud) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : cloud.terms)
        terms.push_back({{"term", t.term}, {"count", t.count}, {"weight", t.weight}});
    return nlohmann::json{{"window", cloud.window},
                          {"top_k", cloud.top_k},
                          {"terms", std::move(terms)}}
               .dump(2) +
           "\n";
}

}  // namespace corank
