#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "corank/mention.hpp"

namespace corank {

struct TagTerm {
    std::string term;  // lowercased token
    std::size_t count = 0;
    double weight = 0.0;  // count / max count
};

struct TagCloud {
    std::vector<TagTerm> terms;  // count descending, ties lexicographic
    std::size_t window = 0;
    std::size_t top_k = 0;
};

// For each mention, the `window` tokens before and after the matched alias
// (the alias tokens themselves excluded), truncated at document boundaries.
// Tokens come from the same Unicode word segmentation as mention matching,
// lowercased.
std::vector<std::vector<std::string>> extract_contexts(
    const Document& doc, const std::vector<Mention>& mentions,
    std::size_t window);

// Frequency count over all window tokens, skipping stopwords and pure-number
// tokens. Top_k by count, ties lexicographic; weights normalized to the
// maximum count.
TagCloud build_tagcloud(const std::vector<std::vector<std::string>>& contexts,
                        const std::unordered_set<std::string>& stopwords,
                        std::size_t top_k);

// One stopword per line, '#' comments allowed; folded on load.
std::unordered_set<std::string> load_stopwords(const std::string& path);

std::string tagcloud_csv(const TagCloud& cloud);
std::string tagcloud_json(const TagCloud& cloud);

}  // namespace corank
