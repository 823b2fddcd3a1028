#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "corank/timeutil.hpp"

namespace corank {

struct Document {
    std::string id;
    std::string url;
    UtcTime fetched_at = 0;
    std::string title;
    std::string text;  // plain-text body; may be empty
    std::optional<std::string> language;
};

class DocumentSet {
public:
    // Loads a JSON-Lines corpus: one document object per line.
    static DocumentSet load(const std::string& path);
    static DocumentSet from_documents(std::vector<Document> docs);

    const std::vector<Document>& documents() const { return docs_; }
    std::size_t size() const { return docs_.size(); }
    bool empty() const { return docs_.empty(); }

    const Document* find(const std::string& id) const;

private:
    std::vector<Document> docs_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace corank
