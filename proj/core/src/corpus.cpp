#include "corank/corpus.hpp"

#include <fstream>

#include <json.hpp>

#include "corank/error.hpp"

namespace corank {

using nlohmann::json;

DocumentSet DocumentSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus file: " + path);

    std::vector<Document> docs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError("corpus line " + std::to_string(lineno) + ": " +
                                 e.what(),
                             lineno);
        }
        for (const char* field : {"id", "url", "fetched_at", "title", "text"}) {
            if (!rec.contains(field))
                throw ParseError("corpus line " + std::to_string(lineno) +
                                     ": missing field '" + field + "'",
                                 lineno);
        }
        Document d;
        d.id = rec.at("id").get<std::string>();
        d.url = rec.at("url").get<std::string>();
        try {
            d.fetched_at = parse_rfc3339(rec.at("fetched_at").get<std::string>());
        } catch (const Error& e) {
            throw ParseError("corpus line " + std::to_string(lineno) + ": " +
                                 e.what(),
                             lineno);
        }
        d.title = rec.at("title").get<std::string>();
        d.text = rec.at("text").get<std::string>();
        if (rec.contains("language") && !rec.at("language").is_null())
            d.language = rec.at("language").get<std::string>();
        docs.push_back(std::move(d));
    }
    return from_documents(std::move(docs));
}

DocumentSet DocumentSet::from_documents(std::vector<Document> docs) {
    DocumentSet set;
    set.docs_ = std::move(docs);
    for (std::size_t i = 0; i < set.docs_.size(); ++i) {
        if (!set.by_id_.emplace(set.docs_[i].id, i).second)
            throw Error("duplicate document id: " + set.docs_[i].id);
    }
    return set;
}

const Document* DocumentSet::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &docs_[it->second];
}

}  // namespace corank
