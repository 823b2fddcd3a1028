#include "corank/entity.hpp"

#include <fstream>

#include <json.hpp>

#include "corank/error.hpp"
#include "corank/text.hpp"

namespace corank {

using nlohmann::json;

EntityRegistry EntityRegistry::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open registry file: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("registry parse error in " + path + ": " + e.what(),
                         e.byte);
    }
    if (!doc.is_array())
        throw ParseError("registry root must be a JSON array: " + path, 0);

    std::vector<Entity> entities;
    entities.reserve(doc.size());
    std::size_t record = 0;
    for (const auto& rec : doc) {
        ++record;
        if (!rec.is_object() || !rec.contains("id") ||
            !rec.contains("canonical_name"))
            throw ParseError("registry record " + std::to_string(record) +
                                 " missing id or canonical_name",
                             record);
        Entity e;
        e.id = rec.at("id").get<std::string>();
        e.canonical_name = rec.at("canonical_name").get<std::string>();
        if (e.canonical_name.empty())
            throw ParseError("registry record " + std::to_string(record) +
                                 " has empty canonical_name",
                             record);
        if (rec.contains("aliases"))
            e.aliases = rec.at("aliases").get<std::vector<std::string>>();
        if (rec.contains("discipline") && !rec.at("discipline").is_null())
            e.discipline = rec.at("discipline").get<std::string>();
        if (rec.contains("affiliation") && !rec.at("affiliation").is_null())
            e.affiliation = rec.at("affiliation").get<std::string>();
        entities.push_back(std::move(e));
    }
    return from_entities(std::move(entities));
}

EntityRegistry EntityRegistry::from_entities(std::vector<Entity> entities) {
    EntityRegistry reg;
    reg.entities_ = std::move(entities);
    for (std::size_t i = 0; i < reg.entities_.size(); ++i) {
        const Entity& e = reg.entities_[i];
        if (!reg.by_id_.emplace(e.id, i).second)
            throw Error("duplicate entity id: " + e.id);
    }
    for (std::size_t i = 0; i < reg.entities_.size(); ++i) {
        const Entity& e = reg.entities_[i];
        auto add_alias = [&](const std::string& alias) {
            if (alias.empty()) return;
            const std::string key = text::fold(alias);
            auto [it, inserted] = reg.alias_index_.emplace(key, i);
            if (!inserted && it->second != i)
                throw Error("ambiguous alias '" + alias + "' claimed by '" +
                            reg.entities_[it->second].id + "' and '" + e.id +
                            "'");
        };
        add_alias(e.canonical_name);
        for (const auto& a : e.aliases) add_alias(a);
    }
    return reg;
}

const Entity* EntityRegistry::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &entities_[it->second];
}

}  // namespace corank
