#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace corank {

struct Entity {
    std::string id;
    std::string canonical_name;
    std::vector<std::string> aliases;  // spelling variants; canonical name is
                                       // always matched as well
    std::optional<std::string> discipline;
    std::optional<std::string> affiliation;
};

// Immutable after load. The alias index maps the case-folded form of every
// alias (canonical names included) to exactly one entity; a string claimed by
// two entities is a load error.
class EntityRegistry {
public:
    static EntityRegistry load(const std::string& path);
    static EntityRegistry from_entities(std::vector<Entity> entities);

    const std::vector<Entity>& entities() const { return entities_; }
    std::size_t size() const { return entities_.size(); }

    const Entity* find(const std::string& id) const;

    // Folded alias -> index into entities(). Includes canonical names.
    const std::unordered_map<std::string, std::size_t>& alias_index() const {
        return alias_index_;
    }

private:
    std::vector<Entity> entities_;
    std::unordered_map<std::string, std::size_t> alias_index_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace corank
