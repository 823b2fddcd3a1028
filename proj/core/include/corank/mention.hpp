#pragma once

#include <string>
#include <vector>

#include "corank/corpus.hpp"
#include "corank/entity.hpp"

namespace corank {

struct Mention {
    std::string entity_id;
    std::string document_id;
    std::size_t offset = 0;     // byte offset of the match start
    std::string matched_alias;  // document substring at offset
};

// Finds every maximal case-insensitive, word-boundary-delimited alias
// occurrence. Overlapping candidates resolve leftmost-longest, so
// "Paul Krugman" beats "Krugman" on the same span.
std::vector<Mention> detect_mentions(const Document& doc,
                                     const EntityRegistry& registry);

// Convenience: mentions for every document, keyed by document order.
std::vector<std::vector<Mention>> detect_all_mentions(
    const DocumentSet& docs, const EntityRegistry& registry,
    unsigned workers = 1);

}  // namespace corank
