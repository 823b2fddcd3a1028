#include "corank/mention.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "corank/text.hpp"

namespace corank {

std::vector<Mention> detect_mentions(const Document& doc,
                                     const EntityRegistry& registry) {
    if (doc.text.empty() || registry.alias_index().empty()) return {};

    // Folding preserves byte offsets (see text::fold), so candidate spans in
    // the folded text map 1:1 onto the original.
    const std::string folded = text::fold(doc.text);

    struct Candidate {
        std::size_t begin;
        std::size_t end;
        std::size_t entity_idx;
    };
    std::vector<Candidate> candidates;
    for (const auto& [alias, entity_idx] : registry.alias_index()) {
        std::size_t pos = 0;
        while ((pos = folded.find(alias, pos)) != std::string::npos) {
            const std::size_t end = pos + alias.size();
            if (text::is_boundary_before(folded, pos) &&
                text::is_boundary_after(folded, end)) {
                candidates.push_back({pos, end, entity_idx});
            }
            ++pos;
        }
    }

    std::sort(candidates.begin(), candidates.end(),
              [&](const Candidate& a, const Candidate& b) {
                  if (a.begin != b.begin) return a.begin < b.begin;
                  if (a.end != b.end) return a.end > b.end;  // longest first
                  return registry.entities()[a.entity_idx].id <
                         registry.entities()[b.entity_idx].id;
              });

    std::vector<Mention> mentions;
    std::size_t covered_until = 0;
    for (const Candidate& c : candidates) {
        if (c.begin < covered_until) continue;
        Mention m;
        m.entity_id = registry.entities()[c.entity_idx].id;
        m.document_id = doc.id;
        m.offset = c.begin;
        m.matched_alias = doc.text.substr(c.begin, c.end - c.begin);
        mentions.push_back(std::move(m));
        covered_until = c.end;
    }
    return mentions;
}

std::vector<std::vector<Mention>> detect_all_mentions(
    const DocumentSet& docs, const EntityRegistry& registry,
    unsigned workers) {
    const std::size_t n = docs.size();
    std::vector<std::vector<Mention>> out(n);
    if (n == 0) return out;
    workers = std::max(1u, std::min<unsigned>(workers, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = detect_mentions(docs.documents()[i], registry);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < n;
                 i = next.fetch_add(1)) {
                out[i] = detect_mentions(docs.documents()[i], registry);
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace corank
