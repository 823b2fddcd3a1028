#include "corank/cooccurrence.hpp"

#include <algorithm>

#include "corank/error.hpp"

namespace corank {

CooccurrenceGraph build_cooccurrence(
    const DocumentSet& docs,
    const std::vector<std::vector<Mention>>& mentions_per_doc) {
    if (mentions_per_doc.size() != docs.size())
        throw Error("mention sets do not match document set size");

    CooccurrenceGraph result;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        std::vector<std::string> present;
        for (const Mention& m : mentions_per_doc[d]) present.push_back(m.entity_id);
        std::sort(present.begin(), present.end());
        present.erase(std::unique(present.begin(), present.end()),
                      present.end());

        for (const auto& id : present) {
            result.graph.add_node(id);
            ++result.doc_count[id];
        }
        for (std::size_t i = 0; i < present.size(); ++i)
            for (std::size_t j = i + 1; j < present.size(); ++j)
                result.graph.bump_edge(present[i], present[j], 1.0);
    }
    return result;
}

}  // namespace corank
