#pragma once

#include <memory>
#include <optional>
#include <string>

#include "corank/timeutil.hpp"

namespace corank::wiki {

struct RawPage {
    std::string title;
    std::string wikitext;
    UtcTime revision_timestamp = 0;
    int namespace_id = 0;  // 0 = article
};

// Streaming reader over MediaWiki pages-articles XML (plain or gzip; zlib
// reads both transparently) or a JSONL fixture with {title, wikitext,
// revision_timestamp, namespace?} per line. Memory use is bounded by the
// largest single page. Malformed XML raises ParseError carrying the byte
// offset; pages already returned stay valid.
class DumpReader {
public:
    static DumpReader open(const std::string& path);
    ~DumpReader();
    DumpReader(DumpReader&&) noexcept;
    DumpReader& operator=(DumpReader&&) noexcept;

    std::optional<RawPage> next();

private:
    DumpReader();
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace corank::wiki
