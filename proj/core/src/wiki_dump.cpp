#include "corank/wiki/dump.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include <json.hpp>

#include "corank/error.hpp"

namespace corank::wiki {

using nlohmann::json;

namespace {

std::string xml_unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        const std::size_t semi = s.find(';', i);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(s[i++]);
            continue;
        }
        const std::string_view ent = s.substr(i + 1, semi - i - 1);
        if (ent == "lt") {
            out.push_back('<');
        } else if (ent == "gt") {
            out.push_back('>');
        } else if (ent == "amp") {
            out.push_back('&');
        } else if (ent == "quot") {
            out.push_back('"');
        } else if (ent == "apos") {
            out.push_back('\'');
        } else if (!ent.empty() && ent[0] == '#') {
            char32_t cp = 0;
            bool ok = true;
            if (ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')) {
                for (std::size_t k = 2; k < ent.size(); ++k) {
                    const char c = ent[k];
                    int d;
                    if (c >= '0' && c <= '9') d = c - '0';
                    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
                    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
                    else { ok = false; break; }
                    cp = cp * 16 + d;
                }
                ok = ok && ent.size() > 2;
            } else {
                for (std::size_t k = 1; k < ent.size(); ++k) {
                    if (ent[k] < '0' || ent[k] > '9') { ok = false; break; }
                    cp = cp * 10 + (ent[k] - '0');
                }
                ok = ok && ent.size() > 1;
            }
            if (!ok || cp == 0 || cp > 0x10FFFF) {
                out.push_back(s[i++]);
                continue;
            }
            if (cp < 0x80) {
                out.push_back(static_cast<char>(cp));
            } else if (cp < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else if (cp < 0x10000) {
                out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            }
        } else {
            out.push_back(s[i]);
            ++i;
            continue;
        }
        i = semi + 1;
    }
    return out;
}

// First occurrence of <tag ...>content</tag> inside chunk, entity-unescaped.
std::optional<std::string> element_text(std::string_view chunk,
                                        std::string_view tag) {
    const std::string open_exact = "<" + std::string(tag) + ">";
    const std::string open_attr = "<" + std::string(tag) + " ";
    std::size_t start = chunk.find(open_exact);
    std::size_t content;
    if (start != std::string_view::npos) {
        content = start + open_exact.size();
    } else {
        start = chunk.find(open_attr);
        if (start == std::string_view::npos) return std::nullopt;
        const std::size_t gt = chunk.find('>', start);
        if (gt == std::string_view::npos) return std::nullopt;
        if (chunk[gt - 1] == '/') return std::string();  // self-closing
        content = gt + 1;
    }
    const std::string close = "</" + std::string(tag) + ">";
    const std::size_t end = chunk.find(close, content);
    if (end == std::string_view::npos) return std::nullopt;
    return xml_unescape(chunk.substr(content, end - content));
}

}  // namespace

struct DumpReader::Impl {
    enum class Kind { Xml, Jsonl } kind = Kind::Xml;

    // XML state
    gzFile gz = nullptr;
    std::string buffer;
    std::size_t consumed = 0;  // bytes removed from the front of buffer
    bool eof = false;

    // JSONL state
    std::ifstream jsonl;
    std::size_t lineno = 0;

    ~Impl() {
        if (gz) gzclose(gz);
    }

    bool refill() {
        if (eof) return false;
        char chunk[1 << 16];
        const int n = gzread(gz, chunk, sizeof(chunk));
        if (n < 0) throw IoError("gzread failed while reading dump");
        if (n == 0) {
            eof = true;
            return false;
        }
        buffer.append(chunk, static_cast<std::size_t>(n));
        return true;
    }

    // Finds needle in buffer at or after from, refilling as needed.
    std::size_t find(std::string_view needle, std::size_t from) {
        std::size_t search_from = from;
        while (true) {
            const std::size_t pos = buffer.find(needle, search_from);
            if (pos != std::string::npos) return pos;
            // Resume just before the old end in case the needle straddles
            // the refill boundary.
            search_from = buffer.size() >= needle.size()
                              ? buffer.size() - needle.size() + 1
                              : 0;
            if (search_from < from) search_from = from;
            if (!refill()) return std::string::npos;
        }
    }

    std::optional<RawPage> next_xml() {
        const std::size_t open = find("<page>", 0);
        if (open == std::string::npos) return std::nullopt;
        const std::size_t close = find("</page>", open);
        if (close == std::string::npos)
            throw ParseError("unterminated <page> element at byte offset " +
                                 std::to_string(consumed + open),
                             consumed + open);
        const std::string_view chunk =
            std::string_view(buffer).substr(open, close - open);

        RawPage page;
        const auto title = element_text(chunk, "title");
        if (!title)
            throw ParseError("<page> without <title> at byte offset " +
                                 std::to_string(consumed + open),
                             consumed + open);
        page.title = *title;
        if (const auto ns = element_text(chunk, "ns"))
            page.namespace_id = std::stoi(*ns);
        if (const auto ts = element_text(chunk, "timestamp"))
            page.revision_timestamp = parse_rfc3339(*ts);
        if (const auto text = element_text(chunk, "text"))
            page.wikitext = *text;

        const std::size_t cut = close + std::strlen("</page>");
        consumed += cut;
        buffer.erase(0, cut);
        return page;
    }

    std::optional<RawPage> next_jsonl() {
        std::string line;
        while (std::getline(jsonl, line)) {
            ++lineno;
            if (line.empty()) continue;
            json rec;
            try {
                rec = json::parse(line);
            } catch (const json::parse_error& e) {
                throw ParseError("dump fixture line " + std::to_string(lineno) +
                                     ": " + e.what(),
                                 lineno);
            }
            RawPage page;
            page.title = rec.at("title").get<std::string>();
            page.wikitext = rec.at("wikitext").get<std::string>();
            page.revision_timestamp =
                parse_rfc3339(rec.at("revision_timestamp").get<std::string>());
            if (rec.contains("namespace"))
                page.namespace_id = rec.at("namespace").get<int>();
            return page;
        }
        return std::nullopt;
    }
};

DumpReader::DumpReader() : impl_(std::make_unique<Impl>()) {}
DumpReader::~DumpReader() = default;
DumpReader::DumpReader(DumpReader&&) noexcept = default;
DumpReader& DumpReader::operator=(DumpReader&&) noexcept = default;

DumpReader DumpReader::open(const std::string& path) {
    DumpReader reader;
    if (path.size() >= 6 && path.compare(path.size() - 6, 6, ".jsonl") == 0) {
        reader.impl_->kind = Impl::Kind::Jsonl;
        reader.impl_->jsonl.open(path);
        if (!reader.impl_->jsonl)
            throw IoError("cannot open dump fixture: " + path);
    } else {
        reader.impl_->gz = gzopen(path.c_str(), "rb");
        if (!reader.impl_->gz) throw IoError("cannot open dump: " + path);
    }
    return reader;
}

std::optional<RawPage> DumpReader::next() {
    return impl_->kind == Impl::Kind::Xml ? impl_->next_xml()
                                          : impl_->next_jsonl();
}

}  // namespace corank::wiki
