#include "corank/wiki/wikitext.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "corank/text.hpp"

namespace corank::wiki {

namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
    });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Namespaces and pseudo-namespaces that never point at articles.
constexpr std::array kExcludedPrefixes = {
    "file",     "image",     "category", "template", "wikipedia",
    "help",     "portal",    "special",  "media",    "mediawiki",
    "talk",     "user",      "draft",    "module",   "wikt",
    "wiktionary", "commons", "meta",
};

bool looks_like_interwiki(std::string_view prefix) {
    // Language codes: 2-3 lowercase letters, optional dashed subtags.
    if (prefix.empty()) return false;
    std::size_t letters = 0;
    std::size_t i = 0;
    for (; i < prefix.size(); ++i) {
        const char c = prefix[i];
        if (c >= 'a' && c <= 'z') {
            ++letters;
            if (letters > 3) return false;
        } else if (c == '-') {
            break;
        } else {
            return false;
        }
    }
    if (letters < 2) return false;
    for (; i < prefix.size(); ++i) {
        const char c = prefix[i];
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-'))
            return false;
    }
    return true;
}

bool is_excluded_target(std::string_view target) {
    const std::size_t colon = target.find(':');
    if (colon == std::string_view::npos) return false;
    const std::string prefix = ascii_lower(trim(target.substr(0, colon)));
    for (const char* ns : kExcludedPrefixes)
        if (prefix == ns) return true;
    return looks_like_interwiki(prefix);
}

// Raw inner targets of [[...]] links: part before "|", trimmed, empties
// skipped.
template <typename Fn>
void for_each_link_target(std::string_view wikitext, Fn&& fn) {
    std::size_t pos = 0;
    while ((pos = wikitext.find("[[", pos)) != std::string_view::npos) {
        const std::size_t close = wikitext.find("]]", pos + 2);
        if (close == std::string_view::npos) return;  // unclosed, ignore
        std::string_view inner = wikitext.substr(pos + 2, close - pos - 2);
        // Nested opener inside (e.g. file captions): restart from it.
        const std::size_t nested = inner.rfind("[[");
        if (nested != std::string_view::npos) {
            pos += 2 + nested;
            continue;
        }
        const std::size_t pipe = inner.find('|');
        if (pipe != std::string_view::npos) inner = inner.substr(0, pipe);
        inner = trim(inner);
        if (!inner.empty()) fn(inner);
        pos = close + 2;
    }
}

}  // namespace

std::string normalize_title(std::string_view raw) {
    std::string spaced;
    spaced.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (c == '_' || c == ' ' || c == '\t') {
            pending_space = !spaced.empty();
            continue;
        }
        if (pending_space) {
            spaced.push_back(' ');
            pending_space = false;
        }
        spaced.push_back(c);
    }
    return text::uppercase_first(spaced);
}

std::vector<std::string> extract_links(std::string_view wikitext) {
    std::vector<std::string> links;
    for_each_link_target(wikitext, [&](std::string_view target) {
        if (is_excluded_target(target)) return;
        const std::size_t hash = target.find('#');
        if (hash != std::string_view::npos) target = trim(target.substr(0, hash));
        if (target.empty()) return;
        links.push_back(normalize_title(target));
    });
    return links;
}

std::vector<std::string> extract_categories(
    std::string_view wikitext, const std::vector<std::string>& namespaces) {
    std::vector<std::string> lowered;
    lowered.reserve(namespaces.size());
    for (const auto& ns : namespaces) lowered.push_back(ascii_lower(ns));

    std::vector<std::string> cats;
    for_each_link_target(wikitext, [&](std::string_view target) {
        const std::size_t colon = target.find(':');
        if (colon == std::string_view::npos) return;
        const std::string prefix = ascii_lower(trim(target.substr(0, colon)));
        if (std::find(lowered.begin(), lowered.end(), prefix) == lowered.end())
            return;
        const std::string_view name = trim(target.substr(colon + 1));
        if (!name.empty()) cats.push_back(std::string(name));
    });
    return cats;
}

std::optional<std::string> parse_redirect(std::string_view wikitext) {
    std::string_view s = trim(wikitext);
    const std::string lowered = ascii_lower(s.substr(0, 9));
    if (!lowered.starts_with("#redirect")) return std::nullopt;
    const std::size_t open = s.find("[[");
    if (open == std::string_view::npos) return std::nullopt;
    const std::size_t close = s.find("]]", open + 2);
    if (close == std::string_view::npos) return std::nullopt;
    std::string_view inner = s.substr(open + 2, close - open - 2);
    const std::size_t pipe = inner.find('|');
    if (pipe != std::string_view::npos) inner = inner.substr(0, pipe);
    const std::size_t hash = inner.find('#');
    if (hash != std::string_view::npos) inner = inner.substr(0, hash);
    inner = trim(inner);
    if (inner.empty()) return std::nullopt;
    return normalize_title(inner);
}

}  // namespace corank::wiki
