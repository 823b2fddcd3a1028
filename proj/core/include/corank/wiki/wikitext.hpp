#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corank::wiki {

// Targets of [[...]] internal article links, in order of appearance,
// duplicates preserved. Piped links yield the part before "|", section
// anchors after "#" are stripped, underscores become spaces, the first
// letter is uppercased. File:/Image:/Category:, other namespace prefixes and
// interwiki language prefixes are excluded. Unclosed "[[" is ignored.
std::vector<std::string> extract_links(std::string_view wikitext);

// Category names referenced as [[<ns>:Name]] for any of the given namespace
// aliases (e.g. {"Category"}, or {"Kategorie", "Category"} for German).
// Sort keys after "|" are dropped.
std::vector<std::string> extract_categories(
    std::string_view wikitext, const std::vector<std::string>& namespaces);

// Target of a leading #REDIRECT directive, if any.
std::optional<std::string> parse_redirect(std::string_view wikitext);

// MediaWiki title normalization: underscores to spaces, whitespace collapsed,
// first letter uppercased.
std::string normalize_title(std::string_view raw);

}  // namespace corank::wiki
