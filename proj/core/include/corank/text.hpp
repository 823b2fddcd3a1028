#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corank::text {

// Decodes one UTF-8 codepoint starting at s[i] and advances i past it.
// Invalid bytes decode as U+FFFD and advance by one.
char32_t decode_utf8(std::string_view s, std::size_t& i);

// Word characters: ASCII alphanumerics plus non-ASCII letters. Latin-1 symbol
// codepoints and the general/CJK punctuation blocks are treated as separators.
bool is_word_char(char32_t cp);

// Case fold covering ASCII and Latin-1. Both ranges keep their UTF-8 byte
// width under folding, so folded strings stay offset-compatible with the
// original text.
char32_t fold_char(char32_t cp);

// Folds a string in place codepoint by codepoint. Byte offsets into the
// result match byte offsets into the input.
std::string fold(std::string_view s);

struct Token {
    std::string text;   // folded token text
    std::size_t begin;  // byte offset of first byte
    std::size_t end;    // one past last byte
};

// Splits s into maximal runs of word characters, folded.
std::vector<Token> tokenize(std::string_view s);

// True if every codepoint of the (already folded) token is an ASCII digit.
bool is_number_token(std::string_view token);

// True when the byte positions before `begin` / at `end` are text boundaries
// (start/end of string or a non-word character).
bool is_boundary_before(std::string_view s, std::size_t begin);
bool is_boundary_after(std::string_view s, std::size_t end);

// Uppercases the first codepoint (ASCII and Latin-1 only); MediaWiki title
// normalization.
std::string uppercase_first(std::string_view s);

}  // namespace corank::text
