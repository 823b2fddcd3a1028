#include "corank/text.hpp"

namespace corank::text {

char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + len > s.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(s[i + k]);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    i += len;
    return cp;
}

bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'A' && cp <= 'Z') ||
               (cp >= 'a' && cp <= 'z');
    }
    if (cp < 0xC0) return false;            // Latin-1 punctuation/symbols
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
    if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
    if (cp >= 0xFF00 && cp <= 0xFF0F) return false;  // fullwidth punctuation
    return true;
}

char32_t fold_char(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    // Latin-1 uppercase block, skipping the multiplication sign.
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

namespace {

void append_utf8(std::string& out, char32_t cp) {
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
}

}  // namespace

std::string fold(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t start = i;
        const char32_t cp = decode_utf8(s, i);
        const char32_t folded = fold_char(cp);
        if (folded == cp) {
            out.append(s.substr(start, i - start));
        } else {
            append_utf8(out, folded);
        }
    }
    return out;
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t start = i;
        char32_t cp = decode_utf8(s, i);
        if (!is_word_char(cp)) continue;
        Token tok;
        tok.begin = start;
        append_utf8(tok.text, fold_char(cp));
        tok.end = i;
        while (i < s.size()) {
            const std::size_t next = i;
            cp = decode_utf8(s, i);
            if (!is_word_char(cp)) {
                i = next;
                break;
            }
            append_utf8(tok.text, fold_char(cp));
            tok.end = i;
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

bool is_number_token(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

bool is_boundary_before(std::string_view s, std::size_t begin) {
    if (begin == 0) return true;
    // Walk back to the start of the preceding codepoint.
    std::size_t j = begin - 1;
    while (j > 0 && (static_cast<unsigned char>(s[j]) & 0xC0) == 0x80) --j;
    std::size_t k = j;
    return !is_word_char(decode_utf8(s, k));
}

bool is_boundary_after(std::string_view s, std::size_t end) {
    if (end >= s.size()) return true;
    std::size_t k = end;
    return !is_word_char(decode_utf8(s, k));
}

std::string uppercase_first(std::string_view s) {
    if (s.empty()) return {};
    std::size_t i = 0;
    const char32_t cp = decode_utf8(s, i);
    char32_t up = cp;
    if (cp >= 'a' && cp <= 'z') {
        up = cp - 0x20;
    } else if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) {
        up = cp - 0x20;
    }
    std::string out;
    append_utf8(out, up);
    out.append(s.substr(i));
    return out;
}

}  // namespace corank::text
