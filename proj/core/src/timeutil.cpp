#include "corank/timeutil.hpp"

#include <cstdio>

#include "corank/error.hpp"

namespace corank {

namespace {

// Howard Hinnant's days-from-civil; branchless civil date <-> day count.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return static_cast<std::int64_t>(era) * 146097 + doe - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

bool read_digits(std::string_view s, std::size_t& i, int count, int& out) {
    if (i + count > s.size()) return false;
    out = 0;
    for (int k = 0; k < count; ++k) {
        const char c = s[i + k];
        if (c < '0' || c > '9') return false;
        out = out * 10 + (c - '0');
    }
    i += count;
    return true;
}

}  // namespace

UtcTime parse_rfc3339(std::string_view s) {
    std::size_t i = 0;
    int y, mo, d, h, mi, se;
    auto fail = [&]() -> Error {
        return Error("invalid RFC 3339 timestamp: '" + std::string(s) + "'");
    };
    if (!read_digits(s, i, 4, y)) throw fail();
    if (i >= s.size() || s[i++] != '-') throw fail();
    if (!read_digits(s, i, 2, mo)) throw fail();
    if (i >= s.size() || s[i++] != '-') throw fail();
    if (!read_digits(s, i, 2, d)) throw fail();
    if (i >= s.size() || (s[i] != 'T' && s[i] != 't' && s[i] != ' ')) throw fail();
    ++i;
    if (!read_digits(s, i, 2, h)) throw fail();
    if (i >= s.size() || s[i++] != ':') throw fail();
    if (!read_digits(s, i, 2, mi)) throw fail();
    if (i >= s.size() || s[i++] != ':') throw fail();
    if (!read_digits(s, i, 2, se)) throw fail();
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 60)
        throw fail();
    if (i < s.size() && s[i] == '.') {
        ++i;
        std::size_t ndig = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            ++i;
            ++ndig;
        }
        if (ndig == 0) throw fail();
    }
    std::int64_t offset = 0;
    if (i < s.size() && (s[i] == 'Z' || s[i] == 'z')) {
        ++i;
    } else if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        const int sign = s[i] == '+' ? 1 : -1;
        ++i;
        int oh, om;
        if (!read_digits(s, i, 2, oh)) throw fail();
        if (i >= s.size() || s[i++] != ':') throw fail();
        if (!read_digits(s, i, 2, om)) throw fail();
        offset = sign * (oh * 3600 + om * 60);
    } else {
        throw fail();
    }
    if (i != s.size()) throw fail();
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + se - offset;
}

std::string format_rfc3339(UtcTime t) {
    std::int64_t days = t / 86400;
    std::int64_t sec = t % 86400;
    if (sec < 0) {
        sec += 86400;
        --days;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(sec / 3600), static_cast<int>(sec / 60 % 60),
                  static_cast<int>(sec % 60));
    return buf;
}

std::string format_compact(UtcTime t) {
    std::string s = format_rfc3339(t);
    std::string out;
    for (char c : s) {
        if (c != '-' && c != ':') out.push_back(c);
    }
    return out;
}

}  // namespace corank
