#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace corank {

// Seconds since the Unix epoch, UTC.
using UtcTime = std::int64_t;

// Parses an RFC 3339 timestamp ("2012-09-01T12:00:00Z", offsets and
// fractional seconds accepted, fraction discarded). Throws Error on
// malformed input.
UtcTime parse_rfc3339(std::string_view s);

// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(UtcTime t);

// Compact filename-safe form "YYYYMMDDTHHMMSSZ".
std::string format_compact(UtcTime t);

}  // namespace corank
