#pragma once

#include <stdexcept>
#include <string>

namespace corank {

// Base for all recoverable library failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input data (malformed files, constraint violations in loaded records).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t location)
        : Error(what), location_(location) {}
    // Line number for text formats, byte offset for binary streams.
    std::size_t location() const { return location_; }

private:
    std::size_t location_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace corank
