#pragma once

#include <stdexcept>
#include <string>

namespace tfam {

// Base class for all library errors. The CLI maps these to exit code 1.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (sentence, theory literal, ordinal notation, file).
// `pos` is a 0-based offset into the offending string, or npos when not applicable.
struct parse_error : error {
    size_t pos;
    parse_error(const std::string& msg, size_t p = std::string::npos)
        : error(p == std::string::npos ? msg : msg + " (at offset " + std::to_string(p) + ")"),
          pos(p) {}
};

// A precondition of an operation does not hold (e.g. rank queried out of range,
// subfamily argument not contained in the family).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// The mathematical result exists but cannot be expressed in the library's
// representation (closed carrier minus a finite excluded set).
struct unsupported_representation : error {
    explicit unsupported_representation(const std::string& msg) : error(msg) {}
};

// A configured resource guard tripped (e.g. clopen depth beyond the materialization cap).
struct resource_error : error {
    explicit resource_error(const std::string& msg) : error(msg) {}
};

// An oracle decision would need a deeper horizon than provided; the oracle
// refuses to guess rather than answer wrongly.
struct inconclusive_error : error {
    explicit inconclusive_error(const std::string& msg) : error(msg) {}
};

} // namespace tfam
