#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tfam {

// A complete theory is a point of Cantor space: an infinite bit sequence,
// restricted in this library to ultimately periodic sequences. Canonical form:
// the period is primitive (not a power of a shorter word) and the prefix cannot
// be shortened by absorbing a rotation of the period. Canonical forms are unique,
// so == on the stored fields is equality of the denoted sequences.
class Theory {
public:
    // Canonicalizing constructor. `period` must be nonempty.
    Theory(std::vector<uint8_t> prefix, std::vector<uint8_t> period);

    // Parses the literal syntax `<prefix>(<period>)`, e.g. "110(0)", "(1)", "1(10)".
    static Theory parse(const std::string& text);

    // Prints the canonical literal.
    std::string str() const;

    // Bit at position i (0-based) of the denoted sequence.
    int bit(size_t i) const;

    const std::vector<uint8_t>& prefix() const { return prefix_; }
    const std::vector<uint8_t>& period() const { return period_; }

    // Length after which the sequence is purely periodic.
    size_t prefix_len() const { return prefix_.size(); }
    size_t period_len() const { return period_.size(); }

    // First i bits as a word.
    std::vector<uint8_t> prefix_word(size_t i) const;

    bool operator==(const Theory& o) const {
        return prefix_ == o.prefix_ && period_ == o.period_;
    }
    // Lexicographic order on the denoted infinite sequences (used for
    // deterministic tie-breaking); distinct sequences differ within
    // max prefix length + lcm of periods, so comparison terminates.
    bool operator<(const Theory& o) const;

private:
    std::vector<uint8_t> prefix_;
    std::vector<uint8_t> period_;
};

// Does `w` agree with the first |w| bits of `t`?
bool is_prefix_of(const std::vector<uint8_t>& w, const Theory& t);

// Position of the first differing bit of two distinct theories.
size_t first_difference(const Theory& a, const Theory& b);

// Bit-word helpers shared across modules.
std::string word_str(const std::vector<uint8_t>& w);
std::vector<uint8_t> parse_word(const std::string& s);

} // namespace tfam
