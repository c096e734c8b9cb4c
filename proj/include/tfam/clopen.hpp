#pragma once

#include "tfam/sentence.hpp"

#include <cstdint>
#include <vector>

namespace tfam {

// A clopen subset of Cantor space: a depth d and the set of length-d words whose
// cylinders the clopen is the union of. Canonical form uses the minimal such
// depth (so distinct Clopen values denote distinct sets). Words are packed into
// integers with word position i at integer bit i, i.e. position i is (w >> i) & 1.
struct Clopen {
    uint32_t depth = 0;
    std::vector<uint32_t> words; // sorted, unique, values < 2^depth

    bool empty() const { return words.empty(); }
    bool full() const { return depth == 0 && words.size() == 1; }
    bool contains(const Theory& t) const;
    bool contains_word_prefix(const std::vector<uint8_t>& w) const; // |w| >= depth

    bool operator==(const Clopen& o) const = default;
};

// Materialization guard: to_clopen refuses sentences mentioning atoms at or
// beyond this index (the table would have 2^depth rows).
inline constexpr uint32_t kMaxClopenDepth = 24;

// Canonical clopen denoted by a sentence.
Clopen to_clopen(const Sentence& s);

// Canonicalize an explicit (depth, words) table by dropping uniform trailing positions.
Clopen canonicalize(uint32_t depth, std::vector<uint32_t> words);

// Same denotation?
bool semantically_equal(const Sentence& a, const Sentence& b);

// Set algebra on clopens (results canonical).
Clopen clopen_intersect(const Clopen& a, const Clopen& b);
Clopen clopen_union(const Clopen& a, const Clopen& b);
Clopen clopen_complement(const Clopen& a);
Clopen clopen_cylinder(const std::vector<uint8_t>& prefix);

// A sentence denoting the clopen: T / F for full/empty, otherwise a disjunction
// of literal-conjunction cubes obtained by greedy merging (deterministic).
Sentence synthesize_sentence(const Clopen& c);

} // namespace tfam
