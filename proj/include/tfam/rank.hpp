#pragma once

#include "tfam/family.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tfam {

// Rank of a family: the length of the derivative tower of its closure, plus
// the size of the last nonempty level. The empty family has rank -1 and
// degree 0; a family whose tower never empties has infinite rank.
struct RankResult {
    bool is_infinite = false;
    int rank = -1;
    uint64_t degree = 0;

    bool operator==(const RankResult&) const = default;
};

// The full derivative tower of closure(f): levels[0] = closure(f), each next
// level drops the isolated points of the previous one, until empty or until
// the levels stop changing. `kernel` is the largest perfect subfamily (empty
// iff the rank is finite).
struct DerivativeTower {
    std::vector<Family> levels;
    Family kernel;
};

// One derivation step: closure(f) minus its isolated points.
Family derivative(const Family& f);

DerivativeTower derivative_tower(const Family& f);

RankResult rank(const Family& f);

// Largest level of the tower containing t, or absent when t survives into the
// kernel. Throws domain_error when t is not in closure(f).
std::optional<int> point_rank(const Family& f, const Theory& t);

Family perfect_kernel(const Family& f);

// rank == alpha with a single point surviving at the top.
bool is_alpha_minimal(const Family& f, int alpha);

// A closed family is irreducible when it is not the union of two proper
// relatively closed subfamilies; for finite rank this is exactly degree 1.
bool is_irreducible(const Family& f);

// Split f by pairwise inconsistent sentences, one block per top-level point,
// each block alpha-minimal for alpha = rank(f). The sentences cover the whole
// space, so the blocks partition f. Requires finite rank.
std::vector<std::pair<Sentence, Family>> decompose(const Family& f);

} // namespace tfam
