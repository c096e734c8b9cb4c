#pragma once

#include "tfam/automaton.hpp"
#include "tfam/family.hpp"
#include "tfam/rank.hpp"
#include "tfam/sentence.hpp"
#include "tfam/theory.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tfam {

// Brute-force reference implementations. Every verdict here is derived from
// counting bounded-length words (dynamic programming over prefixes), never
// from the state-graph analyses the main algorithms use, so agreement between
// the two is meaningful evidence of correctness.

// Saturation cap for word counts (far beyond anything a test instance reaches;
// a saturated count is treated as infinite).
inline constexpr uint64_t kCountCap = uint64_t(1) << 62;

// Per-state census of the residual point sets of `a` restricted to the states
// in `mask`: whether the state lies on an infinite run, whether its residual
// set is infinite, and the exact point count when finite.
struct ResidualCounts {
    std::vector<bool> live;
    std::vector<bool> unbounded;
    std::vector<uint64_t> count;
};

ResidualCounts residual_counts(const SafetyAutomaton& a, const std::vector<bool>& mask);
ResidualCounts residual_counts(const SafetyAutomaton& a);

// Membership of an ultimately periodic point by bounded simulation: the run
// survives prefix + (states+1) periods iff it survives forever (pigeonhole).
bool oracle_member(const SafetyAutomaton& a, const Theory& t);

// Is t an accumulation point of den(a)? True iff the residual set is infinite
// at every state along t's run (checked over one full period past the prefix).
bool oracle_accumulation(const SafetyAutomaton& a, const Theory& t);

// Is t in the topological closure of the family?
bool oracle_in_closure(const Family& f, const Theory& t);

// States whose residual set is infinite; restricting to them yields the
// derived set (accumulation points) of den(a).
std::vector<bool> oracle_infinite_states(const SafetyAutomaton& a);

// Rank and degree of den(a) by iterating the infinite-residual state mask.
RankResult oracle_rank_automaton(const SafetyAutomaton& a);

// Does phi force psi over f? Decided by enumerating the finitely many prefix
// words that settle phi & !psi and counting family members in each cylinder.
bool oracle_forces_exact(const Family& f, const Sentence& phi, const Sentence& psi);

// A finite sample of a family: the points, the prefix depth up to which the
// sample is analyzed, and the sampled family itself (required by the
// operations that must decide infinitude rather than guess it from a sample).
struct PointCloud {
    std::vector<Theory> points;
    size_t horizon = 16;
    std::optional<Family> generator;
};

// Sample the family: for every alive word at depth horizon/2, the least and
// the 1-preferring completion (skipping excluded points). The horizon is
// raised if needed so every point satisfies prefix + 2*periods <= horizon.
PointCloud cloud_from_family(const Family& f, size_t horizon = 16);

// Cloud plus limit points of the generating family (each candidate is
// admitted only when the counting oracle confirms every cylinder along it
// holds infinitely many members). An infinite accumulation set is sampled:
// like the cloud itself, the result is a sound crop, not an exhaustive list.
// Throws domain_error without generator metadata.
PointCloud oracle_closure(const PointCloud& pc);

// Rank and degree by literal iterated removal of isolated points from the
// cloud, each removal and the final level count confirmed against the
// generator by word counting. Throws inconclusive_error (after one horizon-
// doubling retry) when the cloud undersamples the decisive level; never
// returns a wrong answer.
RankResult oracle_rank(const PointCloud& pc);

// Pointwise forcing check over the cloud sample.
bool oracle_forces(const PointCloud& pc, const Sentence& phi, const Sentence& psi);

} // namespace tfam
