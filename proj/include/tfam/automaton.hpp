#pragma once

#include "tfam/clopen.hpp"
#include "tfam/theory.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tfam {

// Deterministic partial automaton over the alphabet {0,1}. It denotes the set
// of infinite bit sequences whose run never falls off the transition map — a
// closed (safety) subset of Cantor space. The library keeps every automaton
// trim: all states reachable from the initial state and every state on at
// least one infinite run. The empty automaton (no states) denotes the empty set.
struct SafetyAutomaton {
    int initial = -1;                      // -1 iff the automaton is empty
    std::vector<std::array<int, 2>> next;  // next[q][b] = target or -1

    size_t size() const { return next.size(); }
    bool empty() const { return initial < 0; }
    int step(int q, int b) const { return next[static_cast<size_t>(q)][static_cast<size_t>(b)]; }

    // State after reading w from the initial state; -1 if the run dies.
    int state_after(const std::vector<uint8_t>& w) const;

    bool operator==(const SafetyAutomaton& o) const = default;
};

// One-state automaton denoting all of Cantor space.
SafetyAutomaton full_space_automaton();

// Remove states with no outgoing edge (iteratively) and states unreachable
// from the initial state. Preserves the denotation.
SafetyAutomaton trim(const SafetyAutomaton& a);
bool is_trim(const SafetyAutomaton& a);

// Does the (trim) automaton accept the ultimately periodic point t?
bool automaton_member(const SafetyAutomaton& a, const Theory& t);

// Exact number of points of den(a), which must be finite (check with
// finite_language first; the value is meaningless otherwise). Alive-word
// counts settle to the cardinality once the length passes the state count.
// Counts saturate at cap + 1, so any value above cap means "more than cap".
uint64_t point_count_if_finite(const SafetyAutomaton& a, uint64_t cap = uint64_t(1) << 62);

// Language comparison via product search: den(a) subset of den(b) iff no
// reachable pair has an a-edge where b's run dies. Non-trim inputs are
// trimmed internally.
bool is_sublanguage(const SafetyAutomaton& a, const SafetyAutomaton& b);
bool same_language(const SafetyAutomaton& a, const SafetyAutomaton& b);

// A word w with a alive after w and b dead, witnessing non-inclusion.
std::optional<std::vector<uint8_t>> escape_word(const SafetyAutomaton& a, const SafetyAutomaton& b);

// Intersection / union of the denoted closed sets (results trim + minimized).
SafetyAutomaton intersect_automata(const SafetyAutomaton& a, const SafetyAutomaton& b);
SafetyAutomaton union_automata(const SafetyAutomaton& a, const SafetyAutomaton& b);

// Moore minimization (unique minimal automaton for the denoted set).
SafetyAutomaton minimize(const SafetyAutomaton& a);
// Minimize + breadth-first relabel; equal canonical forms iff equal denotations.
SafetyAutomaton canonical_form(const SafetyAutomaton& a);

// A singleton state admits exactly one infinite run (every state reachable from
// it, itself included, has exactly one outgoing edge). A run is isolated in the
// denotation iff it visits a singleton state.
std::vector<bool> singleton_states(const SafetyAutomaton& a);

// Accumulation points of den(a): drop all singleton states and re-trim.
SafetyAutomaton derived_automaton(const SafetyAutomaton& a);

// Largest subautomaton with no singleton states (possibly empty): the perfect
// kernel of the denotation. Fixpoint of derived_automaton.
SafetyAutomaton kernel_automaton(const SafetyAutomaton& a);

// Keep only the given states (dropping edges that leave the set), then trim.
SafetyAutomaton restrict_states(const SafetyAutomaton& a, const std::vector<bool>& keep);

// Automaton of the clopen set (every run beyond the depth is free).
SafetyAutomaton clopen_automaton(const Clopen& c);

// Automaton denoting exactly the given finite set of points.
SafetyAutomaton points_automaton(const std::vector<Theory>& pts);

// Automaton accepting the single point t (chain + cycle).
SafetyAutomaton lasso_automaton(const Theory& t);

// den(a) minus the single point t; t must be isolated in den(a). Unrolls t's
// isolating prefix and drops the branch that carried t.
SafetyAutomaton remove_point(const SafetyAutomaton& a, const Theory& t);

// Least k such that the state after t[0..k) is a singleton state; nullopt when
// t is not isolated in den(a) (or not a member at all).
std::optional<size_t> isolating_prefix_len(const SafetyAutomaton& a, const Theory& t);

// The lexicographically least point of den(a) starting at `from` (default:
// initial). Greedy 0-first walk; well defined on trim nonempty automata.
Theory lex_least_point(const SafetyAutomaton& a, int from = -1);
// Greedy walk preferring `bit`; used to build spines of comb constructions.
Theory greedy_point(const SafetyAutomaton& a, int from, int bit);

// Distinct points of den(a). Stops after collecting `want` points (complete =
// false) or when the remaining frontier is all singleton states (complete =
// true, the returned list is the entire denotation).
struct Enumeration {
    std::vector<Theory> points;
    bool complete = false;
};
Enumeration enumerate_points(const SafetyAutomaton& a, size_t want);

// Is den(a) finite? (No state both reachable and able to reach a branching cycle.)
bool finite_language(const SafetyAutomaton& a);

} // namespace tfam
