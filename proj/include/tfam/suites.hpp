#pragma once

#include "tfam/construct.hpp"
#include "tfam/family.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tfam {

// Deterministic pseudo-random generator (splitmix64) so suites reproduce
// bit-for-bit across platforms for a given seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    uint32_t below(uint32_t n); // uniform in [0, n); n must be positive
    bool coin() { return (next() >> 32) & 1; }

private:
    uint64_t state_;
};

// Random instances shared by the property suites and the tests.
Theory random_theory(Rng& rng, size_t max_prefix = 4, size_t max_period = 3);
Sentence random_sentence(Rng& rng, uint32_t atoms = 4, int depth = 3);
SafetyAutomaton random_automaton(Rng& rng, size_t max_states = 6);
Family random_regular_family(Rng& rng, size_t max_states = 6, size_t max_excluded = 2);
Family random_family(Rng& rng);
Scheme random_scheme(Rng& rng, const Family& ambient);

// Every trim automaton with 1..max_states states, exactly one representative
// per isomorphism class (breadth-first canonical labeling), plus the empty one.
std::vector<SafetyAutomaton> all_trim_automata(size_t max_states);

// Recipe shapes up to the given stacking height (bounded union fan-out).
std::vector<FamilyExpr> recipe_shapes(int height);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first failing check, or summary statistics
    double seconds = 0.0;
};

// Property suites: sentences, family, rank, calculus, construct, oracle,
// files. Unknown names throw domain_error.
std::vector<std::string> suite_names();
CheckResult run_suite(const std::string& name, uint64_t seed);

// The acceptance gate: six criteria, each with its own time budget.
std::vector<CheckResult> run_acceptance();

} // namespace tfam
