#include "tfam/automaton.hpp"
#include "tfam/clopen.hpp"
#include "tfam/errors.hpp"

#include <doctest.h>

using namespace tfam;

namespace {
SafetyAutomaton comb() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {1, -1}};
    return a;
}
} // namespace

TEST_CASE("trim keeps exactly the states on infinite runs") {
    SafetyAutomaton a;
    a.initial = 0;
    // State 2 is a dead end; state 3 is unreachable.
    a.next = {{1, 2}, {1, -1}, {-1, -1}, {3, 3}};
    SafetyAutomaton t = trim(a);
    CHECK(is_trim(t));
    CHECK(t.size() == 2);
    CHECK(!t.empty());
    CHECK(same_language(t, a));
    CHECK(trim(SafetyAutomaton{}).empty());
}

TEST_CASE("membership and enumeration on the comb") {
    SafetyAutomaton a = comb();
    CHECK(automaton_member(a, Theory::parse("(0)")));
    CHECK(automaton_member(a, Theory::parse("11(0)")));
    CHECK(automaton_member(a, Theory::parse("(1)")));
    CHECK(!automaton_member(a, Theory::parse("01(0)")));
    CHECK(!automaton_member(a, Theory::parse("(10)")));
    CHECK(!finite_language(a));
    Enumeration en = enumerate_points(a, 4);
    CHECK(en.points.size() == 4);
    for (const Theory& t : en.points) CHECK(automaton_member(a, t));
    CHECK(!en.complete);
    CHECK(lex_least_point(a) == Theory::parse("(0)"));
    CHECK(greedy_point(a, a.initial, 1) == Theory::parse("(1)"));
}

TEST_CASE("language algebra") {
    SafetyAutomaton a = comb();
    SafetyAutomaton full = full_space_automaton();
    CHECK(same_language(intersect_automata(a, full), a));
    CHECK(same_language(union_automata(a, a), a));
    CHECK(same_language(union_automata(a, full), full));
    CHECK(!same_language(a, full));
    auto esc = escape_word(full, a);
    REQUIRE(esc.has_value());
    CHECK(a.state_after(*esc) < 0);
    CHECK(full.state_after(*esc) >= 0);
    CHECK(!escape_word(a, full).has_value());
    SafetyAutomaton cyl = clopen_automaton(clopen_cylinder({1, 1}));
    CHECK(automaton_member(cyl, Theory::parse("11(0)")));
    CHECK(!automaton_member(cyl, Theory::parse("1(0)")));
    CHECK(same_language(intersect_automata(cyl, full), cyl));
}

TEST_CASE("singleton states detect isolated points") {
    SafetyAutomaton a = comb();
    std::vector<bool> single = singleton_states(a);
    REQUIRE(single.size() == 2);
    CHECK(!single[0]); // both teeth and the limit pass through
    CHECK(single[1]);  // the 0-spine admits exactly one run
    CHECK(isolating_prefix_len(a, Theory::parse("1(0)")).has_value());
    CHECK(!isolating_prefix_len(a, Theory::parse("(1)")).has_value());
    CHECK(!isolating_prefix_len(full_space_automaton(), Theory::parse("(0)")).has_value());
}

TEST_CASE("the derived automaton keeps exactly the limit points") {
    SafetyAutomaton d = derived_automaton(comb());
    CHECK(automaton_member(d, Theory::parse("(1)")));
    CHECK(!automaton_member(d, Theory::parse("(0)")));
    CHECK(!automaton_member(d, Theory::parse("1(0)")));
    CHECK(derived_automaton(d).empty());
    CHECK(same_language(derived_automaton(full_space_automaton()), full_space_automaton()));
}

TEST_CASE("minimization is canonical across presentations") {
    SafetyAutomaton a = comb();
    // A redundant presentation of the same language.
    SafetyAutomaton b;
    b.initial = 0;
    b.next = {{1, 2}, {1, -1}, {3, 2}, {3, -1}};
    CHECK(same_language(a, b));
    CHECK(minimize(b).size() == minimize(a).size());
    SafetyAutomaton ca = canonical_form(a), cb = canonical_form(b);
    CHECK(ca.initial == cb.initial);
    CHECK(ca.next == cb.next);
}
