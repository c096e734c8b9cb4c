#include "tfam/calculus.hpp"
#include "tfam/errors.hpp"

#include <doctest.h>

using namespace tfam;

namespace {
SafetyAutomaton comb_a() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {1, -1}};
    return a;
}
Family comb() { return Family::regular(comb_a()); }
Family teeth() { return Family::regular(comb_a(), {Theory::parse("(1)")}); }
Family full() { return Family::regular(full_space_automaton()); }
} // namespace

TEST_CASE("forcing on the comb") {
    CHECK(forces(comb(), parse_sentence("Q0 & Q1"), parse_sentence("Q0")));
    CHECK(forces(comb(), parse_sentence("Q1"), parse_sentence("Q0")));
    CHECK(forces(comb(), parse_sentence("!Q0"), parse_sentence("!Q1")));
    CHECK(!forces(comb(), parse_sentence("Q0"), parse_sentence("Q1")));
    CHECK(forces(Family(), parse_sentence("Q0"), parse_sentence("F")));
    CHECK(!forces(full(), parse_sentence("Q1"), parse_sentence("Q0")));
    // Forcing is a property of the family: it survives closure both ways.
    CHECK(forces(teeth(), parse_sentence("Q1"), parse_sentence("Q0")));
    CHECK(forces(teeth(), parse_sentence("!Q0"), parse_sentence("!Q1")));
}

TEST_CASE("scheme forcing") {
    Scheme limit = Scheme::diagram(Theory::parse("(1)"));
    CHECK(forces_scheme(comb(), limit, Scheme::finite_set({parse_sentence("Q0")})));
    CHECK(forces_scheme(comb(), limit, Scheme::finite_set({parse_sentence("Q5")})));
    CHECK(!forces_scheme(comb(), Scheme::finite_set({parse_sentence("Q0")}),
                         Scheme::finite_set({parse_sentence("Q1")})));
    CHECK(forces_scheme(comb(), Scheme::finite_set({Sentence::bottom()}), limit));
    Scheme target = Scheme::closed_target(comb_a());
    CHECK(forces_scheme(full(), target, target));
    CHECK(forces_scheme(comb(), Scheme::finite_set({Sentence::top()}), target));
}

TEST_CASE("provability and inconsistency") {
    CHECK(provable(comb(), Sentence::top()));
    CHECK(!provable(comb(), parse_sentence("Q0")));
    CHECK(provable(restrict(comb(), parse_sentence("Q0")), parse_sentence("Q0")));
    CHECK(inconsistent(comb(), parse_sentence("!Q0 & Q1")));
    CHECK(!inconsistent(comb(), parse_sentence("Q0")));
    CHECK(inconsistent(Family(), Sentence::top()));
    CHECK(provable(Family(), Sentence::bottom()));
}

TEST_CASE("equivalence modulo a family") {
    CHECK(equivalent_mod(comb(), Scheme::finite_set({parse_sentence("Q1")}),
                         Scheme::finite_set({parse_sentence("Q0 & Q1")})));
    CHECK(equivalent_mod(teeth(), Scheme::finite_set({parse_sentence("Q1")}),
                         Scheme::finite_set({parse_sentence("Q0 & Q1")})));
    CHECK(!equivalent_mod(full(), Scheme::finite_set({parse_sentence("Q0")}),
                          Scheme::finite_set({parse_sentence("Q1")})));
    CHECK(equivalent_mod(full(), Scheme::finite_set({parse_sentence("Q0 & Q1")}),
                         Scheme::finite_set({parse_sentence("Q1 & Q0")})));
}

TEST_CASE("forcing is vacuous exactly off the restriction") {
    // A sentence with no model in the family forces everything, and one
    // external model is enough to break that.
    Sentence theta = parse_sentence("!Q0 & Q1");
    CHECK(inconsistent(comb(), theta));
    CHECK(forces(comb(), theta, Sentence::bottom()));
    Theory ext = Theory::parse("01(0)");
    CHECK(theta.eval(ext));
    CHECK(!member(comb(), ext));
    Family enlarged = family_union(comb(), Family::explicit_set({ext}));
    CHECK(!forces(enlarged, theta, Sentence::bottom()));
    CHECK(!inconsistent(enlarged, theta));
}

TEST_CASE("full-space forcing is propositional entailment") {
    CHECK(forces(full(), parse_sentence("Q0 & Q1"), parse_sentence("Q0 | Q2")));
    CHECK(!forces(full(), parse_sentence("Q0 | Q1"), parse_sentence("Q0")));
    CHECK(forces(full(), parse_sentence("F"), parse_sentence("Q0")));
    CHECK(forces(full(), parse_sentence("Q0"), parse_sentence("T")));
    CHECK(forces(full(), parse_sentence("Q0 <-> Q1"), parse_sentence("Q0 -> Q1")));
}
