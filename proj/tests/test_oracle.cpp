#include "tfam/errors.hpp"
#include "tfam/oracle.hpp"
#include "tfam/rank.hpp"

#include <doctest.h>

using namespace tfam;

namespace {
SafetyAutomaton comb_a() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {1, -1}};
    return a;
}
SafetyAutomaton tower2_a() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {2, 1}, {2, -1}};
    return a;
}
Family teeth() { return Family::regular(comb_a(), {Theory::parse("(1)")}); }
} // namespace

TEST_CASE("step-counted membership and accumulation") {
    CHECK(oracle_member(comb_a(), Theory::parse("(1)")));
    CHECK(oracle_member(comb_a(), Theory::parse("111(0)")));
    CHECK(!oracle_member(comb_a(), Theory::parse("01(0)")));
    CHECK(!oracle_member(comb_a(), Theory::parse("(10)")));
    CHECK(oracle_accumulation(comb_a(), Theory::parse("(1)")));
    CHECK(!oracle_accumulation(comb_a(), Theory::parse("1(0)")));
    CHECK(!oracle_accumulation(comb_a(), Theory::parse("(10)")));
    CHECK(oracle_accumulation(full_space_automaton(), Theory::parse("(01)")));
    CHECK(oracle_in_closure(teeth(), Theory::parse("(1)")));
    CHECK(oracle_in_closure(teeth(), Theory::parse("1(0)")));
    CHECK(!oracle_in_closure(teeth(), Theory::parse("(01)")));
}

TEST_CASE("reference ranks from state analysis") {
    CHECK((oracle_rank_automaton(comb_a()) == RankResult{false, 1, 1}));
    CHECK((oracle_rank_automaton(tower2_a()) == RankResult{false, 2, 1}));
    CHECK(oracle_rank_automaton(full_space_automaton()).is_infinite);
    CHECK((oracle_rank_automaton(SafetyAutomaton{}) == RankResult{false, -1, 0}));
    std::vector<bool> inf = oracle_infinite_states(comb_a());
    REQUIRE(inf.size() == 2);
    CHECK(inf[0]);  // the 1-spine sees infinitely many points
    CHECK(!inf[1]); // the 0-tail pins a single point
}

TEST_CASE("independent forcing decision") {
    CHECK(oracle_forces_exact(teeth(), parse_sentence("Q1"), parse_sentence("Q0")));
    CHECK(oracle_forces_exact(Family::regular(comb_a()), parse_sentence("!Q0"),
                              parse_sentence("!Q1")));
    CHECK(!oracle_forces_exact(Family::regular(full_space_automaton()), parse_sentence("Q0"),
                               parse_sentence("Q1")));
    CHECK(oracle_forces_exact(Family(), parse_sentence("Q0"), Sentence::bottom()));
    Family e = Family::explicit_set({Theory::parse("(0)"), Theory::parse("1(0)")});
    CHECK(oracle_forces_exact(e, parse_sentence("Q0"), parse_sentence("!Q1")));
    CHECK(!oracle_forces_exact(e, Sentence::top(), parse_sentence("Q0")));
}

TEST_CASE("point clouds sample the family faithfully") {
    PointCloud pc = cloud_from_family(teeth());
    CHECK(!pc.points.empty());
    for (const Theory& t : pc.points) CHECK(member(teeth(), t));
    CHECK((oracle_rank(pc) == RankResult{false, 1, 1}));
    PointCloud cl = oracle_closure(pc);
    bool has_limit = false;
    for (const Theory& t : cl.points) has_limit = has_limit || t == Theory::parse("(1)");
    CHECK(has_limit);
    CHECK((oracle_rank(cloud_from_family(Family::regular(tower2_a()))) ==
           RankResult{false, 2, 1}));
    Family e = Family::explicit_set(
        {Theory::parse("(0)"), Theory::parse("1(0)"), Theory::parse("(10)")});
    CHECK((oracle_rank(cloud_from_family(e)) == RankResult{false, 0, 3}));
}

TEST_CASE("clouds without generators refuse infinitude questions") {
    PointCloud bare;
    bare.points = {Theory::parse("(0)"), Theory::parse("1(0)")};
    CHECK_THROWS_AS(oracle_rank(bare), domain_error);
    CHECK_THROWS_AS(oracle_closure(bare), domain_error);
}

TEST_CASE("pointwise cloud forcing") {
    CHECK(oracle_forces(cloud_from_family(teeth()), parse_sentence("Q1"), parse_sentence("Q0")));
    Family two = Family::explicit_set({Theory::parse("(0)"), Theory::parse("1(0)")});
    CHECK(!oracle_forces(cloud_from_family(two), parse_sentence("Q0"), parse_sentence("Q1")));
}
