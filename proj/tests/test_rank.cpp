#include "tfam/errors.hpp"
#include "tfam/rank.hpp"

#include <doctest.h>

using namespace tfam;

namespace {
SafetyAutomaton comb() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {1, -1}};
    return a;
}
SafetyAutomaton tower2() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {2, 1}, {2, -1}};
    return a;
}
SafetyAutomaton two_comb() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 3}, {2, 1}, {2, -1}, {4, 3}, {4, -1}};
    return a;
}
Family teeth() { return Family::regular(comb(), {Theory::parse("(1)")}); }
} // namespace

TEST_CASE("ranks of the worked structures") {
    CHECK((rank(Family()) == RankResult{false, -1, 0}));
    CHECK((rank(Family::explicit_set({Theory::parse("(0)")})) == RankResult{false, 0, 1}));
    CHECK((rank(Family::explicit_set({Theory::parse("(0)"), Theory::parse("(1)"),
                                     Theory::parse("1(0)")})) == RankResult{false, 0, 3}));
    CHECK((rank(teeth()) == RankResult{false, 1, 1}));
    CHECK((rank(Family::regular(comb())) == RankResult{false, 1, 1}));
    CHECK((rank(Family::regular(tower2())) == RankResult{false, 2, 1}));
    CHECK((rank(Family::regular(two_comb())) == RankResult{false, 1, 2}));
    RankResult full = rank(Family::regular(full_space_automaton()));
    CHECK(full.is_infinite);
    CHECK(full.degree == 0);
}

TEST_CASE("derivatives peel isolated points") {
    Family t = teeth();
    CHECK(family_equal(derivative(t), Family::explicit_set({Theory::parse("(1)")})));
    CHECK(derivative(derivative(t)).is_empty());
    Family tw = Family::regular(tower2());
    Family d1 = derivative(tw);
    CHECK(member(d1, Theory::parse("(1)")));
    CHECK(member(d1, Theory::parse("10(1)")));
    CHECK(!member(d1, Theory::parse("10(0)")));
    CHECK(family_equal(derivative(d1), Family::explicit_set({Theory::parse("(1)")})));
    CHECK(derivative(Family::explicit_set({Theory::parse("(0)")})).is_empty());
}

TEST_CASE("derivative towers stabilize") {
    DerivativeTower tw = derivative_tower(Family::regular(tower2()));
    REQUIRE(tw.levels.size() >= 3);
    for (size_t k = 0; k + 1 < tw.levels.size(); ++k)
        CHECK(family_subset(tw.levels[k + 1], tw.levels[k]));
    CHECK(tw.kernel.is_empty());
    DerivativeTower full = derivative_tower(Family::regular(full_space_automaton()));
    CHECK(family_equal(full.kernel, Family::regular(full_space_automaton())));
    CHECK(family_equal(derivative(full.kernel), full.kernel));
}

TEST_CASE("perfect kernels") {
    CHECK(perfect_kernel(Family::regular(comb())).is_empty());
    Family full = Family::regular(full_space_automaton());
    CHECK(family_equal(perfect_kernel(full), full));
    CHECK(rank(perfect_kernel(full)).is_infinite);
}

TEST_CASE("point ranks grade members of the closure") {
    Family cmb = Family::regular(comb());
    CHECK(point_rank(cmb, Theory::parse("1(0)")) == std::optional<int>(0));
    CHECK(point_rank(cmb, Theory::parse("(1)")) == std::optional<int>(1));
    CHECK(point_rank(teeth(), Theory::parse("(1)")) == std::optional<int>(1));
    CHECK(!point_rank(Family::regular(full_space_automaton()), Theory::parse("(0)")).has_value());
    CHECK_THROWS_AS(point_rank(cmb, Theory::parse("01(0)")), domain_error);
    Family tw = Family::regular(tower2());
    CHECK(point_rank(tw, Theory::parse("10(0)")) == std::optional<int>(0));
    CHECK(point_rank(tw, Theory::parse("10(1)")) == std::optional<int>(1));
    CHECK(point_rank(tw, Theory::parse("(1)")) == std::optional<int>(2));
}

TEST_CASE("minimality and irreducibility") {
    CHECK(is_alpha_minimal(Family::regular(comb()), 1));
    CHECK(!is_alpha_minimal(Family::regular(two_comb()), 1)); // degree 2
    CHECK(!is_alpha_minimal(Family::regular(comb()), 2));
    CHECK(is_alpha_minimal(Family::regular(tower2()), 2));
    CHECK(is_irreducible(Family::regular(comb())));
    CHECK(is_irreducible(Family()));
    CHECK(!is_irreducible(Family::regular(two_comb())));
    CHECK(!is_irreducible(Family::regular(full_space_automaton())));
    CHECK_THROWS_AS(is_irreducible(teeth()), domain_error);
}

TEST_CASE("decomposition into irreducible blocks") {
    auto blocks = decompose(Family::regular(two_comb()));
    REQUIRE(blocks.size() == 2);
    for (const auto& [s, blk] : blocks) {
        CHECK((rank(blk) == RankResult{false, 1, 1}));
        CHECK(family_equal(blk, restrict(Family::regular(two_comb()), s)));
    }
    CHECK(semantically_equal(Sentence::conjunction(blocks[0].first, blocks[1].first),
                             Sentence::bottom()));
    CHECK(semantically_equal(Sentence::disjunction(blocks[0].first, blocks[1].first),
                             Sentence::top()));
    CHECK(family_equal(family_union(blocks[0].second, blocks[1].second),
                       Family::regular(two_comb())));
    auto one = decompose(Family::regular(comb()));
    REQUIRE(one.size() == 1);
    CHECK(semantically_equal(one[0].first, Sentence::top()));
    CHECK_THROWS_AS(decompose(Family()), domain_error);
    CHECK_THROWS_AS(decompose(Family::regular(full_space_automaton())),
                    unsupported_representation);
    }
