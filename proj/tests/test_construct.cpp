#include "tfam/construct.hpp"
#include "tfam/errors.hpp"
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
Family comb() { return Family::regular(comb_a()); }
Family full() { return Family::regular(full_space_automaton()); }
} // namespace

TEST_CASE("ordinal notation") {
    CHECK(OrdinalCnf::parse("0").is_zero());
    CHECK(OrdinalCnf::parse("7").finite_value() == 7);
    CHECK(OrdinalCnf::parse("w^3*2 + w*4 + 7").str() == "w^3*2 + w*4 + 7");
    CHECK(OrdinalCnf::parse("w^1*1").str() == "w");
    CHECK(OrdinalCnf::parse("w").is_limit());
    CHECK(OrdinalCnf::parse("w + 1").is_successor());
    CHECK((OrdinalCnf::parse("w + 1").predecessor() == OrdinalCnf::parse("w")));
    CHECK((OrdinalCnf::finite(4).plus_one() == OrdinalCnf::finite(5)));
    CHECK(OrdinalCnf::parse("w*2") < OrdinalCnf::parse("w^2"));
    CHECK(OrdinalCnf::parse("5") < OrdinalCnf::parse("w"));
    CHECK(OrdinalCnf::compare(OrdinalCnf::parse("w + 3"), OrdinalCnf::parse("w + 3")) == 0);
    CHECK_THROWS_AS(OrdinalCnf::parse("x"), parse_error);
    CHECK_THROWS_AS(OrdinalCnf::parse("w + w^2"), parse_error);
    CHECK_THROWS_AS(OrdinalCnf::parse("w*0"), parse_error);
    CHECK_THROWS_AS(OrdinalCnf::parse(""), parse_error);
    CHECK_THROWS_AS(OrdinalCnf::parse("w").finite_value(), domain_error);
    CHECK_THROWS_AS(OrdinalCnf::parse("w").predecessor(), domain_error);
}

TEST_CASE("recipes compile to their recipe rank") {
    FamilyExpr pt = FamilyExpr::point(Theory::parse("1(0)"));
    CHECK((pt.recipe_rank() == std::pair<OrdinalCnf, uint64_t>{OrdinalCnf::finite(0), 1}));
    CHECK((rank(Family::regular(pt.compile())) == RankResult{false, 0, 1}));

    FamilyExpr cmb = FamilyExpr::limit_stack(FamilyExpr::point(Theory::parse("(0)")), 1);
    CHECK((cmb.recipe_rank() == std::pair<OrdinalCnf, uint64_t>{OrdinalCnf::finite(1), 1}));
    CHECK(same_language(cmb.compile(), comb_a()));

    FamilyExpr two = FamilyExpr::prefixed_union(
        {{{0}, cmb}, {{1}, cmb}});
    CHECK((two.recipe_rank() == std::pair<OrdinalCnf, uint64_t>{OrdinalCnf::finite(1), 2}));
    CHECK((rank(Family::regular(two.compile())) == RankResult{false, 1, 2}));

    FamilyExpr tower = FamilyExpr::limit_stack(cmb, 1);
    CHECK((rank(Family::regular(tower.compile())) == RankResult{false, 2, 1}));

    FamilyExpr omega = FamilyExpr::omega_stack(OrdinalCnf::parse("w"), 1);
    CHECK((omega.recipe_rank() == std::pair<OrdinalCnf, uint64_t>{OrdinalCnf::parse("w"), 1}));
    CHECK_THROWS_AS(omega.compile(), domain_error);
    CHECK_THROWS_AS(FamilyExpr::omega_stack(OrdinalCnf::parse("w + 1"), 1), domain_error);
    CHECK_THROWS_AS(FamilyExpr::prefixed_union({}), domain_error);
    CHECK_THROWS_AS(FamilyExpr::prefixed_union({{{1}, pt}, {{1, 0}, pt}}), domain_error);
}

TEST_CASE("families of prescribed rank") {
    for (int alpha = 0; alpha <= 3; ++alpha)
        for (uint64_t n : {uint64_t(1), uint64_t(3)}) {
            RankingReport rep = build_family(alpha, n);
            REQUIRE(rep.witness.has_value());
            CHECK(rep.verified);
            CHECK((rank(*rep.witness) == RankResult{false, alpha, n}));
            REQUIRE(rep.recipe.has_value());
            auto [ra, rd] = rep.recipe->recipe_rank();
            CHECK((ra == OrdinalCnf::finite(static_cast<uint64_t>(alpha))));
            CHECK(rd == n);
        }
    CHECK_THROWS_AS(build_family(-1, 1), domain_error);
    CHECK_THROWS_AS(build_family(0, 0), domain_error);
    CHECK_THROWS_AS(build_family(65, 1), resource_error);
    FamilyExpr rec = build_recipe(OrdinalCnf::parse("w^2 + 1"), 2);
    auto [ra, rd] = rec.recipe_rank();
    CHECK((ra == OrdinalCnf::parse("w^2 + 1")));
    CHECK(rd == 2);
    CHECK_THROWS_AS(rec.compile(), domain_error);
}

TEST_CASE("ranking sentences") {
    CHECK(alpha_ranking_sentence(comb(), 0).str() == "!Q0");
    CHECK(alpha_ranking_sentence(comb(), 1).str() == Sentence::top().str());
    CHECK_THROWS_AS(alpha_ranking_sentence(comb(), 2), domain_error);
    CHECK_THROWS_AS(alpha_ranking_sentence(comb(), -1), domain_error);
    CHECK_THROWS_AS(alpha_ranking_sentence(full(), 1), domain_error);
    Family f = *build_family(2, 2).witness;
    for (int alpha = 0; alpha <= 2; ++alpha) {
        Sentence s = alpha_ranking_sentence(f, alpha);
        RankResult r = rank(restrict(f, s));
        CHECK(!r.is_infinite);
        CHECK(r.rank == alpha);
        CHECK(r.degree == 1);
    }
}

TEST_CASE("complete decompositions") {
    Family f3 = Family::explicit_set(
        {Theory::parse("(0)"), Theory::parse("1(0)"), Theory::parse("11(0)")});
    auto dec = complete_decomposition(f3, Sentence::top());
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].str() == "!Q0");
    CHECK(dec[1].str() == "Q0 & !Q1");
    CHECK(dec[2].str() == "Q0 & Q1");
    auto one = complete_decomposition(comb(), parse_sentence("!Q0"));
    REQUIRE(one.size() == 1);
    CHECK(semantically_equal(one[0], parse_sentence("!Q0")));
    CHECK_THROWS_AS(complete_decomposition(full(), Sentence::top()), domain_error);
    CHECK_THROWS_AS(complete_decomposition(comb(), Sentence::bottom()), domain_error);
}

TEST_CASE("scheme definability of subfamilies") {
    // A relatively closed subfamily gets a defining scheme.
    Family sub = restrict(comb(), parse_sentence("Q0 & Q1"));
    Scheme w = ddef_witness(comb(), sub);
    CHECK(family_equal(restrict_scheme(comb(), w), sub));
    // The teeth are not relatively closed in the comb: the limit escapes.
    Family teeth = Family::regular(comb_a(), {Theory::parse("(1)")});
    try {
        ddef_witness(comb(), teeth);
        CHECK(false);
    } catch (const relative_closure_error& e) {
        CHECK(e.counterexample() == Theory::parse("(1)"));
    }
    CHECK_THROWS_AS(ddef_witness(comb(), Family::explicit_set({Theory::parse("01(0)")})),
                    domain_error);
}

TEST_CASE("rank-1 subfamilies inside a perfect kernel") {
    for (uint64_t n : {uint64_t(1), uint64_t(2), uint64_t(5)}) {
        RankingReport rep = build_rank1_subfamily(full(), n);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.verified);
        CHECK((rank(*rep.witness) == RankResult{false, 1, n}));
        CHECK(is_closed_family(*rep.witness));
        CHECK(family_subset(*rep.witness, full()));
        REQUIRE(rep.scheme.has_value());
        CHECK(family_equal(restrict_scheme(full(), *rep.scheme), *rep.witness));
    }
    CHECK_THROWS_AS(build_rank1_subfamily(comb(), 1), domain_error);
    CHECK_THROWS_AS(build_rank1_subfamily(full(), 0), domain_error);
}

TEST_CASE("witnesses for scheme-only definability") {
    auto [t, sch] = nonsdefinable_witness(comb());
    CHECK(t == Theory::parse("(1)"));
    CHECK(sch.kind() == Scheme::Kind::Diagram);
    CHECK(family_equal(restrict_scheme(comb(), sch), Family::explicit_set({t})));
    CHECK(is_accumulation_point(comb(), t));
    auto [tf, schf] = nonsdefinable_witness(full());
    CHECK(tf == Theory::parse("(0)"));
    CHECK_THROWS_AS(nonsdefinable_witness(Family::explicit_set({Theory::parse("(0)")})),
                    domain_error);
    CHECK_THROWS_AS(nonsdefinable_witness(Family::regular(comb_a(), {Theory::parse("(1)")})),
                    domain_error);
}
