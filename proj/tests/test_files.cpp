#include "tfam/construct.hpp"
#include "tfam/errors.hpp"
#include "tfam/familyfile.hpp"
#include "tfam/rank.hpp"

#include <cstdio>
#include <doctest.h>

using namespace tfam;

namespace {
SafetyAutomaton comb_a() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {1, -1}};
    return a;
}
} // namespace

TEST_CASE("family documents round-trip") {
    Family teeth = Family::regular(comb_a(), {Theory::parse("(1)")});
    CHECK(family_equal(parse_family_json(family_json(teeth)), teeth));
    Family e = Family::explicit_set({Theory::parse("(0)"), Theory::parse("1(10)")});
    CHECK(family_equal(parse_family_json(family_json(e)), e));
    CHECK(family_equal(parse_family_json(family_json(Family())), Family()));
}

TEST_CASE("the documented automaton schema is accepted") {
    Family f = parse_family_json(R"x({"kind":"automaton","states":2,"initial":0,)x"
                                 R"x("edges":[[0,0,1],[0,1,0],[1,0,1]],"exclude":["(1)"]})x");
    CHECK(family_equal(f, Family::regular(comb_a(), {Theory::parse("(1)")})));
    Family g = parse_family_json(R"x({"kind":"explicit","points":["(0)","11(0)"]})x");
    REQUIRE(g.is_explicit());
    CHECK(g.points().size() == 2);
    Family h = parse_family_json(
        R"x({"kind":"expr","expr":{"op":"stack","bit":1,"body":{"op":"point","theory":"(0)"}}})x");
    CHECK(family_equal(h, Family::regular(comb_a())));
}

TEST_CASE("scheme documents round-trip") {
    Scheme fs = Scheme::finite_set({parse_sentence("Q0 & !Q1"), parse_sentence("Q2")});
    Scheme fs2 = parse_scheme_json(scheme_json(fs));
    REQUIRE(fs2.kind() == Scheme::Kind::FiniteSet);
    REQUIRE(fs2.sentences().size() == 2);
    CHECK(fs2.sentences()[0].str() == fs.sentences()[0].str());
    Scheme d = Scheme::diagram(Theory::parse("1(10)"));
    Scheme d2 = parse_scheme_json(scheme_json(d));
    REQUIRE(d2.kind() == Scheme::Kind::Diagram);
    CHECK(d2.theory() == d.theory());
    Scheme t = Scheme::closed_target(comb_a());
    Scheme t2 = parse_scheme_json(scheme_json(t));
    REQUIRE(t2.kind() == Scheme::Kind::ClosedTarget);
    CHECK(same_language(t2.target(), t.target()));
}

TEST_CASE("recipe documents round-trip, transfinite included") {
    FamilyExpr e = build_recipe(OrdinalCnf::parse("w^2 + 3"), 2);
    FamilyExpr back = parse_expr_json(expr_json(e));
    CHECK(back.str() == e.str());
    CHECK((back.recipe_rank() == e.recipe_rank()));
    FamilyExpr fin = build_recipe(OrdinalCnf::finite(2), 1);
    FamilyExpr fin2 = parse_expr_json(expr_json(fin));
    CHECK(same_language(fin2.compile(), fin.compile()));
}

TEST_CASE("disk save and load") {
    Family teeth = Family::regular(comb_a(), {Theory::parse("(1)")});
    const char* path = "/tmp/tfam-test-roundtrip.json";
    save_family(teeth, path);
    Family back = load_family(path);
    std::remove(path);
    CHECK(family_equal(back, teeth));
    CHECK((rank(back) == RankResult{false, 1, 1}));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_family_json("{"), parse_error);
    CHECK_THROWS_AS(parse_family_json("[1,2]"), parse_error);
    CHECK_THROWS_AS(parse_family_json(R"x({"kind":"nope"})x"), parse_error);
    CHECK_THROWS_AS(parse_family_json(R"x({"kind":"explicit"})x"), parse_error);
    CHECK_THROWS_AS(
        parse_family_json(
            R"x({"kind":"automaton","states":1,"initial":0,"edges":[[0,0,5]]})x"),
        parse_error);
    CHECK_THROWS_AS(
        parse_family_json(R"x({"kind":"automaton","states":1,"initial":3,"edges":[]})x"),
        parse_error);
    CHECK_THROWS_AS(parse_scheme_json(R"x({"kind":"finite"})x"), parse_error);
    CHECK_THROWS_AS(parse_expr_json(R"x({"op":"mystery"})x"), parse_error);
    CHECK_THROWS_AS(load_family("/nonexistent/absent.json"), error);
}
