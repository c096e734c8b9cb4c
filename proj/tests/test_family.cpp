#include "tfam/errors.hpp"
#include "tfam/family.hpp"

#include <doctest.h>

using namespace tfam;

namespace {
SafetyAutomaton comb() {
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 0}, {1, -1}};
    return a;
}
Family teeth() { return Family::regular(comb(), {Theory::parse("(1)")}); }
} // namespace

TEST_CASE("explicit families sort and answer membership") {
    Family f = Family::explicit_set(
        {Theory::parse("1(0)"), Theory::parse("(0)"), Theory::parse("10(10)")});
    REQUIRE(f.is_explicit());
    REQUIRE(f.points().size() == 3);
    CHECK(f.points()[0] == Theory::parse("(0)"));
    CHECK(f.points()[1] == Theory::parse("1(0)"));
    CHECK(f.points()[2] == Theory::parse("(10)"));
    CHECK(member(f, Theory::parse("(10)")));
    CHECK(!member(f, Theory::parse("(01)")));
}

TEST_CASE("explicit families: equal spellings collapse") {
    Family f = Family::explicit_set(
        {Theory::parse("(01)"), Theory::parse("0(10)"), Theory::parse("1(0)")});
    REQUIRE(f.is_explicit());
    REQUIRE(f.points().size() == 2);
    CHECK(f.points()[0] == Theory::parse("(01)"));
    CHECK(f.points()[1] == Theory::parse("1(0)"));
    CHECK(Family().is_empty());
    CHECK(Family().is_finite());
}

TEST_CASE("regular families with exclusions") {
    Family t = teeth();
    CHECK(!t.is_explicit());
    CHECK(member(t, Theory::parse("(0)")));
    CHECK(member(t, Theory::parse("111(0)")));
    CHECK(!member(t, Theory::parse("(1)")));
    CHECK(!member(t, Theory::parse("01(0)")));
    CHECK(!t.is_empty());
    CHECK(!t.is_finite());
    Enumeration en = enumerate_members(t, 3);
    CHECK(en.points.size() == 3);
    for (const Theory& p : en.points) CHECK(member(t, p));
}

TEST_CASE("finite carriers normalize to explicit form") {
    // The language {0^w, 10^w} is finite, so the family becomes explicit.
    SafetyAutomaton a;
    a.initial = 0;
    a.next = {{1, 2}, {1, -1}, {1, -1}};
    Family f = Family::regular(a, {Theory::parse("1(0)")});
    CHECK(f.is_explicit());
    REQUIRE(f.points().size() == 1);
    CHECK(f.points()[0] == Theory::parse("(0)"));
}

TEST_CASE("closure adds exactly the accumulation points") {
    Family t = teeth();
    CHECK(!is_closed_family(t));
    CHECK(is_accumulation_point(t, Theory::parse("(1)")));
    CHECK(!is_accumulation_point(t, Theory::parse("1(0)")));
    CHECK(!is_accumulation_point(t, Theory::parse("(0)")));
    Family ct = closure(t);
    CHECK(is_closed_family(ct));
    CHECK(member(ct, Theory::parse("(1)")));
    CHECK(family_equal(ct, Family::regular(comb())));
    // Excluding an isolated point is permanent: closure does not re-admit it.
    Family no_tooth = Family::regular(comb(), {Theory::parse("11(0)")});
    CHECK(is_closed_family(no_tooth));
    CHECK(!member(closure(no_tooth), Theory::parse("11(0)")));
    // Explicit families are closed.
    Family e = Family::explicit_set({Theory::parse("(0)"), Theory::parse("(1)")});
    CHECK(is_closed_family(e));
    CHECK(family_equal(closure(e), e));
    CHECK(closure(Family()).is_empty());
}

TEST_CASE("set operations") {
    Family t = teeth();
    Family e = Family::explicit_set({Theory::parse("(1)"), Theory::parse("01(0)")});
    Family u = family_union(t, e);
    CHECK(member(u, Theory::parse("(1)")));
    CHECK(member(u, Theory::parse("01(0)")));
    CHECK(member(u, Theory::parse("1(0)")));
    CHECK(family_subset(t, u));
    CHECK(family_subset(e, u));
    CHECK(!family_subset(u, t));
    Family i = family_intersect(u, Family::regular(comb()));
    CHECK(member(i, Theory::parse("(1)")));
    CHECK(!member(i, Theory::parse("01(0)")));
    CHECK(family_equal(family_intersect(t, e), Family()));
    CHECK(family_equal(u, family_union(e, t)));
}

TEST_CASE("restriction by sentences and schemes") {
    Family cmb = Family::regular(comb());
    Family r = restrict(cmb, parse_sentence("!Q0"));
    REQUIRE(r.is_explicit());
    REQUIRE(r.points().size() == 1);
    CHECK(r.points()[0] == Theory::parse("(0)"));
    CHECK(family_equal(restrict(cmb, Sentence::top()), cmb));
    CHECK(restrict(cmb, Sentence::bottom()).is_empty());
    CHECK(family_equal(restrict_scheme(cmb, Scheme::finite_set({parse_sentence("Q0"),
                                                                parse_sentence("Q1")})),
                       restrict(cmb, parse_sentence("Q0 & Q1"))));
    Family d = restrict_scheme(cmb, Scheme::diagram(Theory::parse("(1)")));
    REQUIRE(d.is_explicit());
    REQUIRE(d.points().size() == 1);
    CHECK(d.points()[0] == Theory::parse("(1)"));
    CHECK(restrict_scheme(cmb, Scheme::diagram(Theory::parse("(01)"))).is_empty());
    CHECK(family_equal(restrict_scheme(cmb, Scheme::closed_target(full_space_automaton())), cmb));
}

TEST_CASE("consistency, local consistency, and certificates") {
    Family t = teeth();
    Scheme limit = Scheme::diagram(Theory::parse("(1)"));
    CHECK(locally_consistent(t, limit));
    CHECK(!consistent(t, limit));
    CHECK(!refutation_certificate(t, limit).has_value());
    // On the closed comb the same scheme is consistent outright.
    Family cmb = Family::regular(comb());
    CHECK(consistent(cmb, limit));
    CHECK(locally_consistent(cmb, limit));
    // A finitely refutable scheme yields a certificate.
    Scheme bad = Scheme::finite_set({parse_sentence("!Q0 & Q1")});
    auto cert = refutation_certificate(cmb, bad);
    REQUIRE(cert.has_value());
    CHECK(restrict_scheme(cmb, Scheme::finite_set(*cert)).is_empty());
    CHECK(!locally_consistent(cmb, bad));
    CHECK(!consistent(cmb, bad));
}

TEST_CASE("least generating sets") {
    Family cmb = Family::regular(comb());
    auto lgs = least_generating_set(cmb);
    REQUIRE(lgs.has_value());
    CHECK(family_subset(*lgs, cmb));
    CHECK(family_equal(closure(*lgs), cmb));
    CHECK(family_equal(*lgs, teeth())); // the isolated points: exactly the teeth
    CHECK(!least_generating_set(Family::regular(full_space_automaton())).has_value());
    CHECK_THROWS_AS(least_generating_set(teeth()), domain_error);
    Family e = Family::explicit_set({Theory::parse("(0)")});
    auto le = least_generating_set(e);
    REQUIRE(le.has_value());
    CHECK(family_equal(*le, e));
}

TEST_CASE("family text rendering mentions structure") {
    CHECK(!teeth().str().empty());
    CHECK(!Family().str().empty());
    CHECK(!Scheme::diagram(Theory::parse("(1)")).str().empty());
}
