#include "tfam/clopen.hpp"
#include "tfam/errors.hpp"
#include "tfam/sentence.hpp"

#include <doctest.h>

using namespace tfam;

TEST_CASE("grammar: precedence and associativity") {
    CHECK(parse_sentence("Q0 & Q1 | Q2").str() == parse_sentence("(Q0 & Q1) | Q2").str());
    CHECK(parse_sentence("!Q0 & Q1").str() == parse_sentence("(!Q0) & Q1").str());
    CHECK(parse_sentence("Q0 | Q1 -> Q2").str() == parse_sentence("(Q0 | Q1) -> Q2").str());
    CHECK(parse_sentence("Q0 -> Q1 -> Q2").str() == parse_sentence("Q0 -> (Q1 -> Q2)").str());
    CHECK(parse_sentence("Q0 <-> Q1 <-> Q2").str() == parse_sentence("(Q0 <-> Q1) <-> Q2").str());
    CHECK(parse_sentence("Q0 -> Q1 <-> Q2").str() == parse_sentence("(Q0 -> Q1) <-> Q2").str());
    CHECK(parse_sentence("  T &\tF ").str() == parse_sentence("T & F").str());
}

TEST_CASE("grammar: errors and atom bounds") {
    CHECK_THROWS_AS(parse_sentence(""), parse_error);
    CHECK_THROWS_AS(parse_sentence("Q0 &"), parse_error);
    CHECK_THROWS_AS(parse_sentence("(Q0"), parse_error);
    CHECK_THROWS_AS(parse_sentence("Q0 Q1"), parse_error);
    CHECK_THROWS_AS(parse_sentence("Q"), parse_error);
    CHECK_THROWS_AS(parse_sentence("Q1000001"), parse_error);
    CHECK_NOTHROW(parse_sentence("Q1000000"));
    try {
        parse_sentence("Q0 @ Q1");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.pos == 3);
    }
}

TEST_CASE("evaluation reads theory bits") {
    Theory tooth = Theory::parse("1(0)");
    CHECK(parse_sentence("Q0").eval(tooth));
    CHECK(!parse_sentence("Q1").eval(tooth));
    CHECK(parse_sentence("Q0 & !Q1").eval(tooth));
    CHECK(parse_sentence("Q1 -> Q0").eval(tooth));
    CHECK(parse_sentence("T").eval(tooth));
    CHECK(!parse_sentence("F").eval(tooth));
    CHECK(parse_sentence("Q30").eval(Theory::parse("(1)")));
    std::vector<uint8_t> w{1, 0, 1};
    CHECK(parse_sentence("Q0 & !Q1 & Q2").eval_word(w));
    CHECK(Sentence::atom(7).depth() == 8);
    CHECK(Sentence::top().depth() == 0);
}

TEST_CASE("clopen semantics matches truth-table semantics") {
    Sentence s = parse_sentence("Q0 <-> Q1");
    Clopen c = to_clopen(s);
    CHECK(c.contains(Theory::parse("(0)")));
    CHECK(c.contains(Theory::parse("(1)")));
    CHECK(!c.contains(Theory::parse("1(0)")));
    CHECK(to_clopen(parse_sentence("Q0 & !Q0")) == to_clopen(Sentence::bottom()));
    CHECK(to_clopen(parse_sentence("Q0 | !Q0")) == to_clopen(Sentence::top()));
    CHECK(semantically_equal(parse_sentence("!(Q0 & Q1)"), parse_sentence("!Q0 | !Q1")));
    CHECK(!semantically_equal(parse_sentence("Q0"), parse_sentence("Q1")));
    Clopen back = to_clopen(synthesize_sentence(c));
    CHECK(back == c);
}

TEST_CASE("clopen algebra") {
    Clopen a = to_clopen(parse_sentence("Q0"));
    Clopen b = to_clopen(parse_sentence("Q1"));
    CHECK(clopen_intersect(a, b) == to_clopen(parse_sentence("Q0 & Q1")));
    CHECK(clopen_union(a, b) == to_clopen(parse_sentence("Q0 | Q1")));
    CHECK(clopen_complement(a) == to_clopen(parse_sentence("!Q0")));
    CHECK(clopen_cylinder({1, 0}) == to_clopen(parse_sentence("Q0 & !Q1")));
    CHECK(cylinder_sentence({1, 0}).eval(Theory::parse("10(1)")));
    CHECK(!cylinder_sentence({1, 0}).eval(Theory::parse("11(1)")));
    CHECK(cylinder_sentence({}).str() == Sentence::top().str());
}

TEST_CASE("materialization refuses atoms beyond the depth cap") {
    CHECK_NOTHROW(to_clopen(Sentence::atom(kMaxClopenDepth - 1)));
    CHECK_THROWS_AS(to_clopen(Sentence::atom(kMaxClopenDepth)), resource_error);
}
