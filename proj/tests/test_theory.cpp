#include "tfam/errors.hpp"
#include "tfam/theory.hpp"

#include <doctest.h>

using namespace tfam;

TEST_CASE("theory literals canonicalize") {
    CHECK(Theory::parse("1(1)").str() == "(1)");
    CHECK(Theory::parse("111(1)").str() == "(1)");
    CHECK(Theory::parse("10(10)").str() == "(10)");
    CHECK(Theory::parse("11(01)").str() == "1(10)");
    CHECK(Theory::parse("(0101)").str() == "(01)");
    CHECK(Theory::parse("0(10)") == Theory::parse("(01)"));
    CHECK(Theory::parse("110(0)").str() == "11(0)");
    CHECK(Theory(std::vector<uint8_t>{1, 1}, std::vector<uint8_t>{1}).str() == "(1)");
}

TEST_CASE("bits and prefix words follow the denoted sequence") {
    Theory t = Theory::parse("01(10)");
    int expect[] = {0, 1, 1, 0, 1, 0, 1, 0};
    for (size_t i = 0; i < 8; ++i) CHECK(t.bit(i) == expect[i]);
    CHECK((t.prefix_word(5) == std::vector<uint8_t>{0, 1, 1, 0, 1}));
    CHECK(t.prefix_word(0).empty());
    CHECK(is_prefix_of({0, 1, 1}, t));
    CHECK(!is_prefix_of({0, 1, 0}, t));
    CHECK(is_prefix_of({}, t));
}

TEST_CASE("order is lexicographic on sequences") {
    CHECK(Theory::parse("(0)") < Theory::parse("(1)"));
    CHECK(Theory::parse("0(1)") < Theory::parse("(1)"));
    CHECK(Theory::parse("(01)") < Theory::parse("01(10)"));
    CHECK(!(Theory::parse("(1)") < Theory::parse("(1)")));
    CHECK(first_difference(Theory::parse("(01)"), Theory::parse("01(10)")) == 2);
}

TEST_CASE("malformed literals are rejected with positions") {
    CHECK_THROWS_AS(Theory::parse("()"), parse_error);
    CHECK_THROWS_AS(Theory::parse(""), parse_error);
    CHECK_THROWS_AS(Theory::parse("1"), parse_error);
    CHECK_THROWS_AS(Theory::parse("1(0"), parse_error);
    CHECK_THROWS_AS(Theory::parse("1(0)x"), parse_error);
    CHECK_THROWS_AS(Theory::parse("2(0)"), parse_error);
}

TEST_CASE("word helpers round-trip") {
    std::vector<uint8_t> w{1, 0, 1, 1};
    CHECK(word_str(w) == "1011");
    CHECK(parse_word("1011") == w);
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("10x"), parse_error);
}
