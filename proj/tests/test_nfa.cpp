#include <catch2/catch_amalgamated.hpp>

#include "jfa/nfa.hpp"
#include "test_util.hpp"

using namespace jfa;

static const char* kAb2Text =
    "alphabet a b\n"
    "state q0 initial accepting\n"
    "state q1\n"
    "trans q0 a q1\n"
    "trans q1 b q0";

TEST_CASE("parse builds the (ab)* automaton") {
    Nfa aut = parse_automaton(kAb2Text);
    CHECK(aut.state_count() == 2);
    CHECK(aut.alphabet() == std::vector<Symbol>{'a', 'b'});
    CHECK(aut.initial() == std::set<StateId>{0});
    CHECK(aut.accepting() == std::set<StateId>{0});
    CHECK(aut.transitions().size() == 2);
    CHECK(accepts(aut, "abab"));
    CHECK_FALSE(accepts(aut, "ba"));
    CHECK(accepts(aut, ""));
}

TEST_CASE("parse accepts comments, blank lines, and free line order") {
    Nfa aut = parse_automaton(
        "# a comment\n"
        "trans q1 b q0\n"
        "state q0 accepting initial\n"
        "\n"
        "alphabet a b\n"
        "state q1\n"
        "trans q0 a q1\n");
    CHECK(accepts(aut, "abab"));
}

TEST_CASE("parse: automaton with no accepting states has the empty language") {
    Nfa aut = parse_automaton("alphabet a\nstate q0 initial\n");
    CHECK(aut.state_count() == 1);
    CHECK(aut.accepting().empty());
    CHECK_FALSE(accepts(aut, ""));
    CHECK_FALSE(accepts(aut, "a"));
}

TEST_CASE("parse error cases") {
    CHECK_THROWS_AS(parse_automaton("alphabet a\ntrans q0 a q1\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("alphabet a\nstate q0 initial\ntrans q0 b q0\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("alphabet a\nstate q0\n"), ParseError);  // no initial
    CHECK_THROWS_AS(parse_automaton("state q0 initial\n"), ParseError);      // no alphabet
    CHECK_THROWS_AS(parse_automaton("alphabet a\nalphabet b\nstate q0 initial\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("alphabet ab\nstate q0 initial\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("alphabet a a\nstate q0 initial\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("alphabet a\nstate q0 initial\nstate q0\n"), ParseError);
    CHECK_THROWS_AS(parse_automaton("alphabet a\nstate q0 initial bogus\n"), ParseError);
    try {
        parse_automaton("alphabet a\nstate q0 initial\ntrans q0 b q0\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("serialize then parse is structurally the identity") {
    Nfa aut = parse_automaton(kAb2Text);
    std::string text = serialize_automaton(aut);
    Nfa again = parse_automaton(text);
    CHECK(again.state_names() == aut.state_names());
    CHECK(again.alphabet() == aut.alphabet());
    CHECK(again.initial() == aut.initial());
    CHECK(again.accepting() == aut.accepting());
    CHECK(again.transitions() == aut.transitions());
}

TEST_CASE("serialize is deterministic and omits trans lines when empty") {
    Nfa aut = parse_automaton(kAb2Text);
    CHECK(serialize_automaton(aut) == serialize_automaton(aut));

    Nfa empty = parse_automaton("alphabet a\nstate q0 initial\n");
    CHECK(serialize_automaton(empty).find("trans") == std::string::npos);
}

TEST_CASE("accepts rejects symbols outside the alphabet") {
    Nfa aut = parse_automaton(kAb2Text);
    CHECK_THROWS_AS(accepts(aut, "abc"), std::invalid_argument);
}

TEST_CASE("accepts agrees with explicit run search on fixtures") {
    for (const Nfa& aut : {test::ab2(), test::asb()}) {
        test::for_all_words(aut.alphabet(), 6, [&](const std::string& w) {
            CHECK(accepts(aut, w) == test::brute_accepts(aut, w));
        });
    }
}
