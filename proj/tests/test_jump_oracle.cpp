#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "jfa/jump_sequence.hpp"
#include "jfa/oracle.hpp"
#include "test_util.hpp"

using namespace jfa;

static JumpSequence js(std::initializer_list<std::uint32_t> xs) {
    JumpSequence out;
    out.positions.assign(xs);
    REQUIRE(out.valid());
    return out;
}

TEST_CASE("enumeration: counts, order, validity") {
    {
        JumpSequenceEnumerator en(0);
        auto first = en.next();
        REQUIRE(first.has_value());
        CHECK(first->positions == std::vector<std::uint32_t>{0, 1});
        CHECK_FALSE(en.next().has_value());
    }
    {
        std::vector<JumpSequence> all;
        for_each_jump_sequence(3, [&](const JumpSequence& s) { all.push_back(s); });
        REQUIRE(all.size() == 6);
        CHECK(all.front().positions == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
        CHECK(all.back().positions == std::vector<std::uint32_t>{0, 3, 2, 1, 4});
    }
    {
        std::set<std::vector<std::uint32_t>> seen;
        std::size_t count = 0;
        for_each_jump_sequence(5, [&](const JumpSequence& s) {
            CHECK(s.valid());
            seen.insert(s.positions);
            ++count;
        });
        CHECK(count == 120);
        CHECK(seen.size() == 120);
    }
    CHECK_THROWS_AS(JumpSequenceEnumerator(10), ResourceLimitError);
    CHECK_NOTHROW(JumpSequenceEnumerator(10, 10));
}

TEST_CASE("apply_jump") {
    CHECK(apply_jump("ababbaab", js({0, 1, 2, 3, 4, 6, 5, 7, 8, 9})) == "abababab");
    CHECK(apply_jump("ababbaab", JumpSequence::identity(8)) == "ababbaab");
    CHECK(apply_jump("abcd", js({0, 3, 4, 2, 1, 5})) == "cdba");
    CHECK(apply_jump("", js({0, 1})) == "");
    CHECK_THROWS_AS(apply_jump("abc", js({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("per-sequence costs and turning indices") {
    JumpSequence ex11 = js({0, 1, 2, 3, 4, 6, 5, 7, 8, 9});
    CHECK(abs_cost(ex11) == 2);
    CHECK(abs_cost(JumpSequence::identity(5)) == 0);
    CHECK(abs_cost(js({0, 2, 1, 3})) == 2);

    CHECK(turning_indices(js({0, 2, 3, 5, 7, 4, 1, 6, 8})) == std::vector<std::uint32_t>{4, 6});
    CHECK(turning_indices(JumpSequence::identity(4)).empty());
    CHECK(turning_indices(js({0, 2, 1, 3})) == std::vector<std::uint32_t>{1, 2});

    CHECK(rev_cost(ex11) == 2);
    CHECK(rev_cost(JumpSequence::identity(7)) == 0);
    CHECK(rev_cost(js({0, 2, 1, 3})) == 2);

    CHECK(max_cost(ex11) == 1);
    CHECK(max_cost(JumpSequence::identity(6)) == 0);
    CHECK(max_cost(js({0, 3, 1, 2, 4})) == 2);
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance("ababbaab", "abababab") == 2);
    CHECK(hamming_distance("ababbaba", "abababab") == 4);
    CHECK(hamming_distance("cdba", "cdba") == 0);
    CHECK(hamming_distance("bbaa", "abab") == 2);
    CHECK_THROWS_AS(hamming_distance("ab", "abc"), std::invalid_argument);
    CHECK_THROWS_AS(hamming_distance("aa", "ab"), std::invalid_argument);
}

TEST_CASE("sweep decomposition") {
    auto sw = sweeps(js({0, 1, 2, 3, 4, 6, 5, 7, 8, 9}));
    REQUIRE(sw.size() == 3);
    CHECK(sw[0] == Sweep{Sweep::Kind::Right, 0, 5});
    CHECK(sw[1] == Sweep{Sweep::Kind::Left, 6, 6});
    CHECK(sw[2] == Sweep{Sweep::Kind::Right, 7, 9});

    auto one = sweeps(JumpSequence::identity(4));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Sweep{Sweep::Kind::Right, 0, 5});

    auto sec5 = sweeps(js({0, 2, 3, 5, 7, 4, 1, 6, 8}));
    REQUIRE(sec5.size() == 3);
    CHECK(sec5[0] == Sweep{Sweep::Kind::Right, 0, 4});  // entries 0,2,3,5,7
    CHECK(sec5[1] == Sweep{Sweep::Kind::Left, 5, 6});   // entries 4,1
    CHECK(sec5[2] == Sweep{Sweep::Kind::Right, 7, 8});  // entries 6,8
}

TEST_CASE("crossings") {
    for (std::uint32_t m = 0; m <= 4; ++m) CHECK(crossings(JumpSequence::identity(4), m) == 1);
    CHECK(crossings(js({0, 1, 2, 3, 4, 6, 5, 7, 8, 9}), 5) == 3);
    CHECK_THROWS_AS(crossings(js({0, 2, 1, 3}), 3), std::invalid_argument);
}

TEST_CASE("exhaustive jump-sequence invariants up to n=6") {
    for (std::size_t n = 0; n <= 6; ++n) {
        for_each_jump_sequence(n, [&](const JumpSequence& s) {
            std::uint64_t abs = abs_cost(s);
            std::uint64_t max = max_cost(s);
            auto tp = turning_indices(s);

            CHECK(abs % 2 == 0);
            CHECK(tp.size() % 2 == 0);
            for (std::size_t j = 1; j <= n; ++j) {
                std::int64_t gap =
                    static_cast<std::int64_t>(s.positions[j]) - static_cast<std::int64_t>(j);
                CHECK(abs >= static_cast<std::uint64_t>(gap < 0 ? -gap : gap));
            }
            CHECK(max <= abs);
            for (std::uint32_t m = 0; m <= n; ++m) {
                std::uint64_t x = crossings(s, m);
                CHECK(x % 2 == 1);
                CHECK(x <= 2 * max + 1);
            }

            // sweeps tile the sequence, are monotone in the right direction,
            // and at most 2*max+2 of their ranges cover any tape index
            auto sw = sweeps(s);
            std::uint32_t expect_begin = 0;
            for (const Sweep& b : sw) {
                CHECK(b.begin == expect_begin);
                expect_begin = b.end + 1;
                for (std::uint32_t i = b.begin; i < b.end; ++i) {
                    bool increasing = s.positions[i] < s.positions[i + 1];
                    CHECK(increasing == (b.kind == Sweep::Kind::Right));
                }
            }
            CHECK(expect_begin == s.positions.size());
            CHECK(sw.size() == tp.size() + 1);
            for (std::uint32_t i = 1; i <= n; ++i) {
                std::size_t covering = 0;
                for (const Sweep& b : sw)
                    if (detail::sweep_range(s, b).contains(i)) ++covering;
                CHECK(covering <= 2 * max + 2);
            }
        });
    }
}

TEST_CASE("oracle_cost on the worked example") {
    Nfa ab2 = test::ab2();
    const std::string w1 = "ababbaab", w2 = "ababbaba";
    CHECK(oracle_cost(ab2, w1, Semantics::Abs) == CostValue::finite(2));
    CHECK(oracle_cost(ab2, w2, Semantics::Abs) == CostValue::finite(4));
    CHECK(oracle_cost(ab2, w1, Semantics::Rev) == CostValue::finite(2));
    CHECK(oracle_cost(ab2, w2, Semantics::Rev) == CostValue::finite(2));
    CHECK(oracle_cost(ab2, w1, Semantics::Ham) == CostValue::finite(2));
    CHECK(oracle_cost(ab2, w2, Semantics::Ham) == CostValue::finite(4));
    CHECK(oracle_cost(ab2, w1, Semantics::Max) == CostValue::finite(1));
    CHECK(oracle_cost(ab2, w2, Semantics::Max) == CostValue::finite(2));

    for (Semantics sem : kAllSemantics) {
        CHECK(oracle_cost(ab2, "abab", sem) == CostValue::finite(0));
        CHECK(oracle_cost(ab2, "aab", sem) == CostValue::infinite());
    }
    CHECK_THROWS_AS(oracle_cost(ab2, "ababababab", Semantics::Abs), ResourceLimitError);
}

TEST_CASE("oracle_cost on the empty word") {
    Nfa ab2 = test::ab2();  // accepts the empty word
    Nfa empty = make_nfa({'a'}, 1, {0}, {}, {});
    for (Semantics sem : kAllSemantics) {
        CHECK(oracle_cost(ab2, "", sem) == CostValue::finite(0));
        CHECK(oracle_cost(empty, "", sem) == CostValue::infinite());
    }
}

TEST_CASE("oracle upper bounds, zero law, finiteness law on fixtures") {
    for (const Nfa& aut : {test::ab2(), test::asb()}) {
        test::for_all_words(aut.alphabet(), 5, [&](const std::string& w) {
            std::size_t n = w.size();
            for (Semantics sem : kAllSemantics) {
                CostValue c = oracle_cost(aut, w, sem);
                if (c.is_finite()) {
                    std::uint64_t bound = sem == Semantics::Abs ? n * n : n;
                    CHECK(c.value() <= bound);
                }
                CHECK((c == CostValue::finite(0)) == accepts(aut, w));
                CHECK(c.is_finite() == test::brute_jumping_member(aut, w));
            }
        });
    }
}
