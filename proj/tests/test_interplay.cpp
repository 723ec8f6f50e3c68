#include <catch2/catch_amalgamated.hpp>

#include "jfa/corpus.hpp"
#include "jfa/interplay.hpp"
#include "test_util.hpp"

using namespace jfa;

namespace {

const Table2Row& row_named(const std::vector<Table2Row>& rows, const std::string& name) {
    for (const Table2Row& r : rows)
        if (r.language == name) return r;
    throw std::logic_error("no such row");
}

// regex-free predicates for the six languages, for cross-checking the
// hand-built automata
bool in_odd_blocks(const std::string& w) {
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (j < w.size() && (j - i) % 2 == 0) return false;
        i = j;
    }
    return true;
}

bool in_c_a_c_b_c(const std::string& w) {
    std::string squeezed;
    for (char c : w)
        if (c != 'c') squeezed += c;
    return squeezed == "ab";
}

}  // namespace

TEST_CASE("table-2 automata recognize their languages") {
    auto rows = table2_rows();
    test::for_all_words({'a', 'b'}, 6, [&](const std::string& w) {
        bool all = true;
        CHECK(accepts(row_named(rows, "(a+b)*").automaton, w) == all);
        CHECK(accepts(row_named(rows, "(a+b)*a").automaton, w) == (!w.empty() && w.back() == 'a'));
        CHECK(accepts(row_named(rows, "odd-blocks").automaton, w) == in_odd_blocks(w));
        bool sorted = std::is_sorted(w.begin(), w.end());
        CHECK(accepts(row_named(rows, "a*b*").automaton, w) == sorted);
        bool alternating = w.size() % 2 == 0;
        for (std::size_t i = 0; i < w.size(); ++i) alternating &= w[i] == (i % 2 ? 'b' : 'a');
        CHECK(accepts(row_named(rows, "(ab)*").automaton, w) == alternating);
    });
    test::for_all_words({'a', 'b', 'c'}, 5, [&](const std::string& w) {
        CHECK(accepts(row_named(rows, "c*ac*bc*").automaton, w) == in_c_a_c_b_c(w));
    });
}

TEST_CASE("scan_costs fixtures") {
    CostScan rev_asb = scan_costs(test::asb(), Semantics::Rev, 6);
    for (const ScanEntry& e : rev_asb.per_length) {
        CHECK(e.any_member);
        CHECK(e.max_cost == (e.length >= 2 ? 2 : 0));
    }

    CostScan rev_ab2 = scan_costs(test::ab2(), Semantics::Rev, 6);
    CHECK(rev_ab2.per_length[6].any_member);
    CHECK(rev_ab2.per_length[6].max_cost == 6);
    CHECK(rev_ab2.per_length[6].witness == "bbbaaa");
    CHECK_FALSE(rev_ab2.per_length[3].any_member);  // odd lengths leave J((ab)*)

    CostScan ham_ab2 = scan_costs(test::ab2(), Semantics::Ham, 4);
    CHECK(ham_ab2.per_length[4].max_cost == 4);
    CHECK(ham_ab2.per_length[4].witness == "baba");
}

TEST_CASE("scan_costs enforces the enumeration limit") {
    CHECK_THROWS_AS(scan_costs(test::ab2(), Semantics::Rev, 12), ResourceLimitError);
}

TEST_CASE("check_interplay: no violations on fixtures and corpus") {
    auto rows = table2_rows();
    std::vector<Nfa> automata{test::ab2(), test::asb()};
    for (const Table2Row& r : rows) automata.push_back(r.automaton);
    for (const Nfa& aut : random_nfa_corpus(6, 83)) automata.push_back(aut);
    for (const Nfa& aut : automata) {
        std::size_t max_len = aut.alphabet().size() > 2 ? 5 : 6;
        InterplayReport report = check_interplay(aut, max_len);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("table2_suite matches every expectation at max_len 6") {
    Table2Report report = table2_suite(6);
    CHECK(report.all_match);
    REQUIRE(report.cells.size() == 24);
    for (const Table2Cell& cell : report.cells) {
        CAPTURE(cell.language, to_string(cell.sem), cell.evidence_kind);
        CHECK(cell.matches);
    }

    // the (ab)* reversal family costs are exactly 2n
    for (const Table2Cell& cell : report.cells) {
        if (cell.language == "(ab)*" && cell.sem == Semantics::Rev) {
            REQUIRE(cell.evidence.size() == 3);
            for (std::size_t n = 1; n <= 3; ++n) CHECK(cell.evidence[n - 1].cost == 2 * n);
        }
        if (cell.language == "a*b*" && cell.sem == Semantics::Rev)
            CHECK(cell.evidence_kind == "universality-certified(k=2)");
    }
}

TEST_CASE("b^n a^n sits at Hamming distance 2n from a^n b^n, not n") {
    // all 2n positions differ; the suite asserts the computed value
    for (std::size_t n = 1; n <= 3; ++n) {
        std::string w = std::string(n, 'b') + std::string(n, 'a');
        std::string sorted = std::string(n, 'a') + std::string(n, 'b');
        CHECK(hamming_distance(w, sorted) == 2 * n);
        CHECK(oracle_cost(test::asb(), w, Semantics::Ham) == CostValue::finite(2 * n));
    }
}

TEST_CASE("report writers are deterministic and carry the canonical header") {
    Nfa ab2 = test::ab2();
    InterplayReport report = check_interplay(ab2, 4);
    std::string csv1 = interplay_csv("ab2", ab2, 4, report);
    std::string csv2 = interplay_csv("ab2", ab2, 4, report);
    CHECK(csv1 == csv2);
    CHECK(csv1.rfind("language,semantics,length,max_cost,witness,evidence_kind\n", 0) == 0);

    Table2Report t2 = table2_suite(6);
    CHECK(table2_csv(t2) == table2_csv(t2));
    CHECK(table2_markdown(t2).find("| language |") != std::string::npos);
}
