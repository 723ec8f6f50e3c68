#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jfa/boundedness.hpp"
#include "jfa/constructions.hpp"
#include "jfa/oracle.hpp"
#include "jfa/parikh.hpp"

namespace jfa {

struct InterplayOptions {
    std::size_t enumeration_limit = kDefaultEnumerationLimit;
    std::size_t member_budget = 20000;   // construction-path membership width before oracle fallback
    std::size_t univ_macro_budget = 4000;  // optional universality certification attempts
};

// Per word length: maximum finite cost over jumping-language members, with
// the first witness (length-then-lex order) attaining it.
struct ScanEntry {
    std::size_t length = 0;
    bool any_member = false;
    std::uint64_t max_cost = 0;
    std::string witness;
};

struct CostScan {
    Semantics sem = Semantics::Abs;
    std::vector<ScanEntry> per_length;
};

namespace detail {

// cost_via_construction, falling back to the oracle when the membership
// budget trips.
inline CostValue scan_cost(const Nfa& aut, const std::string& word, Semantics sem,
                           const InterplayOptions& opts) {
    try {
        return cost_via_construction(aut, word, sem, opts.member_budget);
    } catch (const ResourceLimitError&) {
        return oracle_cost(aut, word, sem, opts.enumeration_limit);
    }
}

template <typename Fn>
void for_each_word(const std::vector<Symbol>& sigma, std::size_t length, Fn&& fn) {
    std::string word(length, sigma.empty() ? 'a' : sigma[0]);
    std::vector<std::size_t> digits(length, 0);
    if (sigma.empty() && length > 0) return;
    while (true) {
        fn(const_cast<const std::string&>(word));
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (++digits[i] < sigma.size()) {
                word[i] = sigma[digits[i]];
                break;
            }
            digits[i] = 0;
            word[i] = sigma[0];
            if (i == 0) return;
        }
        if (length == 0) return;
    }
}

}  // namespace detail

inline CostScan scan_costs(const Nfa& aut, Semantics sem, std::size_t max_len,
                           const InterplayOptions& opts = {}) {
    if (max_len > opts.enumeration_limit)
        throw ResourceLimitError("scan_costs: max_len exceeds the enumeration limit");
    CostScan scan;
    scan.sem = sem;
    for (std::size_t len = 0; len <= max_len; ++len) {
        ScanEntry entry;
        entry.length = len;
        detail::for_each_word(aut.alphabet(), len, [&](const std::string& w) {
            if (!jumping_member(aut, w)) return;
            CostValue c = detail::scan_cost(aut, w, sem, opts);
            if (!c.is_finite()) throw std::logic_error("scan_costs: infinite cost for a member");
            if (!entry.any_member || c.value() > entry.max_cost) {
                entry.any_member = true;
                entry.max_cost = c.value();
                entry.witness = w;
            }
        });
        if (entry.any_member) {
            // witnesses are re-verified through the independent oracle path
            CostValue check = oracle_cost(aut, entry.witness, sem, opts.enumeration_limit);
            if (!check.is_finite() || check.value() != entry.max_cost)
                throw std::logic_error("scan_costs: witness cost failed re-verification");
        }
        scan.per_length.push_back(std::move(entry));
    }
    return scan;
}

// ---- per-word interplay inequalities --------------------------------------

struct InterplayViolation {
    std::string word;
    std::string inequality;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
};

struct InterplayReport {
    std::size_t words_checked = 0;
    std::vector<InterplayViolation> violations;
};

// For every jumping-language member w up to max_len:
//   max(w) <= abs(w)
//   ham(w) <= (2 abs(w) + 1)(abs(w) + 1)
//   rev(w) <= 3 ham(w)
//   rev(w) <= (|Sigma| - 1)(2 m + 1) + 1,  m = max cost of the sorted word
inline InterplayReport check_interplay(const Nfa& aut, std::size_t max_len,
                                       const InterplayOptions& opts = {}) {
    if (max_len > opts.enumeration_limit)
        throw ResourceLimitError("check_interplay: max_len exceeds the enumeration limit");
    InterplayReport report;
    auto sorted_by_alphabet = [&](const std::string& w) {
        std::string out;
        for (Symbol a : aut.alphabet())
            for (char c : w)
                if (c == a) out += c;
        return out;
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
        detail::for_each_word(aut.alphabet(), len, [&](const std::string& w) {
            if (!jumping_member(aut, w)) return;
            ++report.words_checked;
            std::uint64_t abs = oracle_cost(aut, w, Semantics::Abs, opts.enumeration_limit).value();
            std::uint64_t ham = oracle_cost(aut, w, Semantics::Ham, opts.enumeration_limit).value();
            std::uint64_t rev = oracle_cost(aut, w, Semantics::Rev, opts.enumeration_limit).value();
            std::uint64_t max = oracle_cost(aut, w, Semantics::Max, opts.enumeration_limit).value();
            std::uint64_t m =
                oracle_cost(aut, sorted_by_alphabet(w), Semantics::Max, opts.enumeration_limit)
                    .value();
            std::uint64_t sigma = aut.alphabet().size();
            auto require = [&](std::uint64_t lhs, std::uint64_t rhs, const char* name) {
                if (lhs > rhs) report.violations.push_back({w, name, lhs, rhs});
            };
            require(max, abs, "max<=abs");
            require(ham, (2 * abs + 1) * (abs + 1), "ham<=(2abs+1)(abs+1)");
            require(rev, 3 * ham, "rev<=3ham");
            require(rev, (sigma - 1) * (2 * m + 1) + 1, "rev<=(|S|-1)(2max(sorted)+1)+1");
        });
    }
    return report;
}

// ---- the six Table-2 separation languages ---------------------------------

struct Table2Family {
    std::string description;              // e.g. "b^n a^n"
    std::function<std::string(std::size_t)> word;  // n >= 1
};

struct Table2CellSpec {
    bool bounded;
    std::uint64_t ceiling = 0;                    // bounded cells
    std::optional<std::uint64_t> certify_k;       // try univ_bounded at this k
    std::optional<Table2Family> family;           // unbounded cells
};

struct Table2Row {
    std::string language;
    Nfa automaton;
    std::array<Table2CellSpec, 4> cells;  // indexed by Semantics order abs, rev, ham, max
};

namespace detail {

inline std::string repeat(const std::string& unit, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out += unit;
    return out;
}

}  // namespace detail

inline std::vector<Table2Row> table2_rows() {
    using detail::repeat;
    std::vector<Table2Row> rows;
    auto cell_b = [](std::uint64_t ceiling, std::optional<std::uint64_t> certify = std::nullopt) {
        return Table2CellSpec{true, ceiling, certify, std::nullopt};
    };
    auto cell_u = [](std::string desc, std::function<std::string(std::size_t)> f) {
        return Table2CellSpec{false, 0, std::nullopt, Table2Family{std::move(desc), std::move(f)}};
    };

    // (a+b)*: bounded everywhere at 0
    rows.push_back({"(a+b)*",
                    make_nfa({'a', 'b'}, 1, {0}, {0}, {{0, 'a', 0}, {0, 'b', 0}}),
                    {cell_b(0, 0), cell_b(0, 0), cell_b(0, 0), cell_b(0, 0)}});

    // c*ac*bc*: abs unbounded, rest bounded
    rows.push_back(
        {"c*ac*bc*",
         make_nfa({'a', 'b', 'c'}, 3, {0}, {2},
                  {{0, 'c', 0}, {0, 'a', 1}, {1, 'c', 1}, {1, 'b', 2}, {2, 'c', 2}}),
         {cell_u("b c^n a", [](std::size_t n) { return "b" + repeat("c", n - 1) + "a"; }),
          cell_b(6),  // rev <= 3*ham
          cell_b(2),
          cell_b(2)}});

    // (a+b)*a: abs and max unbounded
    rows.push_back(
        {"(a+b)*a",
         make_nfa({'a', 'b'}, 2, {0}, {1}, {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}}),
         {cell_u("a b^n", [](std::size_t n) { return "a" + repeat("b", n); }),
          cell_b(2),
          cell_b(2),
          cell_u("a b^n", [](std::size_t n) { return "a" + repeat("b", n); })}});

    // odd-block language: every maximal block odd except maybe the last
    rows.push_back(
        {"odd-blocks",
         make_nfa({'a', 'b'}, 5, {0}, {0, 1, 2, 3, 4},
                  {{0, 'a', 1},
                   {0, 'b', 3},
                   {1, 'a', 2},
                   {1, 'b', 3},
                   {2, 'a', 1},
                   {3, 'b', 4},
                   {3, 'a', 1},
                   {4, 'b', 3}}),
         {cell_u("aa(ba)^n", [](std::size_t n) { return "aa" + repeat("ba", n); }),
          cell_b(6),  // (|Sigma|-1)(2*2+1)+1 from the max ceiling
          cell_u("(aabb)^n", [](std::size_t n) { return repeat("aabb", n); }),
          cell_b(2)}});

    // a*b*: rev bounded by 2, rest unbounded
    rows.push_back(
        {"a*b*",
         make_nfa({'a', 'b'}, 2, {0}, {0, 1}, {{0, 'a', 0}, {0, 'b', 1}, {1, 'b', 1}}),
         {cell_u("b^n a^n", [](std::size_t n) { return repeat("b", n) + repeat("a", n); }),
          cell_b(2, 2),
          cell_u("b^n a^n", [](std::size_t n) { return repeat("b", n) + repeat("a", n); }),
          cell_u("b^n a^n", [](std::size_t n) { return repeat("b", n) + repeat("a", n); })}});

    // (ab)*: unbounded everywhere
    rows.push_back(
        {"(ab)*",
         make_nfa({'a', 'b'}, 2, {0}, {0}, {{0, 'a', 1}, {1, 'b', 0}}),
         {cell_u("b^n a^n", [](std::size_t n) { return repeat("b", n) + repeat("a", n); }),
          cell_u("b^n a^n", [](std::size_t n) { return repeat("b", n) + repeat("a", n); }),
          cell_u("(ba)^n", [](std::size_t n) { return repeat("ba", n); }),
          cell_u("b^n a^n", [](std::size_t n) { return repeat("b", n) + repeat("a", n); })}});

    return rows;
}

struct Table2EvidenceRow {
    std::size_t length = 0;
    std::uint64_t cost = 0;
    std::string witness;
};

struct Table2Cell {
    std::string language;
    Semantics sem = Semantics::Abs;
    bool expected_bounded = true;
    bool matches = false;
    std::string evidence_kind;
    std::vector<Table2EvidenceRow> evidence;
};

struct Table2Report {
    bool all_match = true;
    std::vector<Table2Cell> cells;
};

// Classifies all 24 (language, semantics) cells and compares with Table 2.
// Bounded evidence: a universality certificate where feasible, otherwise the
// scan maximum staying under the row's certified ceiling. Unbounded
// evidence: strictly growing positive costs along the row's witness family,
// over every family point that fits within max_len; the evidence kind
// records how many points that is.
inline Table2Report table2_suite(std::size_t max_len, const InterplayOptions& opts = {}) {
    if (max_len < 6) throw std::invalid_argument("table2_suite: max_len must be at least 6");
    Table2Report report;
    const Semantics order[4] = {Semantics::Abs, Semantics::Rev, Semantics::Ham, Semantics::Max};
    for (const Table2Row& row : table2_rows()) {
        for (std::size_t si = 0; si < 4; ++si) {
            const Table2CellSpec& spec = row.cells[si];
            Table2Cell cell;
            cell.language = row.language;
            cell.sem = order[si];
            cell.expected_bounded = spec.bounded;
            if (spec.bounded) {
                bool certified = false;
                if (spec.certify_k) {
                    BoundednessBudgets budgets;
                    budgets.macro_states = opts.univ_macro_budget;
                    BoundednessVerdict v =
                        univ_bounded(row.automaton, cell.sem, *spec.certify_k, budgets);
                    certified = v.kind == BoundednessVerdict::Kind::Bounded;
                }
                CostScan scan = scan_costs(row.automaton, cell.sem, max_len, opts);
                bool under_ceiling = true;
                for (const ScanEntry& e : scan.per_length) {
                    if (e.any_member)
                        cell.evidence.push_back({e.length, e.max_cost, e.witness});
                    if (e.any_member && e.max_cost > spec.ceiling) under_ceiling = false;
                }
                cell.matches = under_ceiling;
                cell.evidence_kind = certified
                                         ? "universality-certified(k=" +
                                               std::to_string(*spec.certify_k) + ")"
                                         : "scan<=ceiling(" + std::to_string(spec.ceiling) + ")";
            } else {
                std::vector<Table2EvidenceRow> points;
                for (std::size_t n = 1;; ++n) {
                    std::string w = spec.family->word(n);
                    if (w.size() > max_len) break;
                    CostValue c = oracle_cost(row.automaton, w, cell.sem, opts.enumeration_limit);
                    if (!c.is_finite())
                        throw std::logic_error("table2_suite: family word left the jumping language");
                    points.push_back({w.size(), c.value(), w});
                }
                bool growing = !points.empty() && points.back().cost > 0;
                for (std::size_t i = 1; i < points.size(); ++i)
                    growing = growing && points[i].cost > points[i - 1].cost;
                cell.matches = growing;
                cell.evidence = points;
                cell.evidence_kind =
                    "family-growth(" + spec.family->description + ",points=" +
                    std::to_string(points.size()) + ")";
            }
            report.all_match = report.all_match && cell.matches;
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

// ---- deterministic report writers -----------------------------------------

inline std::string csv_escape(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string scan_csv_rows(const std::string& language, const CostScan& scan,
                                 const std::string& evidence_kind) {
    std::ostringstream out;
    for (const ScanEntry& e : scan.per_length) {
        out << csv_escape(language) << ',' << to_string(scan.sem) << ',' << e.length << ',';
        if (e.any_member) out << e.max_cost;
        out << ',' << csv_escape(e.witness) << ',' << evidence_kind << '\n';
    }
    return out.str();
}

inline constexpr const char* kReportHeader = "language,semantics,length,max_cost,witness,evidence_kind\n";

inline std::string interplay_csv(const std::string& language, const Nfa& aut, std::size_t max_len,
                                 const InterplayReport& report, const InterplayOptions& opts = {}) {
    std::ostringstream out;
    out << kReportHeader;
    for (Semantics sem : kAllSemantics)
        out << scan_csv_rows(language, scan_costs(aut, sem, max_len, opts), "scan");
    for (const InterplayViolation& v : report.violations)
        out << csv_escape(language) << ",," << v.word.size() << ',' << v.lhs << ','
            << csv_escape(v.word) << ",violation:" << v.inequality << '\n';
    return out.str();
}

inline std::string interplay_markdown(const std::string& language, const Nfa& aut,
                                      std::size_t max_len, const InterplayReport& report,
                                      const InterplayOptions& opts = {}) {
    std::ostringstream out;
    out << "# Interplay report: " << language << "\n\n";
    out << "Words checked: " << report.words_checked << "; violations: " << report.violations.size()
        << "\n\n";
    out << "| language | semantics | length | max_cost | witness | evidence_kind |\n";
    out << "|---|---|---|---|---|---|\n";
    for (Semantics sem : kAllSemantics) {
        CostScan scan = scan_costs(aut, sem, max_len, opts);
        for (const ScanEntry& e : scan.per_length) {
            out << "| " << language << " | " << to_string(sem) << " | " << e.length << " | ";
            if (e.any_member) out << e.max_cost;
            out << " | " << e.witness << " | scan |\n";
        }
    }
    for (const InterplayViolation& v : report.violations)
        out << "| " << language << " |  | " << v.word.size() << " | " << v.lhs << " | " << v.word
            << " | violation:" << v.inequality << " |\n";
    return out.str();
}

inline std::string table2_csv(const Table2Report& report) {
    std::ostringstream out;
    out << kReportHeader;
    for (const Table2Cell& cell : report.cells)
        for (const Table2EvidenceRow& e : cell.evidence)
            out << csv_escape(cell.language) << ',' << to_string(cell.sem) << ',' << e.length << ','
                << e.cost << ',' << csv_escape(e.witness) << ',' << cell.evidence_kind << '\n';
    return out.str();
}

inline std::string table2_markdown(const Table2Report& report) {
    std::ostringstream out;
    out << "# Table 2 suite\n\n";
    out << "| language | semantics | expected | matches | evidence |\n";
    out << "|---|---|---|---|---|\n";
    for (const Table2Cell& cell : report.cells)
        out << "| " << cell.language << " | " << to_string(cell.sem) << " | "
            << (cell.expected_bounded ? "bounded" : "unbounded") << " | "
            << (cell.matches ? "yes" : "NO") << " | " << cell.evidence_kind << " |\n";
    return out.str();
}

}  // namespace jfa
