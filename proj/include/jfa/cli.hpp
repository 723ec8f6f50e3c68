#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jfa/boundedness.hpp"
#include "jfa/constructions.hpp"
#include "jfa/corpus.hpp"
#include "jfa/interplay.hpp"
#include "jfa/nfa.hpp"
#include "jfa/oracle.hpp"

namespace jfa::cli {

// Exit statuses: 0 definite answer, 1 definite negative (rejected /
// unbounded / violations), 2 unknown or resource limit, 3 usage or input
// error.
enum ExitStatus : int {
    kOk = 0,
    kNegative = 1,
    kUnknown = 2,
    kUsage = 3,
};

namespace detail {

inline Nfa load_automaton(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open automaton file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_automaton(buf.str());
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << content;
}

inline std::string sibling_markdown_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".md");
    return p.string();
}

inline std::string print_bounded(std::ostream& out, const BoundednessVerdict& v) {
    switch (v.kind) {
        case BoundednessVerdict::Kind::Bounded: out << "bounded\n"; return "";
        case BoundednessVerdict::Kind::Unbounded:
            out << "unbounded witness=" << v.witness << " cost=" << v.witness_cost.to_string()
                << "\n";
            return "";
        case BoundednessVerdict::Kind::Unknown: out << "unknown up to " << v.limit_note << "\n";
            return "";
    }
    return "";
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantitative semantics for jumping finite automata"};
    app.require_subcommand(1);

    std::string aut_path, word, sem_name, method = "construction", out_path, mode = "search";
    std::uint64_t k = 0;
    std::size_t budget = 1u << 20;
    std::size_t max_len = 6;
    std::size_t enum_limit = kDefaultEnumerationLimit;
    std::uint32_t seed = 0;
    std::size_t count = 12;
    bool universal = false;

    auto* cost = app.add_subcommand("cost", "cost of a word under one semantics");
    cost->add_option("--aut", aut_path)->required();
    cost->add_option("--word", word)->required();
    cost->add_option("--sem", sem_name)->required()->check(CLI::IsMember({"abs", "rev", "ham", "max"}));
    cost->add_option("--method", method)->check(CLI::IsMember({"oracle", "construction", "both"}));
    cost->add_option("--budget", budget);
    cost->add_option("--enum-limit", enum_limit);

    auto* member = app.add_subcommand("member", "jumping-language membership");
    member->add_option("--aut", aut_path)->required();
    member->add_option("--word", word)->required();

    auto* construct = app.add_subcommand("construct", "materialize a bounded-cost automaton");
    construct->add_option("--aut", aut_path)->required();
    construct->add_option("--sem", sem_name)->required()->check(CLI::IsMember({"abs", "rev", "ham", "max"}));
    construct->add_option("--k", k)->required();
    construct->add_option("--out", out_path)->required();
    std::size_t construct_budget = 50000;
    construct->add_option("--budget", construct_budget);

    auto* bounded = app.add_subcommand("bounded", "decide k-boundedness");
    bounded->add_option("--aut", aut_path)->required();
    bounded->add_option("--sem", sem_name)->required()->check(CLI::IsMember({"abs", "rev", "ham", "max"}));
    bounded->add_option("--k", k)->required();
    bounded->add_flag("--universal", universal, "bound over all words, not just the jumping language");
    bounded->add_option("--mode", mode)->check(CLI::IsMember({"exact", "search"}));
    bounded->add_option("--max-len", max_len);
    bounded->add_option("--budget", budget);

    auto* interplay = app.add_subcommand("interplay", "per-word inequality report");
    interplay->add_option("--aut", aut_path)->required();
    interplay->add_option("--max-len", max_len);
    interplay->add_option("--out", out_path)->required();

    auto* table2 = app.add_subcommand("table2", "six separation languages vs expectations");
    table2->add_option("--max-len", max_len);
    table2->add_option("--out", out_path)->required();

    auto* selftest = app.add_subcommand("selftest", "seeded differential self-check");
    selftest->add_option("--seed", seed);
    selftest->add_option("--count", count);
    selftest->add_option("--max-len", max_len)->default_val(std::size_t{4});

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));

        if (*cost) {
            Nfa aut = detail::load_automaton(aut_path);
            Semantics sem = semantics_from_string(sem_name);
            if (method == "oracle") {
                out << oracle_cost(aut, word, sem, enum_limit).to_string() << "\n";
            } else if (method == "construction") {
                out << cost_via_construction(aut, word, sem, budget).to_string() << "\n";
            } else {
                CostValue via_oracle = oracle_cost(aut, word, sem, enum_limit);
                CostValue via_construction = cost_via_construction(aut, word, sem, budget);
                out << via_oracle.to_string() << "\n" << via_construction.to_string() << "\n";
                if (!(via_oracle == via_construction)) {
                    err << "differential mismatch: oracle=" << via_oracle.to_string()
                        << " construction=" << via_construction.to_string() << "\n";
                    return kUsage;
                }
            }
            return kOk;
        }

        if (*member) {
            Nfa aut = detail::load_automaton(aut_path);
            bool yes = jumping_member(aut, word);
            out << (yes ? "true" : "false") << "\n";
            return yes ? kOk : kNegative;
        }

        if (*construct) {
            Nfa aut = detail::load_automaton(aut_path);
            Semantics sem = semantics_from_string(sem_name);
            MaterializeResult res = materialize(build_semantics(aut, sem, k), construct_budget);
            if (res.exceeded) {
                err << "state budget " << construct_budget << " exceeded after " << res.discovered
                    << " states\n";
                return kUnknown;
            }
            detail::write_file(out_path, serialize_automaton(*res.automaton));
            out << "states " << res.automaton->state_count() << " transitions "
                << res.automaton->transitions().size() << "\n";
            return kOk;
        }

        if (*bounded) {
            Nfa aut = detail::load_automaton(aut_path);
            Semantics sem = semantics_from_string(sem_name);
            BoundednessBudgets budgets;
            budgets.member_budget = budget;
            BoundednessVerdict v;
            if (universal)
                v = univ_bounded(aut, sem, k, budgets);
            else if (mode == "exact")
                v = jlang_bounded_exact(aut, sem, k, budgets);
            else
                v = jlang_bounded_search(aut, sem, k, max_len, budgets);
            detail::print_bounded(out, v);
            switch (v.kind) {
                case BoundednessVerdict::Kind::Bounded: return kOk;
                case BoundednessVerdict::Kind::Unbounded: return kNegative;
                case BoundednessVerdict::Kind::Unknown: return kUnknown;
            }
        }

        if (*interplay) {
            Nfa aut = detail::load_automaton(aut_path);
            std::string name = std::filesystem::path(aut_path).stem().string();
            InterplayReport report = check_interplay(aut, max_len);
            detail::write_file(out_path, interplay_csv(name, aut, max_len, report));
            detail::write_file(detail::sibling_markdown_path(out_path),
                               interplay_markdown(name, aut, max_len, report));
            out << "words " << report.words_checked << " violations " << report.violations.size()
                << "\n";
            return report.violations.empty() ? kOk : kNegative;
        }

        if (*table2) {
            Table2Report report = table2_suite(max_len);
            std::filesystem::create_directories(out_path);
            auto dir = std::filesystem::path(out_path);
            detail::write_file((dir / "table2.csv").string(), table2_csv(report));
            detail::write_file((dir / "table2.md").string(), table2_markdown(report));
            std::size_t matched = 0;
            for (const auto& cell : report.cells) matched += cell.matches;
            out << "cells " << report.cells.size() << " matched " << matched << "\n";
            return report.all_match ? kOk : kNegative;
        }

        if (*selftest) {
            auto corpus = random_nfa_corpus(count, seed);
            std::size_t checks = 0, failures = 0;
            for (const Nfa& aut : corpus) {
                for (Semantics sem : kAllSemantics) {
                    for (std::uint64_t kk = 0; kk <= 1; ++kk) {
                        auto built = build_semantics(aut, sem, kk);
                        for (std::size_t len = 0; len <= max_len; ++len) {
                            jfa::detail::for_each_word(aut.alphabet(), len, [&](const std::string& w) {
                                bool via_construction = implicit_member(built, w);
                                bool via_oracle = oracle_cost(aut, w, sem).leq(kk);
                                ++checks;
                                if (via_construction != via_oracle) {
                                    ++failures;
                                    err << "mismatch sem=" << to_string(sem) << " k=" << kk
                                        << " word=" << w << "\n";
                                }
                            });
                        }
                    }
                }
            }
            out << "selftest checks " << checks << " failures " << failures << "\n";
            return failures == 0 ? kOk : kNegative;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kUnknown;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace jfa::cli
