#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jfa/constructions.hpp"
#include "jfa/flow.hpp"
#include "jfa/implicit.hpp"
#include "jfa/oracle.hpp"
#include "jfa/parikh.hpp"

namespace jfa {

struct BoundednessVerdict {
    enum class Kind { Bounded, Unbounded, Unknown };
    Kind kind = Kind::Bounded;
    std::string witness;      // Unbounded: word with cost > k (jumping member in jlang mode)
    CostValue witness_cost = CostValue::infinite();
    std::string limit_note;   // Unknown: what was exhausted
};

struct BoundednessBudgets {
    std::size_t macro_states = 200000;       // universality determinization
    std::size_t materialize_states = 50000;  // explicit construction size
    std::size_t determinize_states = 4096;   // complement powerset size
    std::size_t member_budget = 1u << 20;    // membership macro width
    std::size_t enumeration_limit = kDefaultEnumerationLimit;
    FlowSearchOptions flow = {};
};

namespace detail {

// Complete-DFA complement by subset construction; empty macro-state is the
// rejecting sink, so the complement accepts exactly the rejected words.
inline std::optional<Nfa> determinize_complement(const Nfa& aut, std::size_t state_budget) {
    std::map<std::vector<StateId>, StateId> index;
    std::deque<std::vector<StateId>> queue;
    std::set<StateId> initial, accepting;
    std::set<Transition> transitions;

    auto intern = [&](std::vector<StateId> macro) -> std::optional<StateId> {
        auto it = index.find(macro);
        if (it != index.end()) return it->second;
        if (index.size() >= state_budget) return std::nullopt;
        StateId id = static_cast<StateId>(index.size());
        bool any_accepting = false;
        for (StateId q : macro) any_accepting |= aut.is_accepting(q);
        if (!any_accepting) accepting.insert(id);  // complemented acceptance
        queue.push_back(macro);
        index.emplace(std::move(macro), id);
        return id;
    };

    std::vector<StateId> start(aut.initial().begin(), aut.initial().end());
    auto sid = intern(std::move(start));
    if (!sid) return std::nullopt;
    initial.insert(*sid);
    while (!queue.empty()) {
        std::vector<StateId> macro = std::move(queue.front());
        queue.pop_front();
        StateId mid = index.at(macro);
        for (std::size_t s = 0; s < aut.alphabet().size(); ++s) {
            std::vector<StateId> next;
            for (StateId q : macro)
                for (StateId r : aut.targets(q, s)) next.push_back(r);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            auto nid = intern(std::move(next));
            if (!nid) return std::nullopt;
            transitions.insert({mid, aut.alphabet()[s], *nid});
        }
    }
    return make_nfa(aut.alphabet(), index.size(), std::move(initial), std::move(accepting),
                    std::move(transitions));
}

inline CostValue verified_cost(const Nfa& aut, const std::string& word, Semantics sem,
                               const BoundednessBudgets& budgets) {
    if (!jumping_member(aut, word)) return CostValue::infinite();
    return cost_via_construction(aut, word, sem, budgets.member_budget);
}

}  // namespace detail

// Univ-k-Bnd: A_sem(w) <= k for every w in Sigma*, decided through
// universality of B_k; the witness is re-costed before being reported.
inline BoundednessVerdict univ_bounded(const Nfa& aut, Semantics sem, std::uint64_t k,
                                       const BoundednessBudgets& budgets = {}) {
    auto built = build_semantics(aut, sem, k);
    UniversalityVerdict uv = is_universal(built, budgets.macro_states);
    BoundednessVerdict out;
    switch (uv.kind) {
        case UniversalityVerdict::Kind::Universal:
            out.kind = BoundednessVerdict::Kind::Bounded;
            return out;
        case UniversalityVerdict::Kind::ResourceExceeded:
            out.kind = BoundednessVerdict::Kind::Unknown;
            out.limit_note = "universality macro-state budget (" +
                             std::to_string(budgets.macro_states) + ") exhausted";
            return out;
        case UniversalityVerdict::Kind::NotUniversal: break;
    }
    CostValue cost = detail::verified_cost(aut, uv.witness, sem, budgets);
    if (cost.leq(k)) throw std::logic_error("univ_bounded: witness does not exceed the bound");
    out.kind = BoundednessVerdict::Kind::Unbounded;
    out.witness = uv.witness;
    out.witness_cost = cost;
    return out;
}

// k-Bnd, exact route: J(A) subseteq L(B_k) iff Parikh(L(complement(B_k)))
// and Parikh(L(A)) do not intersect.
inline BoundednessVerdict jlang_bounded_exact(const Nfa& aut, Semantics sem, std::uint64_t k,
                                              const BoundednessBudgets& budgets = {}) {
    BoundednessVerdict out;
    MaterializeResult mat = materialize(build_semantics(aut, sem, k), budgets.materialize_states);
    if (mat.exceeded) {
        out.kind = BoundednessVerdict::Kind::Unknown;
        out.limit_note = "materialize budget (" + std::to_string(budgets.materialize_states) +
                         ") exhausted";
        return out;
    }
    auto complement = detail::determinize_complement(*mat.automaton, budgets.determinize_states);
    if (!complement) {
        out.kind = BoundednessVerdict::Kind::Unknown;
        out.limit_note = "determinization budget (" + std::to_string(budgets.determinize_states) +
                         ") exhausted";
        return out;
    }
    IntersectionVerdict iv = parikh_intersection_empty(*complement, aut, budgets.flow);
    switch (iv.kind) {
        case IntersectionVerdict::Kind::Empty:
            out.kind = BoundednessVerdict::Kind::Bounded;
            return out;
        case IntersectionVerdict::Kind::Unknown:
            out.kind = BoundednessVerdict::Kind::Unknown;
            out.limit_note = "parikh engine: " + iv.note;
            return out;
        case IntersectionVerdict::Kind::NonEmpty: break;
    }
    auto witness = parikh_witness(iv.witness, *complement);
    if (!witness) throw std::logic_error("jlang_bounded_exact: witness vector lost");
    CostValue cost = detail::verified_cost(aut, *witness, sem, budgets);
    if (!jumping_member(aut, *witness) || cost.leq(k))
        throw std::logic_error("jlang_bounded_exact: invalid unboundedness witness");
    out.kind = BoundednessVerdict::Kind::Unbounded;
    out.witness = *witness;
    out.witness_cost = cost;
    return out;
}

// k-Bnd, semi-decision by enumeration: length then lexicographic order, so
// the first witness is minimal. Never answers Bounded.
inline BoundednessVerdict jlang_bounded_search(const Nfa& aut, Semantics sem, std::uint64_t k,
                                               std::size_t max_len,
                                               const BoundednessBudgets& budgets = {}) {
    const auto& sigma = aut.alphabet();
    std::string word;
    auto scan = [&](auto&& self, std::size_t remaining) -> std::optional<BoundednessVerdict> {
        if (remaining == 0) {
            if (!jumping_member(aut, word)) return std::nullopt;
            CostValue cost = cost_via_construction(aut, word, sem, budgets.member_budget);
            if (cost.leq(k)) return std::nullopt;
            BoundednessVerdict out;
            out.kind = BoundednessVerdict::Kind::Unbounded;
            out.witness = word;
            out.witness_cost = cost;
            return out;
        }
        for (Symbol a : sigma) {
            word.push_back(a);
            auto r = self(self, remaining - 1);
            word.pop_back();
            if (r) return r;
        }
        return std::nullopt;
    };
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (auto r = scan(scan, len)) return *r;
    }
    BoundednessVerdict out;
    out.kind = BoundednessVerdict::Kind::Unknown;
    out.limit_note = std::to_string(max_len);  // "unknown up to <L>" downstream
    return out;
}

}  // namespace jfa
