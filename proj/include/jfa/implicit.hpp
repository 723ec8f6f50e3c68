#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jfa/nfa.hpp"

namespace jfa {

// Opaque state of a lazily expanded automaton: a flat word vector. Encoding
// is private to each construction; only equality and hashing matter here.
using ImplicitState = std::vector<std::uint64_t>;

struct ImplicitStateHash {
    std::size_t operator()(const ImplicitState& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : s) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Behavioral automaton: initial set, successor function, acceptance
// predicate. step and accepting must be pure; step returns successors
// sorted and deduplicated so exploration order is reproducible.
class ImplicitAutomaton {
public:
    using StepFn = std::function<std::vector<ImplicitState>(const ImplicitState&, Symbol)>;
    using AcceptFn = std::function<bool(const ImplicitState&)>;

    ImplicitAutomaton(std::vector<Symbol> alphabet, std::vector<ImplicitState> initial, StepFn step,
                      AcceptFn accepting)
        : alphabet_(std::move(alphabet)),
          initial_(std::move(initial)),
          step_(std::move(step)),
          accepting_(std::move(accepting)) {
        canonicalize(initial_);
    }

    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    const std::vector<ImplicitState>& initial() const { return initial_; }

    std::vector<ImplicitState> step(const ImplicitState& s, Symbol a) const {
        auto out = step_(s, a);
        canonicalize(out);
        return out;
    }

    bool accepting(const ImplicitState& s) const { return accepting_(s); }

    std::size_t symbol_index_checked(Symbol a) const {
        for (std::size_t i = 0; i < alphabet_.size(); ++i)
            if (alphabet_[i] == a) return i;
        throw std::invalid_argument(std::string("symbol '") + a + "' not in alphabet");
    }

private:
    static void canonicalize(std::vector<ImplicitState>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    std::vector<Symbol> alphabet_;
    std::vector<ImplicitState> initial_;
    StepFn step_;
    AcceptFn accepting_;
};

// Language-equivalent implicit view of an explicit automaton.
inline ImplicitAutomaton as_implicit(const Nfa& aut) {
    auto shared = std::make_shared<const Nfa>(aut);
    std::vector<ImplicitState> init;
    for (StateId q : shared->initial()) init.push_back({q});
    return ImplicitAutomaton(
        shared->alphabet(), std::move(init),
        [shared](const ImplicitState& s, Symbol a) {
            std::size_t idx = shared->symbol_index_checked(a);
            std::vector<ImplicitState> out;
            for (StateId r : shared->targets(static_cast<StateId>(s[0]), idx)) out.push_back({r});
            return out;
        },
        [shared](const ImplicitState& s) {
            return shared->is_accepting(static_cast<StateId>(s[0]));
        });
}

namespace detail {

using MacroState = std::vector<ImplicitState>;  // sorted, deduplicated

inline MacroState macro_step(const ImplicitAutomaton& aut, const MacroState& m, Symbol a) {
    MacroState out;
    for (const ImplicitState& s : m) {
        auto succ = aut.step(s, a);
        out.insert(out.end(), succ.begin(), succ.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool macro_accepting(const ImplicitAutomaton& aut, const MacroState& m) {
    for (const ImplicitState& s : m)
        if (aut.accepting(s)) return true;
    return false;
}

struct MacroHash {
    std::size_t operator()(const MacroState& m) const {
        ImplicitStateHash h;
        std::size_t acc = m.size();
        for (const ImplicitState& s : m) acc = acc * 1000003u + h(s);
        return acc;
    }
};

// a subseteq b, both sorted.
inline bool macro_subset(const MacroState& a, const MacroState& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

struct MembershipResult {
    bool accepted = false;
    bool exceeded = false;  // state budget hit before the answer was known
    std::size_t peak_states = 0;
};

// Reachable-macro-state propagation per letter; nothing is materialized.
inline MembershipResult implicit_member_limited(const ImplicitAutomaton& aut, std::string_view word,
                                                std::size_t state_budget) {
    for (char c : word) aut.symbol_index_checked(c);
    detail::MacroState cur = aut.initial();
    MembershipResult res;
    res.peak_states = cur.size();
    for (char c : word) {
        cur = detail::macro_step(aut, cur, c);
        res.peak_states = std::max(res.peak_states, cur.size());
        if (cur.size() > state_budget) {
            res.exceeded = true;
            return res;
        }
        if (cur.empty()) break;
    }
    res.accepted = detail::macro_accepting(aut, cur);
    return res;
}

inline bool implicit_member(const ImplicitAutomaton& aut, std::string_view word) {
    return implicit_member_limited(aut, word, static_cast<std::size_t>(-1)).accepted;
}

struct UniversalityVerdict {
    enum class Kind { Universal, NotUniversal, ResourceExceeded };
    Kind kind = Kind::Universal;
    std::string witness;          // valid iff NotUniversal; rejected by the automaton
    std::size_t explored = 0;     // macro-states kept

    bool universal() const { return kind == Kind::Universal; }
};

// Breadth-first on-the-fly determinization. Witnesses are shortest, ties
// broken by alphabet order: a rejecting macro-state is recognized the moment
// it is generated, before any pruning. Subsumption pruning drops a newly
// generated macro-state when an already-kept subset exists; that can only
// remove accepting macro-states whose futures are covered, so the verdict
// and the minimal witness are unchanged.
inline UniversalityVerdict is_universal(const ImplicitAutomaton& aut, std::size_t max_macro_states,
                                        bool subsumption_pruning = true) {
    if (max_macro_states < 1) throw std::invalid_argument("max_macro_states must be >= 1");
    UniversalityVerdict verdict;

    struct Entry {
        detail::MacroState macro;
        std::string prefix;
    };
    std::deque<Entry> queue;
    std::vector<detail::MacroState> kept;

    auto finish_not_universal = [&](std::string witness) {
        if (implicit_member(aut, witness))
            throw std::logic_error("universality witness not rejected");
        verdict.kind = UniversalityVerdict::Kind::NotUniversal;
        verdict.witness = std::move(witness);
        return verdict;
    };

    detail::MacroState start = aut.initial();
    if (!detail::macro_accepting(aut, start)) return finish_not_universal("");
    kept.push_back(start);
    queue.push_back({std::move(start), ""});
    verdict.explored = 1;

    while (!queue.empty()) {
        Entry e = std::move(queue.front());
        queue.pop_front();
        for (Symbol a : aut.alphabet()) {
            detail::MacroState next = detail::macro_step(aut, e.macro, a);
            if (!detail::macro_accepting(aut, next)) return finish_not_universal(e.prefix + a);
            bool skip = false;
            for (const auto& k : kept)
                if (k == next || (subsumption_pruning && detail::macro_subset(k, next))) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            if (kept.size() >= max_macro_states) {
                verdict.kind = UniversalityVerdict::Kind::ResourceExceeded;
                verdict.explored = kept.size();
                return verdict;
            }
            kept.push_back(next);
            queue.push_back({std::move(next), e.prefix + a});
        }
    }
    verdict.kind = UniversalityVerdict::Kind::Universal;
    verdict.explored = kept.size();
    return verdict;
}

struct MaterializeResult {
    std::optional<Nfa> automaton;  // engaged unless exceeded
    bool exceeded = false;
    std::size_t discovered = 0;
};

// Reachable part as an explicit Nfa, states renumbered in BFS discovery
// order (initial states first, successors in alphabet order).
inline MaterializeResult materialize(const ImplicitAutomaton& aut, std::size_t state_budget) {
    if (state_budget < 1) throw std::invalid_argument("state_budget must be >= 1");
    MaterializeResult res;
    std::unordered_map<ImplicitState, StateId, ImplicitStateHash> index;
    std::deque<ImplicitState> queue;
    std::set<StateId> initial, accepting;
    std::set<Transition> transitions;

    auto intern = [&](const ImplicitState& s) -> std::optional<StateId> {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        if (index.size() >= state_budget) return std::nullopt;
        StateId id = static_cast<StateId>(index.size());
        index.emplace(s, id);
        queue.push_back(s);
        if (aut.accepting(s)) accepting.insert(id);
        return id;
    };

    for (const ImplicitState& s : aut.initial()) {
        auto id = intern(s);
        if (!id) {
            res.exceeded = true;
            res.discovered = index.size();
            return res;
        }
        initial.insert(*id);
    }
    while (!queue.empty()) {
        ImplicitState s = std::move(queue.front());
        queue.pop_front();
        StateId sid = index.at(s);
        for (Symbol a : aut.alphabet()) {
            for (const ImplicitState& t : aut.step(s, a)) {
                auto tid = intern(t);
                if (!tid) {
                    res.exceeded = true;
                    res.discovered = index.size();
                    return res;
                }
                transitions.insert({sid, a, *tid});
            }
        }
    }
    res.discovered = index.size();
    res.automaton = make_nfa(aut.alphabet(), index.size(), std::move(initial), std::move(accepting),
                             std::move(transitions));
    return res;
}

}  // namespace jfa
