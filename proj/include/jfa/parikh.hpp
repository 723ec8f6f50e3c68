#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jfa/nfa.hpp"

namespace jfa {

// Letter counts indexed by alphabet position.
using ParikhVector = std::vector<std::uint32_t>;

inline ParikhVector parikh_vector(std::string_view word, const std::vector<Symbol>& alphabet) {
    ParikhVector v(alphabet.size(), 0);
    for (char c : word) {
        std::size_t i = 0;
        while (i < alphabet.size() && alphabet[i] != c) ++i;
        if (i == alphabet.size())
            throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet");
        ++v[i];
    }
    return v;
}

namespace detail {

// mixed-radix key of a sub-vector of v, combined with a state id
inline std::uint64_t parikh_key(StateId q, const ParikhVector& sub, const ParikhVector& v,
                                std::size_t state_count) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < sub.size(); ++i) key = key * (v[i] + 1) + sub[i];
    return key * state_count + q;
}

}  // namespace detail

// Decides v in Parikh(L(aut)) by reachability over (state, sub-vector <= v).
inline bool parikh_member(const ParikhVector& v, const Nfa& aut) {
    if (v.size() != aut.alphabet().size())
        throw std::invalid_argument("parikh_member: vector domain does not match alphabet");
    if (aut.state_count() == 0) return false;
    std::uint64_t total = 0;
    for (auto c : v) total += c;

    struct Node {
        StateId q;
        ParikhVector consumed;
        std::uint64_t depth;
    };
    std::unordered_set<std::uint64_t> seen;
    std::deque<Node> queue;
    for (StateId q : aut.initial()) {
        Node n{q, ParikhVector(v.size(), 0), 0};
        if (seen.insert(detail::parikh_key(q, n.consumed, v, aut.state_count())).second)
            queue.push_back(std::move(n));
    }
    while (!queue.empty()) {
        Node n = std::move(queue.front());
        queue.pop_front();
        if (n.depth == total) {
            if (aut.is_accepting(n.q)) return true;
            continue;
        }
        for (std::size_t s = 0; s < aut.alphabet().size(); ++s) {
            if (n.consumed[s] >= v[s]) continue;
            for (StateId r : aut.targets(n.q, s)) {
                Node m{r, n.consumed, n.depth + 1};
                ++m.consumed[s];
                if (seen.insert(detail::parikh_key(r, m.consumed, v, aut.state_count())).second)
                    queue.push_back(std::move(m));
            }
        }
    }
    return false;
}

namespace detail {

// from q, consuming exactly `remaining`, can an accepting state be reached?
inline bool parikh_feasible(const Nfa& aut, StateId q, const ParikhVector& remaining,
                            const ParikhVector& v,
                            std::unordered_map<std::uint64_t, bool>& memo) {
    std::uint64_t key = parikh_key(q, remaining, v, aut.state_count());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool any = false;
    std::uint64_t left = 0;
    for (auto c : remaining) left += c;
    if (left == 0) {
        any = aut.is_accepting(q);
    } else {
        for (std::size_t s = 0; s < aut.alphabet().size() && !any; ++s) {
            if (remaining[s] == 0) continue;
            ParikhVector next = remaining;
            --next[s];
            for (StateId r : aut.targets(q, s)) {
                if (parikh_feasible(aut, r, next, v, memo)) {
                    any = true;
                    break;
                }
            }
        }
    }
    memo.emplace(key, any);
    return any;
}

}  // namespace detail

// Lexicographically least word with Parikh vector v accepted by aut, if any.
inline std::optional<std::string> parikh_witness(const ParikhVector& v, const Nfa& aut) {
    if (v.size() != aut.alphabet().size())
        throw std::invalid_argument("parikh_witness: vector domain does not match alphabet");
    if (aut.state_count() == 0) return std::nullopt;
    std::unordered_map<std::uint64_t, bool> memo;
    ParikhVector remaining = v;
    std::vector<StateId> frontier(aut.initial().begin(), aut.initial().end());

    auto frontier_feasible = [&](const std::vector<StateId>& fs, const ParikhVector& rem) {
        for (StateId q : fs)
            if (detail::parikh_feasible(aut, q, rem, v, memo)) return true;
        return false;
    };
    if (!frontier_feasible(frontier, remaining)) return std::nullopt;

    std::string word;
    std::uint64_t left = 0;
    for (auto c : v) left += c;
    while (left > 0) {
        bool advanced = false;
        for (std::size_t s = 0; s < aut.alphabet().size() && !advanced; ++s) {
            if (remaining[s] == 0) continue;
            ParikhVector rem = remaining;
            --rem[s];
            std::vector<StateId> next;
            for (StateId q : frontier)
                for (StateId r : aut.targets(q, s)) next.push_back(r);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            if (!next.empty() && frontier_feasible(next, rem)) {
                word += aut.alphabet()[s];
                frontier = std::move(next);
                remaining = std::move(rem);
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("parikh_witness: feasibility lost mid-walk");
        --left;
    }
    return word;
}

// w in J(aut): some permutation of w is accepted.
inline bool jumping_member(const Nfa& aut, std::string_view word) {
    return parikh_member(parikh_vector(word, aut.alphabet()), aut);
}

}  // namespace jfa
