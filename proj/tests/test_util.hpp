#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jfa/nfa.hpp"

namespace jfa::test {

// (ab)* -- example 1.1 automaton
inline Nfa ab2() {
    return make_nfa({'a', 'b'}, 2, {0}, {0}, {{0, 'a', 1}, {1, 'b', 0}});
}

// a*b* -- example 1.2 automaton
inline Nfa asb() {
    return make_nfa({'a', 'b'}, 2, {0}, {0, 1}, {{0, 'a', 0}, {0, 'b', 1}, {1, 'b', 1}});
}

template <typename Fn>
void for_all_words(const std::vector<Symbol>& sigma, std::size_t max_len, Fn&& fn) {
    std::vector<std::string> frontier{""};
    fn(std::string{});
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : frontier)
            for (Symbol a : sigma) {
                next.push_back(w + a);
                fn(next.back());
            }
        frontier = std::move(next);
    }
}

// Acceptance by explicit run search, independent of the subset simulation.
inline bool brute_accepts(const Nfa& aut, const std::string& word) {
    std::function<bool(StateId, std::size_t)> go = [&](StateId q, std::size_t i) {
        if (i == word.size()) return aut.is_accepting(q);
        auto idx = aut.symbol_index(word[i]);
        if (!idx) return false;
        for (StateId r : aut.targets(q, *idx))
            if (go(r, i + 1)) return true;
        return false;
    };
    for (StateId q : aut.initial())
        if (go(q, 0)) return true;
    return false;
}

// Shortest rejected word, lexicographic tie-break; nullopt if all words up
// to max_len are accepted.
inline std::optional<std::string> brute_shortest_rejected(const Nfa& aut, std::size_t max_len) {
    std::optional<std::string> found;
    for_all_words(aut.alphabet(), max_len, [&](const std::string& w) {
        if (found) return;
        if (!brute_accepts(aut, w)) found = w;
    });
    return found;
}

// Some permutation of `word` is accepted (distinct-permutation search).
inline bool brute_jumping_member(const Nfa& aut, const std::string& word) {
    std::string perm = word;
    std::sort(perm.begin(), perm.end());
    do {
        if (brute_accepts(aut, perm)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace jfa::test
