#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "jfa/nfa.hpp"

namespace jfa {

// Seeded random automata for differential testing. mt19937 plus modulo
// draws, so the corpus is identical across platforms and standard libraries.
inline std::vector<Nfa> random_nfa_corpus(std::size_t count, std::uint32_t seed,
                                          std::size_t max_states = 3,
                                          std::vector<Symbol> alphabet = {'a', 'b'}) {
    std::mt19937 rng(seed);
    auto draw = [&](std::uint32_t n) { return static_cast<std::uint32_t>(rng() % n); };
    std::vector<Nfa> out;
    out.reserve(count);
    while (out.size() < count) {
        std::size_t n = 1 + draw(static_cast<std::uint32_t>(max_states));
        std::set<Transition> transitions;
        for (StateId q = 0; q < n; ++q)
            for (Symbol a : alphabet)
                for (StateId r = 0; r < n; ++r)
                    if (draw(100) < 35) transitions.insert({q, a, r});
        std::set<StateId> initial, accepting;
        for (StateId q = 0; q < n; ++q) {
            if (draw(2)) initial.insert(q);
            if (draw(2)) accepting.insert(q);
        }
        if (initial.empty()) initial.insert(0);
        out.push_back(make_nfa(alphabet, n, std::move(initial), std::move(accepting),
                               std::move(transitions)));
    }
    return out;
}

}  // namespace jfa
