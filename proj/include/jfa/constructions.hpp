#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "jfa/implicit.hpp"
#include "jfa/nfa.hpp"
#include "jfa/oracle.hpp"
#include "jfa/parikh.hpp"

namespace jfa {

namespace detail {

// ---- absolute-distance construction ---------------------------------------
//
// State: (q, window, head offset j, spent c). The window spans tape offsets
// -r..r+1 around the sequential head; j is the offset of the next cell the
// jumping head reads (1-r..r+1); c is the cost spent so far (<= k).
//
// Window cells are lazy: an entering cell is Unknown and its letter is fixed
// the first time something inspects it -- the sequential verify at offset 1,
// or a read by the jumping head. Read cells that fall behind the sequential
// head drop their letter (Blank), since nothing can inspect them again.
//
// Cell codes: 0 Unknown, 1 Blank (read), 2*li+2 committed letter li unread,
// 2*li+3 letter li read.

inline bool abs_cell_read(std::uint64_t c) { return c == 1 || (c >= 2 && ((c - 2) & 1) == 1); }
inline bool abs_cell_has_letter(std::uint64_t c) { return c >= 2; }
inline std::uint64_t abs_cell_letter(std::uint64_t c) { return (c - 2) >> 1; }
inline std::uint64_t abs_cell_committed(std::uint64_t li) { return 2 * li + 2; }
inline std::uint64_t abs_cell_read_letter(std::uint64_t li) { return 2 * li + 3; }

// The cost cap and the window radius are separate knobs: the full automaton
// has radius k, but membership of a length-n word only ever needs radius
// min(k, n+1), since |a_j - j| <= n+1 holds positionally; the trimmed and
// the full machine accept exactly the same words of length <= n.
inline ImplicitAutomaton build_abs_radius(const Nfa& aut, std::uint64_t cap, std::uint64_t radius) {
    auto shared = std::make_shared<const Nfa>(aut);
    const std::int64_t r = static_cast<std::int64_t>(radius);
    const std::size_t cells_n = static_cast<std::size_t>(2 * radius + 2);
    auto idx = [r](std::int64_t offset) { return static_cast<std::size_t>(offset + r); };

    // state = [q, j + (r-1), c, cell(-r) .. cell(r+1)]
    std::vector<ImplicitState> init;
    for (StateId q0 : shared->initial()) {
        for (std::int64_t j = 1; j <= r + 1; ++j) {
            if (static_cast<std::uint64_t>(j - 1) > cap) break;
            ImplicitState s(3 + cells_n, 0);
            s[0] = q0;
            s[1] = static_cast<std::uint64_t>(j + r - 1);
            s[2] = static_cast<std::uint64_t>(j - 1);
            for (std::int64_t d = -r; d <= 0; ++d) s[3 + idx(d)] = 1;  // left of the word: read
            init.push_back(std::move(s));
        }
    }

    auto step = [shared, cap, r, idx](const ImplicitState& s, Symbol a) {
        std::vector<ImplicitState> out;
        std::size_t si = shared->symbol_index_checked(a);
        StateId q = static_cast<StateId>(s[0]);
        std::int64_t j = static_cast<std::int64_t>(s[1]) - (r - 1);
        std::uint64_t c = s[2];
        const std::uint64_t* cells = s.data() + 3;

        // verify the guessed window against the actual next letter
        std::uint64_t v1 = cells[idx(1)];
        if (v1 == 0)
            v1 = abs_cell_committed(si);
        else if (!abs_cell_has_letter(v1) || abs_cell_letter(v1) != si)
            return out;
        // the cell leaving the window must have been read
        if (!abs_cell_read(cells[idx(-r)])) return out;

        std::uint64_t jcell = (j == 1) ? v1 : cells[idx(j)];
        if (abs_cell_read(jcell)) return out;

        std::vector<std::uint64_t> letters;
        if (abs_cell_has_letter(jcell))
            letters.push_back(abs_cell_letter(jcell));
        else
            for (std::uint64_t li = 0; li < shared->alphabet().size(); ++li) letters.push_back(li);

        for (std::uint64_t li : letters) {
            const auto& succ = shared->targets(q, li);
            if (succ.empty()) continue;
            for (std::int64_t jn = 1 - r; jn <= r + 1; ++jn) {
                if (jn + 1 == j) continue;  // zero-length jump cannot occur
                std::int64_t span = jn + 1 - j;
                std::uint64_t cost = static_cast<std::uint64_t>(span < 0 ? -span : span) - 1;
                if (c + cost > cap) continue;
                for (StateId qn : succ) {
                    ImplicitState ns(s.size(), 0);
                    ns[0] = qn;
                    ns[1] = static_cast<std::uint64_t>(jn + r - 1);
                    ns[2] = c + cost;
                    // mark the read, then shift the window one cell left
                    for (std::int64_t d = -r; d <= r; ++d) {
                        std::uint64_t cell = (d + 1 == 1) ? v1 : cells[idx(d + 1)];
                        if (d + 1 == j) cell = abs_cell_read_letter(li);
                        if (d <= 0 && abs_cell_read(cell)) cell = 1;
                        ns[3 + idx(d)] = cell;
                    }
                    ns[3 + idx(r + 1)] = 0;
                    out.push_back(std::move(ns));
                }
            }
        }
        return out;
    };

    auto accepting = [shared, r, idx](const ImplicitState& s) {
        std::int64_t j = static_cast<std::int64_t>(s[1]) - (r - 1);
        if (j != 1) return false;
        if (!shared->is_accepting(static_cast<StateId>(s[0]))) return false;
        const std::uint64_t* cells = s.data() + 3;
        for (std::int64_t d = -r; d <= r + 1; ++d) {
            bool read = abs_cell_read(cells[idx(d)]);
            if (d <= 0 && !read) return false;  // some letter was never read
            if (d >= 1 && read) return false;   // a letter beyond the end was used
        }
        return true;
    };

    return ImplicitAutomaton(shared->alphabet(), std::move(init), std::move(step),
                             std::move(accepting));
}

// ---- maximum-jump construction ---------------------------------------------
//
// `coords` coordinates, each Inactive or Active(direction, A-state, distance
// counter t, component set S). Each letter applies one operation:
//   None(j)             read into active coordinate j, reset its t
//   Activate(jL, jR)    open a left/right sweep pair, read into jL
//   Deactivate(jL, jR)  close a right sweep against a left one, read into jR
// Every other active coordinate's t increments; t past the cap kills the
// run. S tracks which strongly-active coordinates share a connected
// component of the sweep graph; deactivating a pair whose components are
// exactly each other would close a cycle, which no jump sequence produces.
//
// Coordinate stride 4: [tag, q, t, S]; tag 0 inactive, 1 right, 2 left.

inline ImplicitAutomaton build_max_coords(const Nfa& aut, std::size_t coords, std::uint64_t t_cap) {
    auto shared = std::make_shared<const Nfa>(aut);

    auto tag = [](const ImplicitState& s, std::size_t c) { return s[4 * c]; };

    std::vector<ImplicitState> init;
    for (StateId q0 : shared->initial()) {
        ImplicitState s(4 * coords, 0);
        s[0] = 1;  // right
        s[1] = q0;
        s[2] = 0;
        s[3] = 1;  // S = {coordinate 0}
        init.push_back(std::move(s));
    }

    // increment every active coordinate's t except those in skip_mask;
    // false if some counter would pass the cap
    auto bump_others = [tag, coords, t_cap](ImplicitState& s, std::uint64_t skip_mask) {
        for (std::size_t c = 0; c < coords; ++c) {
            if (tag(s, c) == 0 || (skip_mask >> c) & 1) continue;
            if (s[4 * c + 2] + 1 > t_cap) return false;
            s[4 * c + 2] += 1;
        }
        return true;
    };

    auto step = [shared, coords, tag, bump_others](const ImplicitState& s, Symbol a) {
        std::vector<ImplicitState> out;
        std::size_t si = shared->symbol_index_checked(a);

        // None(j)
        for (std::size_t j = 0; j < coords; ++j) {
            if (tag(s, j) == 0) continue;
            bool right = tag(s, j) == 1;
            StateId q = static_cast<StateId>(s[4 * j + 1]);
            const auto& moves = right ? shared->targets(q, si) : shared->sources(q, si);
            for (StateId q2 : moves) {
                ImplicitState ns = s;
                ns[4 * j + 1] = q2;
                ns[4 * j + 2] = 0;
                if (bump_others(ns, 1ull << j)) out.push_back(std::move(ns));
            }
        }

        // Activate(jL, jR): the new left sweep ends with p --a--> q, the new
        // right sweep starts at the turning state q. Coordinate labels are
        // interchangeable, so activating the two smallest inactive
        // coordinates loses no runs (any other labeling is a bijective
        // relabeling of this one).
        {
            std::size_t jl = coords, jr = coords;
            for (std::size_t c = 0; c < coords; ++c)
                if (tag(s, c) == 0) {
                    if (jl == coords)
                        jl = c;
                    else if (jr == coords) {
                        jr = c;
                        break;
                    }
                }
            if (jr < coords) {
                std::uint64_t pair_mask = (1ull << jl) | (1ull << jr);
                for (StateId p = 0; p < shared->state_count(); ++p) {
                    for (StateId q2 : shared->targets(p, si)) {
                        ImplicitState ns = s;
                        ns[4 * jl] = 2;
                        ns[4 * jl + 1] = p;
                        ns[4 * jl + 2] = 0;
                        ns[4 * jl + 3] = pair_mask;
                        ns[4 * jr] = 1;
                        ns[4 * jr + 1] = q2;
                        ns[4 * jr + 2] = 0;
                        ns[4 * jr + 3] = pair_mask;
                        if (bump_others(ns, pair_mask)) out.push_back(std::move(ns));
                    }
                }
            }
        }

        // Deactivate(jL, jR): the right sweep at q meets the left sweep's
        // start q' via q --a--> q'; surviving members of both components
        // merge, dropping the deactivated pair
        for (std::size_t jl = 0; jl < coords; ++jl) {
            if (tag(s, jl) != 2) continue;
            for (std::size_t jr = 0; jr < coords; ++jr) {
                if (jr == jl || tag(s, jr) != 1) continue;
                std::uint64_t pair_mask = (1ull << jl) | (1ull << jr);
                std::uint64_t sl = s[4 * jl + 3], sr = s[4 * jr + 3];
                if (sl == pair_mask && sr == pair_mask) continue;  // would close a cycle
                StateId ql = static_cast<StateId>(s[4 * jl + 1]);
                StateId qr = static_cast<StateId>(s[4 * jr + 1]);
                const auto& succ = shared->targets(qr, si);
                if (!std::binary_search(succ.begin(), succ.end(), ql)) continue;
                std::uint64_t merged = (sl | sr) & ~pair_mask;
                ImplicitState ns = s;
                for (std::size_t f = 0; f < 4; ++f) ns[4 * jl + f] = ns[4 * jr + f] = 0;
                for (std::size_t c = 0; c < coords; ++c) {
                    if (tag(ns, c) == 0) continue;
                    if ((sl | sr) >> c & 1) ns[4 * c + 3] = merged;
                }
                if (bump_others(ns, pair_mask)) out.push_back(std::move(ns));
            }
        }
        return out;
    };

    auto accepting = [shared, coords, tag](const ImplicitState& s) {
        std::size_t active = 0, last = 0;
        for (std::size_t c = 0; c < coords; ++c)
            if (tag(s, c) != 0) {
                ++active;
                last = c;
            }
        if (active != 1 || tag(s, last) != 1) return false;
        if (s[4 * last + 3] != (1ull << last)) return false;
        return shared->is_accepting(static_cast<StateId>(s[4 * last + 1]));
    };

    return ImplicitAutomaton(shared->alphabet(), std::move(init), std::move(step),
                             std::move(accepting));
}

}  // namespace detail

// L(B) = {w | A_abs(w) <= k}; nothing is materialized.
inline ImplicitAutomaton build_abs(const Nfa& aut, std::uint64_t k) {
    return detail::build_abs_radius(aut, k, k);
}

// ---- reversal construction --------------------------------------------------
//
// State: (q_1,...,q_{K+1}), one coordinate per turning subword. Odd
// coordinates run A forward, even ones run it backward; initial states glue
// even pairs, accepting states glue odd pairs. K is k floored to even: |TP|
// is always even, so {A_rev <= 2m+1} = {A_rev <= 2m}, and the k+1-part
// shuffle characterization is only faithful for even k.
inline ImplicitAutomaton build_rev(const Nfa& aut, std::uint64_t k) {
    auto shared = std::make_shared<const Nfa>(aut);
    const std::size_t K = static_cast<std::size_t>(k - (k & 1));
    const std::size_t coords = K + 1;

    std::vector<ImplicitState> init;
    for (StateId q0 : shared->initial()) {
        // every even/odd junction pair (2i, 2i+1) shares an arbitrary state
        ImplicitState s(coords, 0);
        s[0] = q0;
        std::vector<std::size_t> choice(K / 2, 0);
        while (true) {
            for (std::size_t p = 0; p < K / 2; ++p) s[1 + 2 * p] = s[2 + 2 * p] = choice[p];
            init.push_back(s);
            std::size_t p = 0;
            while (p < K / 2 && ++choice[p] == shared->state_count()) choice[p++] = 0;
            if (p == K / 2) break;
        }
    }

    auto step = [shared, coords](const ImplicitState& s, Symbol a) {
        std::vector<ImplicitState> out;
        std::size_t si = shared->symbol_index_checked(a);
        for (std::size_t c0 = 0; c0 < coords; ++c0) {
            bool forward = (c0 % 2 == 0);  // 1-based odd coordinate
            StateId q = static_cast<StateId>(s[c0]);
            const auto& moves = forward ? shared->targets(q, si) : shared->sources(q, si);
            for (StateId q2 : moves) {
                ImplicitState ns = s;
                ns[c0] = q2;
                out.push_back(std::move(ns));
            }
        }
        return out;
    };

    auto accepting = [shared, coords, K](const ImplicitState& s) {
        if (!shared->is_accepting(static_cast<StateId>(s[coords - 1]))) return false;
        for (std::size_t i = 1; i <= K; i += 2)  // odd 1-based junctions
            if (s[i - 1] != s[i]) return false;
        return true;
    };

    return ImplicitAutomaton(shared->alphabet(), std::move(init), std::move(step),
                             std::move(accepting));
}

// ---- Hamming construction ---------------------------------------------------
//
// State: (q, balance per letter, swaps). Each letter is either read as-is or
// swapped for a different one; balances track simulated-minus-actual counts
// and must return to zero at acceptance.
inline ImplicitAutomaton build_ham(const Nfa& aut, std::uint64_t k) {
    auto shared = std::make_shared<const Nfa>(aut);
    const std::size_t m = shared->alphabet().size();

    std::vector<ImplicitState> init;
    for (StateId q0 : shared->initial()) {
        ImplicitState s(2 + m, 0);
        s[0] = q0;
        s[1] = 0;
        for (std::size_t i = 0; i < m; ++i) s[2 + i] = k;  // balance 0 stored with bias k
        init.push_back(std::move(s));
    }

    auto step = [shared, m, k](const ImplicitState& s, Symbol a) {
        std::vector<ImplicitState> out;
        std::size_t si = shared->symbol_index_checked(a);
        StateId q = static_cast<StateId>(s[0]);
        for (StateId q2 : shared->targets(q, si)) {
            ImplicitState ns = s;
            ns[0] = q2;
            out.push_back(std::move(ns));
        }
        if (s[1] + 1 <= k) {
            for (std::size_t ti = 0; ti < m; ++ti) {
                if (ti == si) continue;
                if (s[2 + si] == 0 || s[2 + ti] == 2 * k) continue;  // balance would leave [-k,k]
                for (StateId q2 : shared->targets(q, ti)) {
                    ImplicitState ns = s;
                    ns[0] = q2;
                    ns[1] = s[1] + 1;
                    ns[2 + si] -= 1;
                    ns[2 + ti] += 1;
                    out.push_back(std::move(ns));
                }
            }
        }
        return out;
    };

    auto accepting = [shared, m, k](const ImplicitState& s) {
        if (!shared->is_accepting(static_cast<StateId>(s[0]))) return false;
        for (std::size_t i = 0; i < m; ++i)
            if (s[2 + i] != k) return false;
        return true;
    };

    return ImplicitAutomaton(shared->alphabet(), std::move(init), std::move(step),
                             std::move(accepting));
}

// L(B) = {w | A_max(w) <= k}. The distance counters live in {0..k}: a
// coordinate may wait exactly k steps between reads, which books jumps of
// cost up to k, including the turn jumps.
inline ImplicitAutomaton build_max(const Nfa& aut, std::uint64_t k) {
    if (k > 31) throw std::invalid_argument("build_max: k too large for the coordinate encoding");
    return detail::build_max_coords(aut, static_cast<std::size_t>(2 * k + 2), k);
}

inline ImplicitAutomaton build_semantics(const Nfa& aut, Semantics sem, std::uint64_t k) {
    switch (sem) {
        case Semantics::Abs: return build_abs(aut, k);
        case Semantics::Rev: return build_rev(aut, k);
        case Semantics::Ham: return build_ham(aut, k);
        case Semantics::Max: return build_max(aut, k);
    }
    throw std::logic_error("unreachable");
}

// Upper bound on the finite cost of a length-n member of the jumping
// language: n^2 for abs, n for the rest.
inline std::uint64_t semantics_cost_bound(Semantics sem, std::size_t n) {
    return sem == Semantics::Abs ? static_cast<std::uint64_t>(n) * n : n;
}

namespace detail {

// Level-k membership machine specialized to words of length n: same
// languages on Sigma^{<=n}, far fewer reachable states at large k. A
// length-n jump sequence has at most n+2 sweeps, so n+2 coordinates embed
// every valid sweep assignment.
inline ImplicitAutomaton build_for_membership(const Nfa& aut, Semantics sem, std::uint64_t k,
                                              std::size_t n) {
    switch (sem) {
        case Semantics::Abs:
            return build_abs_radius(aut, k, std::min<std::uint64_t>(k, n + 1));
        case Semantics::Max: {
            std::size_t coords = std::min<std::size_t>(2 * k + 2, n + 2);
            if (coords > 62) throw std::invalid_argument("build_max: coordinate encoding overflow");
            return build_max_coords(aut, coords, k);
        }
        default: return build_semantics(aut, sem, k);
    }
}

}  // namespace detail

// Minimal k with word in L(B_k), scanning k upward (step 2 for abs and rev,
// whose costs are even). Infinite iff the word is not in the jumping
// language.
inline CostValue cost_via_construction(const Nfa& aut, std::string_view word, Semantics sem,
                                       std::size_t member_budget = 1u << 20) {
    for (char c : word) aut.symbol_index_checked(c);
    if (!jumping_member(aut, word)) return CostValue::infinite();
    std::uint64_t bound = semantics_cost_bound(sem, word.size());
    std::uint64_t stride = (sem == Semantics::Abs || sem == Semantics::Rev) ? 2 : 1;
    for (std::uint64_t k = 0; k <= bound; k += stride) {
        auto machine = detail::build_for_membership(aut, sem, k, word.size());
        auto res = implicit_member_limited(machine, word, member_budget);
        if (res.exceeded)
            throw ResourceLimitError("cost_via_construction: membership state budget exceeded at k=" +
                                     std::to_string(k));
        if (res.accepted) return CostValue::finite(k);
    }
    // a member of the jumping language always lands within the bound
    throw std::logic_error("cost_via_construction: scan exhausted for a jumping-language member");
}

}  // namespace jfa
