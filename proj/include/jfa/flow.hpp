#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jfa/nfa.hpp"
#include "jfa/parikh.hpp"

namespace jfa {

struct FlowSearchOptions {
    std::uint64_t flow_bound = 0;         // per-variable value cap; 0 = auto 2^(|T1|+|T2|)
    std::uint64_t node_budget = 1000000;  // total search nodes across the whole call
};

struct IntersectionVerdict {
    enum class Kind { Empty, NonEmpty, Unknown };
    Kind kind = Kind::Empty;
    ParikhVector witness;  // validated against both automata when NonEmpty
    std::string note;
};

namespace detail {

struct FlowRow {
    std::vector<std::pair<std::size_t, std::int64_t>> terms;  // (var, coefficient)
    std::int64_t rhs = 0;
};

struct FlowDomain {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool hi_is_cap = true;  // hi comes from the artificial bound, not from a row
};

// Interval propagation over equality rows. Returns false on a contradiction;
// sets *cap_pruned when the contradiction exists only because of the cap.
inline bool flow_propagate(const std::vector<FlowRow>& rows, std::vector<FlowDomain>& dom,
                           bool* cap_pruned) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const FlowRow& row : rows) {
            __int128 min_sum = 0, max_sum = 0;
            for (auto [v, a] : row.terms) {
                if (a >= 0) {
                    min_sum += static_cast<__int128>(a) * dom[v].lo;
                    max_sum += static_cast<__int128>(a) * dom[v].hi;
                } else {
                    min_sum += static_cast<__int128>(a) * dom[v].hi;
                    max_sum += static_cast<__int128>(a) * dom[v].lo;
                }
            }
            for (auto [v, a] : row.terms) {
                __int128 own_min, own_max;
                if (a >= 0) {
                    own_min = static_cast<__int128>(a) * dom[v].lo;
                    own_max = static_cast<__int128>(a) * dom[v].hi;
                } else {
                    own_min = static_cast<__int128>(a) * dom[v].hi;
                    own_max = static_cast<__int128>(a) * dom[v].lo;
                }
                __int128 others_min = min_sum - own_min;
                __int128 others_max = max_sum - own_max;
                // a*x must lie in [rhs - others_max, rhs - others_min]
                __int128 tlo = row.rhs - others_max;
                __int128 thi = row.rhs - others_min;
                __int128 xlo, xhi;
                if (a > 0) {
                    xlo = tlo >= 0 ? (tlo + a - 1) / a : -((-tlo) / a);
                    xhi = thi >= 0 ? thi / a : -((-thi + a - 1) / a);
                } else {
                    std::int64_t na = -a;
                    xlo = thi <= 0 ? ((-thi) + na - 1) / na : -((thi) / na);
                    xhi = tlo <= 0 ? (-tlo) / na : -((tlo + na - 1) / na);
                }
                if (xlo < 0) xlo = 0;
                std::uint64_t nlo = dom[v].lo, nhi = dom[v].hi;
                bool hi_from_row = false;
                if (xlo > static_cast<__int128>(nlo)) nlo = static_cast<std::uint64_t>(xlo);
                if (xhi < static_cast<__int128>(nhi)) {
                    nhi = xhi < 0 ? 0 : static_cast<std::uint64_t>(xhi);
                    hi_from_row = true;
                    if (xhi < 0) {
                        // row forces a negative value
                        return false;
                    }
                }
                if (nlo > nhi) {
                    if (!hi_from_row && dom[v].hi_is_cap && cap_pruned) *cap_pruned = true;
                    return false;
                }
                if (nlo != dom[v].lo || nhi != dom[v].hi) {
                    dom[v].lo = nlo;
                    dom[v].hi = nhi;
                    if (hi_from_row) dom[v].hi_is_cap = false;
                    changed = true;
                }
            }
        }
    }
    return true;
}

// Fraction-free elimination; detects rational and gcd-based integer
// infeasibility of the equality system (ignoring nonnegativity).
inline bool flow_rationally_feasible(const std::vector<FlowRow>& rows, std::size_t nvars) {
    std::vector<std::vector<__int128>> m;
    for (const FlowRow& row : rows) {
        std::vector<__int128> r(nvars + 1, 0);
        for (auto [v, a] : row.terms) r[v] += a;
        r[nvars] = row.rhs;
        m.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nvars && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            __int128 a = m[rank][col], b = m[r][col];
            for (std::size_t c2 = 0; c2 <= nvars; ++c2) m[r][c2] = m[r][c2] * a - m[rank][c2] * b;
            // keep entries small
            __int128 g = 0;
            auto igcd = [](__int128 x, __int128 y) {
                if (x < 0) x = -x;
                if (y < 0) y = -y;
                while (y) {
                    __int128 t = x % y;
                    x = y;
                    y = t;
                }
                return x;
            };
            for (std::size_t c2 = 0; c2 <= nvars; ++c2) g = igcd(g, m[r][c2]);
            if (g > 1)
                for (std::size_t c2 = 0; c2 <= nvars; ++c2) m[r][c2] /= g;
        }
        ++rank;
    }
    for (const auto& r : m) {
        bool all_zero = true;
        __int128 g = 0;
        auto igcd = [](__int128 x, __int128 y) {
            if (x < 0) x = -x;
            if (y < 0) y = -y;
            while (y) {
                __int128 t = x % y;
                x = y;
                y = t;
            }
            return x;
        };
        for (std::size_t c = 0; c < nvars; ++c) {
            if (r[c] != 0) all_zero = false;
            g = igcd(g, r[c]);
        }
        if (all_zero && r[nvars] != 0) return false;
        if (!all_zero && g > 0) {
            __int128 rhs = r[nvars] < 0 ? -r[nvars] : r[nvars];
            if (rhs % g != 0) return false;
        }
    }
    return true;
}

struct FlowSearchState {
    std::uint64_t nodes_left;
    bool cap_pruned = false;
    bool budget_hit = false;
    std::vector<std::vector<std::size_t>> nogood_supports;  // lazy connectivity cuts
};

template <typename Validate>
std::optional<std::vector<std::uint64_t>> flow_branch(const std::vector<FlowRow>& rows,
                                                      std::vector<FlowDomain> dom,
                                                      FlowSearchState& st,
                                                      const Validate& validate) {
    if (st.nodes_left == 0) {
        st.budget_hit = true;
        return std::nullopt;
    }
    --st.nodes_left;
    if (!flow_propagate(rows, dom, &st.cap_pruned)) return std::nullopt;

    std::size_t branch_var = dom.size();
    std::uint64_t best_width = 0;
    for (std::size_t v = 0; v < dom.size(); ++v) {
        std::uint64_t width = dom[v].hi - dom[v].lo;
        if (width > 0 && (branch_var == dom.size() || width < best_width)) {
            branch_var = v;
            best_width = width;
        }
    }
    if (branch_var == dom.size()) {
        std::vector<std::uint64_t> sol(dom.size());
        for (std::size_t v = 0; v < dom.size(); ++v) sol[v] = dom[v].lo;
        std::vector<std::size_t> support;
        for (std::size_t v = 0; v < sol.size(); ++v)
            if (sol[v] > 0) support.push_back(v);
        for (const auto& bad : st.nogood_supports)
            if (bad == support) return std::nullopt;
        if (!validate(sol)) {
            st.nogood_supports.push_back(std::move(support));
            return std::nullopt;
        }
        return sol;
    }
    for (std::uint64_t v = dom[branch_var].lo;; ++v) {
        if (v > dom[branch_var].hi) break;
        if (st.nodes_left == 0) {
            st.budget_hit = true;
            return std::nullopt;
        }
        auto child = dom;
        child[branch_var].lo = child[branch_var].hi = v;
        child[branch_var].hi_is_cap = false;
        auto sol = flow_branch(rows, std::move(child), st, validate);
        if (sol) return sol;
        if (st.budget_hit) return std::nullopt;
    }
    if (dom[branch_var].hi_is_cap) st.cap_pruned = true;  // values above the cap unexplored
    return std::nullopt;
}

}  // namespace detail

// Emptiness of Parikh(L(a1)) ∩ Parikh(L(a2)) by branch-and-bound over
// per-transition flow counts with flow conservation, per-symbol linkage
// between the automata, and lazy connectivity cuts. Source and sink unit
// choices are enumerated outright. Empty is only reported when no branch was
// pruned by the artificial flow bound or the node budget.
inline IntersectionVerdict parikh_intersection_empty(const Nfa& a1, const Nfa& a2,
                                                     FlowSearchOptions opts = {}) {
    // shared alphabet, possibly in a different order
    std::vector<std::size_t> sym2to1(a2.alphabet().size());
    {
        std::set<Symbol> s1(a1.alphabet().begin(), a1.alphabet().end());
        std::set<Symbol> s2(a2.alphabet().begin(), a2.alphabet().end());
        if (s1 != s2) throw std::invalid_argument("parikh_intersection_empty: alphabet mismatch");
        for (std::size_t i = 0; i < a2.alphabet().size(); ++i)
            sym2to1[i] = a1.symbol_index(a2.alphabet()[i]).value();
    }

    std::vector<Transition> t1(a1.transitions().begin(), a1.transitions().end());
    std::vector<Transition> t2(a2.transitions().begin(), a2.transitions().end());
    std::uint64_t cap = opts.flow_bound;
    if (cap == 0) {
        std::size_t bits = t1.size() + t2.size();
        cap = bits >= 40 ? (1ull << 40) : (1ull << bits);
    }

    auto reach_set = [](const Nfa& a, StateId from, bool backward) {
        std::vector<char> seen(a.state_count(), 0);
        std::deque<StateId> q{from};
        seen[from] = 1;
        while (!q.empty()) {
            StateId u = q.front();
            q.pop_front();
            for (const Transition& t : a.transitions()) {
                StateId src = backward ? t.dst : t.src;
                StateId dst = backward ? t.src : t.dst;
                if (src == u && !seen[dst]) {
                    seen[dst] = 1;
                    q.push_back(dst);
                }
            }
        }
        return seen;
    };

    detail::FlowSearchState st{opts.node_budget};
    bool any_indefinite = false;

    for (StateId src1 : a1.initial()) {
        auto reach1 = reach_set(a1, src1, false);
        for (StateId snk1 : a1.accepting()) {
            if (!reach1[snk1] && src1 != snk1) continue;
            auto coreach1 = reach_set(a1, snk1, true);
            for (StateId src2 : a2.initial()) {
                auto reach2 = reach_set(a2, src2, false);
                for (StateId snk2 : a2.accepting()) {
                    if (!reach2[snk2] && src2 != snk2) continue;
                    auto coreach2 = reach_set(a2, snk2, true);

                    // variables: usable transitions of a1 then of a2
                    std::vector<std::size_t> v1, v2;
                    for (std::size_t i = 0; i < t1.size(); ++i)
                        if (reach1[t1[i].src] && coreach1[t1[i].dst]) v1.push_back(i);
                    for (std::size_t i = 0; i < t2.size(); ++i)
                        if (reach2[t2[i].src] && coreach2[t2[i].dst]) v2.push_back(i);
                    std::size_t nvars = v1.size() + v2.size();

                    std::vector<detail::FlowRow> rows;
                    auto conservation = [&](const Nfa& a, const std::vector<Transition>& ts,
                                            const std::vector<std::size_t>& vs, std::size_t base,
                                            StateId src, StateId snk) {
                        for (StateId q = 0; q < a.state_count(); ++q) {
                            detail::FlowRow row;
                            for (std::size_t i = 0; i < vs.size(); ++i) {
                                const Transition& t = ts[vs[i]];
                                std::int64_t coeff = 0;
                                if (t.src == q) coeff += 1;  // outflow
                                if (t.dst == q) coeff -= 1;  // inflow
                                if (coeff != 0) row.terms.push_back({base + i, coeff});
                            }
                            row.rhs = (q == src ? 1 : 0) - (q == snk ? 1 : 0);
                            if (!row.terms.empty() || row.rhs != 0) rows.push_back(std::move(row));
                        }
                    };
                    conservation(a1, t1, v1, 0, src1, snk1);
                    conservation(a2, t2, v2, v1.size(), src2, snk2);
                    for (std::size_t s = 0; s < a1.alphabet().size(); ++s) {
                        detail::FlowRow row;
                        for (std::size_t i = 0; i < v1.size(); ++i)
                            if (a1.symbol_index(t1[v1[i]].sym).value() == s)
                                row.terms.push_back({i, 1});
                        for (std::size_t i = 0; i < v2.size(); ++i)
                            if (sym2to1[a2.symbol_index(t2[v2[i]].sym).value()] == s)
                                row.terms.push_back({v1.size() + i, -1});
                        if (!row.terms.empty()) rows.push_back(std::move(row));
                    }

                    if (!detail::flow_rationally_feasible(rows, nvars)) continue;
                    bool combo_done = false;

                    auto connected = [&](const Nfa& a, const std::vector<Transition>& ts,
                                         const std::vector<std::size_t>& vs, StateId src,
                                         const std::vector<std::uint64_t>& sol, std::size_t base) {
                        std::vector<char> seen(a.state_count(), 0);
                        seen[src] = 1;
                        bool grew = true;
                        while (grew) {
                            grew = false;
                            for (std::size_t i = 0; i < vs.size(); ++i) {
                                if (sol[base + i] == 0) continue;
                                const Transition& t = ts[vs[i]];
                                if (seen[t.src] && !seen[t.dst]) {
                                    seen[t.dst] = 1;
                                    grew = true;
                                }
                            }
                        }
                        for (std::size_t i = 0; i < vs.size(); ++i)
                            if (sol[base + i] > 0 && !seen[ts[vs[i]].src]) return false;
                        return true;
                    };
                    auto validate = [&](const std::vector<std::uint64_t>& sol) {
                        return connected(a1, t1, v1, src1, sol, 0) &&
                               connected(a2, t2, v2, src2, sol, v1.size());
                    };

                    // iterative deepening on the per-variable cap: a level
                    // that exhausts without its cap ever pruning a branch
                    // proves the combination infeasible outright
                    st.nogood_supports.clear();
                    for (std::uint64_t level = 1; !combo_done; level = std::min(level * 8, cap)) {
                        std::vector<detail::FlowDomain> dom(nvars);
                        for (auto& d : dom) d.hi = level;
                        st.cap_pruned = false;
                        auto sol = detail::flow_branch(rows, std::move(dom), st, validate);
                        if (sol) {
                            ParikhVector witness(a1.alphabet().size(), 0);
                            for (std::size_t i = 0; i < v1.size(); ++i)
                                witness[a1.symbol_index(t1[v1[i]].sym).value()] +=
                                    static_cast<std::uint32_t>((*sol)[i]);
                            if (!parikh_member(witness, a1) || !parikh_member(witness, a2))
                                throw std::logic_error("flow witness failed validation");
                            return {IntersectionVerdict::Kind::NonEmpty, witness, ""};
                        }
                        if (st.budget_hit)
                            return {IntersectionVerdict::Kind::Unknown, {},
                                    "node budget exhausted"};
                        if (!st.cap_pruned) combo_done = true;  // truly infeasible
                        else if (level >= cap) {
                            any_indefinite = true;  // bound reached, still pruned
                            combo_done = true;
                        }
                    }
                }
            }
        }
    }
    if (any_indefinite)
        return {IntersectionVerdict::Kind::Unknown, {}, "flow bound reached"};
    return {IntersectionVerdict::Kind::Empty, {}, ""};
}

}  // namespace jfa
