#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "jfa/jump_sequence.hpp"
#include "jfa/nfa.hpp"

namespace jfa {

enum class Semantics { Abs, Rev, Ham, Max };

inline constexpr Semantics kAllSemantics[] = {Semantics::Abs, Semantics::Rev, Semantics::Ham,
                                              Semantics::Max};

inline std::string_view to_string(Semantics s) {
    switch (s) {
        case Semantics::Abs: return "abs";
        case Semantics::Rev: return "rev";
        case Semantics::Ham: return "ham";
        case Semantics::Max: return "max";
    }
    return "?";
}

inline Semantics semantics_from_string(std::string_view s) {
    if (s == "abs") return Semantics::Abs;
    if (s == "rev") return Semantics::Rev;
    if (s == "ham") return Semantics::Ham;
    if (s == "max") return Semantics::Max;
    throw std::invalid_argument("unknown semantics '" + std::string(s) + "'");
}

// Natural number or infinity; min over an empty set of runs is infinite.
class CostValue {
public:
    static CostValue infinite() { return CostValue(kInf); }
    static CostValue finite(std::uint64_t v) { return CostValue(v); }

    bool is_finite() const { return raw_ != kInf; }

    std::uint64_t value() const {
        if (!is_finite()) throw std::logic_error("CostValue: value() on infinite");
        return raw_;
    }

    bool leq(std::uint64_t k) const { return is_finite() && raw_ <= k; }

    std::string to_string() const { return is_finite() ? std::to_string(raw_) : "inf"; }

    friend bool operator==(const CostValue&, const CostValue&) = default;
    friend bool operator<(const CostValue& a, const CostValue& b) { return a.raw_ < b.raw_; }

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    explicit CostValue(std::uint64_t raw) : raw_(raw) {}
    std::uint64_t raw_;
};

// Ground truth by exhaustion. ABS/REV/MAX minimize the sequence cost over
// all jump sequences whose permuted word is accepted; HAM minimizes d_H over
// accepted distinct permutations (multiset enumeration, so repeated letters
// do not inflate the search).
inline CostValue oracle_cost(const Nfa& aut, std::string_view word, Semantics sem,
                             std::size_t limit = kDefaultEnumerationLimit) {
    for (char c : word) aut.symbol_index_checked(c);
    if (word.size() > limit)
        throw ResourceLimitError("oracle_cost: word length " + std::to_string(word.size()) +
                                 " exceeds enumeration limit " + std::to_string(limit));

    bool found = false;
    std::uint64_t best = 0;

    if (sem == Semantics::Ham) {
        std::string perm(word);
        std::sort(perm.begin(), perm.end());
        do {
            if (!accepts(aut, perm)) continue;
            std::uint64_t d = hamming_distance(word, perm);
            if (!found || d < best) best = d;
            found = true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return found ? CostValue::finite(best) : CostValue::infinite();
    }

    for_each_jump_sequence(
        word.size(),
        [&](const JumpSequence& js) {
            if (!accepts(aut, apply_jump(word, js))) return;
            std::uint64_t c;
            switch (sem) {
                case Semantics::Abs: c = abs_cost(js); break;
                case Semantics::Rev: c = rev_cost(js); break;
                default: c = max_cost(js); break;
            }
            if (!found || c < best) best = c;
            found = true;
        },
        limit);
    return found ? CostValue::finite(best) : CostValue::infinite();
}

}  // namespace jfa
