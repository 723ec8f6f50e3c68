#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jfa/errors.hpp"

namespace jfa {

inline constexpr std::size_t kDefaultEnumerationLimit = 9;

// Head-visit order (a_0, ..., a_{n+1}): a_0 = 0, a_{n+1} = n+1, middle a
// permutation of 1..n.
struct JumpSequence {
    std::vector<std::uint32_t> positions;

    std::size_t word_length() const { return positions.size() - 2; }

    static JumpSequence identity(std::size_t n) {
        JumpSequence js;
        js.positions.resize(n + 2);
        std::iota(js.positions.begin(), js.positions.end(), 0u);
        return js;
    }

    bool valid() const {
        if (positions.size() < 2) return false;
        std::size_t n = positions.size() - 2;
        if (positions.front() != 0 || positions.back() != n + 1) return false;
        std::vector<char> seen(n + 1, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            std::uint32_t a = positions[i];
            if (a < 1 || a > n || seen[a]) return false;
            seen[a] = 1;
        }
        return true;
    }

    friend bool operator==(const JumpSequence&, const JumpSequence&) = default;
};

// Streams the n! jump sequences in lexicographic order of the middle
// permutation.
class JumpSequenceEnumerator {
public:
    explicit JumpSequenceEnumerator(std::size_t n, std::size_t limit = kDefaultEnumerationLimit)
        : current_(JumpSequence::identity(n)) {
        if (n > limit)
            throw ResourceLimitError("jump sequence enumeration limit exceeded: n=" +
                                     std::to_string(n) + " > " + std::to_string(limit));
    }

    std::optional<JumpSequence> next() {
        if (done_) return std::nullopt;
        JumpSequence out = current_;
        done_ = !std::next_permutation(current_.positions.begin() + 1, current_.positions.end() - 1);
        return out;
    }

private:
    JumpSequence current_;
    bool done_ = false;
};

template <typename Fn>
void for_each_jump_sequence(std::size_t n, Fn&& fn, std::size_t limit = kDefaultEnumerationLimit) {
    JumpSequenceEnumerator en(n, limit);
    while (auto js = en.next()) fn(*js);
}

// w_{a_1} w_{a_2} ... w_{a_n}.
inline std::string apply_jump(std::string_view word, const JumpSequence& js) {
    if (js.positions.size() != word.size() + 2)
        throw std::invalid_argument("jump sequence length does not match word length");
    std::string out;
    out.reserve(word.size());
    for (std::size_t i = 1; i + 1 < js.positions.size(); ++i) out += word[js.positions[i] - 1];
    return out;
}

// sum over steps of |a_i - a_{i-1}| - 1; always even.
inline std::uint64_t abs_cost(const JumpSequence& js) {
    std::uint64_t total = 0;
    for (std::size_t i = 1; i < js.positions.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(js.positions[i]) - js.positions[i - 1];
        total += static_cast<std::uint64_t>(d < 0 ? -d : d) - 1;
    }
    return total;
}

// Indices i with a_i a strict local extremum; |TP| is always even.
inline std::vector<std::uint32_t> turning_indices(const JumpSequence& js) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 1; i + 1 < js.positions.size(); ++i) {
        std::uint32_t prev = js.positions[i - 1], cur = js.positions[i], next = js.positions[i + 1];
        if ((cur > prev && cur > next) || (cur < prev && cur < next))
            out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

inline std::uint64_t rev_cost(const JumpSequence& js) { return turning_indices(js).size(); }

// max over steps of |a_i - a_{i-1}| - 1.
inline std::uint64_t max_cost(const JumpSequence& js) {
    std::uint64_t best = 0;
    for (std::size_t i = 1; i < js.positions.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(js.positions[i]) - js.positions[i - 1];
        best = std::max(best, static_cast<std::uint64_t>(d < 0 ? -d : d) - 1);
    }
    return best;
}

// d_H over equal-length words with equal letter multisets.
inline std::uint64_t hamming_distance(std::string_view x, std::string_view y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::string xs(x), ys(y);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (xs != ys) throw std::invalid_argument("hamming_distance: words are not permutations");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
    return d;
}

// Maximal monotone infix of a jump sequence; begin/end index positions[].
struct Sweep {
    enum class Kind { Right, Left };
    Kind kind;
    std::uint32_t begin;
    std::uint32_t end;  // inclusive

    friend bool operator==(const Sweep&, const Sweep&) = default;
};

// Unique decomposition into sweeps: segment boundaries sit at turning
// indices, and a segment opening after a local maximum descends.
inline std::vector<Sweep> sweeps(const JumpSequence& js) {
    std::vector<Sweep> out;
    std::uint32_t last = static_cast<std::uint32_t>(js.positions.size() - 1);
    std::uint32_t begin = 0;
    auto kind_at = [&](std::uint32_t b) {
        return (b == 0 || js.positions[b - 1] < js.positions[b]) ? Sweep::Kind::Right
                                                                 : Sweep::Kind::Left;
    };
    for (std::uint32_t t : turning_indices(js)) {
        out.push_back({kind_at(begin), begin, t});
        begin = t + 1;
    }
    out.push_back({kind_at(begin), begin, last});
    return out;
}

// #x(a, m): steps whose endpoints straddle the m-cut ({0..m}, {m+1..n+1});
// always odd.
inline std::uint64_t crossings(const JumpSequence& js, std::uint32_t m) {
    if (m > js.word_length()) throw std::invalid_argument("crossings: cut index out of range");
    std::uint64_t count = 0;
    for (std::size_t i = 1; i < js.positions.size(); ++i) {
        bool left_before = js.positions[i - 1] <= m;
        bool left_after = js.positions[i] <= m;
        count += (left_before != left_after);
    }
    return count;
}

namespace detail {

// Range of a sweep (an interval of tape positions): a right sweep that is
// not the first extends left to the preceding turning position; a left sweep
// extends right to it.
struct SweepRange {
    std::uint32_t lo;
    std::uint32_t hi;  // inclusive
    bool contains(std::uint32_t p) const { return lo <= p && p <= hi; }
};

inline SweepRange sweep_range(const JumpSequence& js, const Sweep& s) {
    if (s.kind == Sweep::Kind::Right) {
        std::uint32_t lo = s.begin == 0 ? js.positions[s.begin] : js.positions[s.begin - 1];
        return {lo, js.positions[s.end]};
    }
    return {js.positions[s.end], js.positions[s.begin - 1]};
}

}  // namespace detail

}  // namespace jfa
