#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jfa/errors.hpp"

namespace jfa {

using Symbol = char;
using StateId = std::uint32_t;

struct Transition {
    StateId src;
    Symbol sym;
    StateId dst;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Explicit NFA over a single-character alphabet. States are dense indices in
// declaration order; the transition relation is a set. All data is immutable
// after construction; forward and reverse adjacency are prebuilt so lookups
// are allocation-free.
class Nfa {
public:
    Nfa(std::vector<Symbol> alphabet,
        std::vector<std::string> state_names,
        std::set<StateId> initial,
        std::set<StateId> accepting,
        std::set<Transition> transitions)
        : alphabet_(std::move(alphabet)),
          state_names_(std::move(state_names)),
          initial_(std::move(initial)),
          accepting_(std::move(accepting)),
          transitions_(std::move(transitions)) {
        validate();
        build_adjacency();
    }

    const std::vector<Symbol>& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return state_names_.size(); }
    const std::vector<std::string>& state_names() const { return state_names_; }
    const std::set<StateId>& initial() const { return initial_; }
    const std::set<StateId>& accepting() const { return accepting_; }
    const std::set<Transition>& transitions() const { return transitions_; }

    bool is_accepting(StateId q) const { return accepting_.count(q) > 0; }

    std::optional<std::size_t> symbol_index(Symbol a) const {
        for (std::size_t i = 0; i < alphabet_.size(); ++i)
            if (alphabet_[i] == a) return i;
        return std::nullopt;
    }

    std::size_t symbol_index_checked(Symbol a) const {
        auto idx = symbol_index(a);
        if (!idx) throw std::invalid_argument(std::string("symbol '") + a + "' not in alphabet");
        return *idx;
    }

    // delta(q, a), sorted ascending.
    const std::vector<StateId>& targets(StateId q, std::size_t sym_idx) const {
        return forward_[q * alphabet_.size() + sym_idx];
    }

    // {p | q in delta(p, a)}, sorted ascending.
    const std::vector<StateId>& sources(StateId q, std::size_t sym_idx) const {
        return backward_[q * alphabet_.size() + sym_idx];
    }

private:
    void validate() const {
        std::set<Symbol> seen;
        for (Symbol a : alphabet_) {
            if (a < 0x21 || a > 0x7e)
                throw std::invalid_argument("alphabet symbols must be printable ASCII");
            if (!seen.insert(a).second)
                throw std::invalid_argument("alphabet symbols must be distinct");
        }
        auto check_state = [&](StateId q) {
            if (q >= state_names_.size()) throw std::invalid_argument("state index out of range");
        };
        for (StateId q : initial_) check_state(q);
        for (StateId q : accepting_) check_state(q);
        for (const Transition& t : transitions_) {
            check_state(t.src);
            check_state(t.dst);
            bool known = false;
            for (Symbol a : alphabet_) known |= (a == t.sym);
            if (!known) throw std::invalid_argument("transition symbol not in alphabet");
        }
    }

    void build_adjacency() {
        forward_.assign(state_names_.size() * alphabet_.size(), {});
        backward_.assign(state_names_.size() * alphabet_.size(), {});
        for (const Transition& t : transitions_) {
            std::size_t s = symbol_index(t.sym).value();
            forward_[t.src * alphabet_.size() + s].push_back(t.dst);
            backward_[t.dst * alphabet_.size() + s].push_back(t.src);
        }
        for (auto& v : forward_) std::sort(v.begin(), v.end());
        for (auto& v : backward_) std::sort(v.begin(), v.end());
    }

    std::vector<Symbol> alphabet_;
    std::vector<std::string> state_names_;
    std::set<StateId> initial_;
    std::set<StateId> accepting_;
    std::set<Transition> transitions_;
    std::vector<std::vector<StateId>> forward_;
    std::vector<std::vector<StateId>> backward_;
};

// Convenience builder for automata defined in code: states named q0..qN.
inline Nfa make_nfa(std::vector<Symbol> alphabet,
                    std::size_t state_count,
                    std::set<StateId> initial,
                    std::set<StateId> accepting,
                    std::set<Transition> transitions) {
    std::vector<std::string> names;
    names.reserve(state_count);
    for (std::size_t i = 0; i < state_count; ++i) names.push_back("q" + std::to_string(i));
    return Nfa(std::move(alphabet), std::move(names), std::move(initial), std::move(accepting),
               std::move(transitions));
}

// Line format: one `alphabet` line, `state <name> [initial] [accepting]`,
// `trans <src> <sym> <dst>`; '#' starts a comment line. Order-free otherwise.
inline Nfa parse_automaton(std::string_view text) {
    struct Line {
        int number;
        std::vector<std::string> tokens;
    };
    std::vector<Line> lines;
    {
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t nl = text.find('\n', pos);
            std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                                 : nl - pos);
            ++number;
            std::istringstream iss{std::string(raw)};
            std::vector<std::string> tokens;
            std::string tok;
            while (iss >> tok) tokens.push_back(tok);
            if (!tokens.empty() && tokens[0][0] != '#') lines.push_back({number, std::move(tokens)});
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }

    std::vector<Symbol> alphabet;
    bool saw_alphabet = false;
    std::vector<std::string> names;
    std::unordered_map<std::string, StateId> by_name;
    std::set<StateId> initial, accepting;

    for (const Line& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "alphabet") {
            if (saw_alphabet) throw ParseError(line.number, "duplicate alphabet line");
            saw_alphabet = true;
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (t[i].size() != 1)
                    throw ParseError(line.number, "symbol '" + t[i] + "' is not a single character");
                alphabet.push_back(t[i][0]);
            }
        } else if (t[0] == "state") {
            if (t.size() < 2) throw ParseError(line.number, "state line needs a name");
            if (by_name.count(t[1])) throw ParseError(line.number, "duplicate state '" + t[1] + "'");
            StateId id = static_cast<StateId>(names.size());
            by_name.emplace(t[1], id);
            names.push_back(t[1]);
            for (std::size_t i = 2; i < t.size(); ++i) {
                if (t[i] == "initial")
                    initial.insert(id);
                else if (t[i] == "accepting")
                    accepting.insert(id);
                else
                    throw ParseError(line.number, "unknown state flag '" + t[i] + "'");
            }
        } else if (t[0] != "trans") {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (!saw_alphabet) throw ParseError(0, "missing alphabet line");

    std::set<Transition> transitions;
    for (const Line& line : lines) {
        const auto& t = line.tokens;
        if (t[0] != "trans") continue;
        if (t.size() != 4) throw ParseError(line.number, "trans line needs <src> <sym> <dst>");
        auto src = by_name.find(t[1]);
        if (src == by_name.end()) throw ParseError(line.number, "unknown state name '" + t[1] + "'");
        auto dst = by_name.find(t[3]);
        if (dst == by_name.end()) throw ParseError(line.number, "unknown state name '" + t[3] + "'");
        if (t[2].size() != 1) throw ParseError(line.number, "symbol '" + t[2] + "' is not a single character");
        Symbol sym = t[2][0];
        if (std::find(alphabet.begin(), alphabet.end(), sym) == alphabet.end())
            throw ParseError(line.number, "unknown symbol '" + t[2] + "'");
        transitions.insert({src->second, sym, dst->second});
    }
    if (initial.empty()) throw ParseError(0, "no initial state declared");

    try {
        return Nfa(std::move(alphabet), std::move(names), std::move(initial), std::move(accepting),
                   std::move(transitions));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

// Deterministic: alphabet order, then states by index, then transitions by
// (src, alphabet position of sym, dst). Byte-identical across calls.
inline std::string serialize_automaton(const Nfa& aut) {
    std::ostringstream out;
    out << "alphabet";
    for (Symbol a : aut.alphabet()) out << ' ' << a;
    out << '\n';
    for (StateId q = 0; q < aut.state_count(); ++q) {
        out << "state " << aut.state_names()[q];
        if (aut.initial().count(q)) out << " initial";
        if (aut.accepting().count(q)) out << " accepting";
        out << '\n';
    }
    std::vector<Transition> ts(aut.transitions().begin(), aut.transitions().end());
    std::sort(ts.begin(), ts.end(), [&](const Transition& x, const Transition& y) {
        auto kx = std::tuple(x.src, aut.symbol_index(x.sym).value(), x.dst);
        auto ky = std::tuple(y.src, aut.symbol_index(y.sym).value(), y.dst);
        return kx < ky;
    });
    for (const Transition& t : ts)
        out << "trans " << aut.state_names()[t.src] << ' ' << t.sym << ' ' << aut.state_names()[t.dst]
            << '\n';
    return out.str();
}

// Sequential subset simulation. Throws on symbols outside the alphabet.
inline bool accepts(const Nfa& aut, std::string_view word) {
    std::vector<char> cur(aut.state_count(), 0), next;
    for (StateId q : aut.initial()) cur[q] = 1;
    for (char c : word) {
        std::size_t s = aut.symbol_index_checked(c);
        next.assign(aut.state_count(), 0);
        for (StateId q = 0; q < aut.state_count(); ++q)
            if (cur[q])
                for (StateId r : aut.targets(q, s)) next[r] = 1;
        cur.swap(next);
    }
    for (StateId q : aut.accepting())
        if (cur[q]) return true;
    return false;
}

}  // namespace jfa
