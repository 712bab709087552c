// Complete deterministic finite automata over integer alphabets.
#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oasm/errors.hpp"

namespace oasm {

// A word is a sequence of symbol indices. Each char stores a raw index into
// the alphabet (0, 1, 2, ...), not a printable letter.
using Word = std::string;

// Length-first, then lexicographic. Fixed ordering for all enumerated
// language sets so diffs and golden files are stable.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using WordSet = std::set<Word, ShortlexLess>;

inline std::string render_symbol(int symbol) { return "a_" + std::to_string(symbol); }

// Renders a word with letters 'a', 'b', ... for small alphabets; the empty
// word renders as "-". Falls back to underscore-joined symbol names.
inline std::string render_word(const Word& w) {
    if (w.empty()) return "-";
    bool lettered = std::all_of(w.begin(), w.end(), [](char c) { return c >= 0 && c < 26; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (lettered) {
            out.push_back(static_cast<char>('a' + w[i]));
        } else {
            if (i) out.push_back('_');
            out += render_symbol(static_cast<unsigned char>(w[i]));
        }
    }
    return out;
}

// A complete DFA: the transition table is total on states x symbols. States
// and symbols are dense 0-based indices; immutable once constructed.
class Dfa {
public:
    Dfa(int state_count, int alphabet_size, std::vector<int> transitions, int initial,
        std::vector<int> finals)
        : state_count_(state_count),
          alphabet_size_(alphabet_size),
          transitions_(std::move(transitions)),
          initial_(initial),
          final_(static_cast<std::size_t>(state_count), false) {
        if (state_count_ < 1) throw AutomataError("dfa: state count must be positive");
        if (alphabet_size_ < 1) throw AutomataError("dfa: alphabet size must be positive");
        if (static_cast<int>(transitions_.size()) != state_count_ * alphabet_size_)
            throw AutomataError("dfa: transition table must cover every (state, symbol) pair");
        for (int target : transitions_)
            if (target < 0 || target >= state_count_)
                throw AutomataError("dfa: transition target out of range");
        if (initial_ < 0 || initial_ >= state_count_)
            throw AutomataError("dfa: initial state out of range");
        for (int f : finals) {
            if (f < 0 || f >= state_count_) throw AutomataError("dfa: final state out of range");
            final_[static_cast<std::size_t>(f)] = true;
        }
    }

    int state_count() const { return state_count_; }
    int alphabet_size() const { return alphabet_size_; }
    int initial() const { return initial_; }

    int next(int state, int symbol) const {
        return transitions_[static_cast<std::size_t>(state) * alphabet_size_ + symbol];
    }

    bool is_final(int state) const { return final_[static_cast<std::size_t>(state)]; }

    std::vector<int> final_states() const {
        std::vector<int> out;
        for (int q = 0; q < state_count_; ++q)
            if (final_[static_cast<std::size_t>(q)]) out.push_back(q);
        return out;
    }

    // Identity comparison, numbering included. Language equality lives in
    // equivalent().
    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    int state_count_;
    int alphabet_size_;
    std::vector<int> transitions_;
    int initial_;
    std::vector<bool> final_;
};

// Runs the word through the automaton. Symbols outside the alphabet are a
// caller bug and raise std::out_of_range.
inline bool accepts(const Dfa& dfa, const Word& word) {
    int state = dfa.initial();
    for (char raw : word) {
        int symbol = static_cast<unsigned char>(raw);
        if (symbol >= dfa.alphabet_size())
            throw std::out_of_range("accepts: symbol " + std::to_string(symbol) +
                                    " outside alphabet of size " +
                                    std::to_string(dfa.alphabet_size()));
        state = dfa.next(state, symbol);
    }
    return dfa.is_final(state);
}

// Language equality via pairwise reachability in the product automaton.
// Comparing automata over different alphabets is an error, not `false`:
// a silent false would hide harness bugs.
inline bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw AlphabetMismatch("equivalent: automata have incomparable alphabets (" +
                               std::to_string(a.alphabet_size()) + " vs " +
                               std::to_string(b.alphabet_size()) + ")");
    const int k = a.alphabet_size();
    std::vector<bool> seen(static_cast<std::size_t>(a.state_count()) * b.state_count(), false);
    std::deque<std::pair<int, int>> queue{{a.initial(), b.initial()}};
    seen[static_cast<std::size_t>(a.initial()) * b.state_count() + b.initial()] = true;
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        if (a.is_final(p) != b.is_final(q)) return false;
        for (int s = 0; s < k; ++s) {
            int pn = a.next(p, s);
            int qn = b.next(q, s);
            std::size_t idx = static_cast<std::size_t>(pn) * b.state_count() + qn;
            if (!seen[idx]) {
                seen[idx] = true;
                queue.emplace_back(pn, qn);
            }
        }
    }
    return true;
}

}  // namespace oasm
