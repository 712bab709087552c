// The epsilon-NFA produced by the overlap-assembly product of two DFAs.
//
// States are pairs: the first component tracks the left automaton (or the
// marker `t` once the left automaton has accepted its part), the second
// tracks the right automaton (or the marker `s'` while it has not started
// reading). The pair (t, s') never arises.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "oasm/errors.hpp"

namespace oasm {

struct PairState {
    // Sentinel for the first component: the left automaton is done reading.
    // Larger than any state index, so pair states order with t-rows last.
    static constexpr std::int32_t left_done = std::numeric_limits<std::int32_t>::max();
    // Sentinel for the second component: the right automaton is still idle.
    // Smaller than any state index, so s'-pairs order first within a row.
    static constexpr std::int32_t right_idle = -1;

    std::int32_t first{};
    std::int32_t second{};

    friend auto operator<=>(const PairState&, const PairState&) = default;
};

inline std::string to_string(PairState p) {
    std::string a = p.first == PairState::left_done ? "t" : std::to_string(p.first);
    std::string b = p.second == PairState::right_idle ? "s'" : std::to_string(p.second) + "'";
    return "(" + a + "," + b + ")";
}

// A canonical (sorted, duplicate-free) set of pair states. The element order
// is the lexicographic order on pairs with the sentinel placement above.
class StateSet {
public:
    StateSet() = default;

    static StateSet of(std::vector<PairState> elems) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        StateSet s;
        s.elems_ = std::move(elems);
        return s;
    }

    bool contains(PairState p) const { return std::binary_search(elems_.begin(), elems_.end(), p); }
    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<PairState>& members() const { return elems_; }

    friend auto operator<=>(const StateSet&, const StateSet&) = default;

private:
    std::vector<PairState> elems_;
};

struct NfaTransition {
    PairState from;
    int symbol;
    PairState to;
    friend auto operator<=>(const NfaTransition&, const NfaTransition&) = default;
};

struct NfaEpsilonTransition {
    PairState from;
    PairState to;
    friend auto operator<=>(const NfaEpsilonTransition&, const NfaEpsilonTransition&) = default;
};

// Immutable after construction; the constructor checks the structural
// invariants (single initial state (0,s'), finals of the form (t,q'),
// epsilon edges only from a left-state row into the matching t-row entry).
class EpsilonNfa {
public:
    EpsilonNfa(int left_state_count, int right_state_count, int alphabet_size,
               std::vector<NfaTransition> moves, std::vector<NfaEpsilonTransition> epsilon,
               std::vector<PairState> finals)
        : left_count_(left_state_count),
          right_count_(right_state_count),
          alphabet_size_(alphabet_size),
          moves_(checked_slot_count(left_state_count, right_state_count, alphabet_size) *
                 static_cast<std::size_t>(alphabet_size)),
          eps_(slot_count()),
          finals_(std::move(finals)) {
        for (PairState f : finals_) {
            if (f.first != PairState::left_done || f.second == PairState::right_idle ||
                f.second < 0 || f.second >= right_count_)
                throw AutomataError("epsilon nfa: final states must be t-row states");
        }
        std::sort(finals_.begin(), finals_.end());
        finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
        for (const NfaTransition& t : moves) {
            check_state(t.from);
            check_state(t.to);
            if (t.symbol < 0 || t.symbol >= alphabet_size_)
                throw AutomataError("epsilon nfa: transition symbol out of range");
            moves_[index(t.from) * static_cast<std::size_t>(alphabet_size_) + static_cast<std::size_t>(t.symbol)]
                .push_back(t.to);
        }
        for (const NfaEpsilonTransition& e : epsilon) {
            check_state(e.from);
            check_state(e.to);
            if (e.from.first == PairState::left_done || e.from.second == PairState::right_idle ||
                e.to.first != PairState::left_done || e.to.second != e.from.second)
                throw AutomataError(
                    "epsilon nfa: epsilon edge must map a left-row state to its t-row twin");
            eps_[index(e.from)].push_back(e.to);
        }
        for (auto& targets : moves_) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        }
        for (auto& targets : eps_) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        }
    }

    int left_state_count() const { return left_count_; }
    int right_state_count() const { return right_count_; }
    int alphabet_size() const { return alphabet_size_; }

    PairState initial() const { return PairState{0, PairState::right_idle}; }
    const std::vector<PairState>& finals() const { return finals_; }

    bool is_final(PairState p) const {
        return std::binary_search(finals_.begin(), finals_.end(), p);
    }

    bool contains_state(PairState p) const {
        bool first_ok = p.first == PairState::left_done || (p.first >= 0 && p.first < left_count_);
        bool second_ok =
            p.second == PairState::right_idle || (p.second >= 0 && p.second < right_count_);
        bool is_t_s = p.first == PairState::left_done && p.second == PairState::right_idle;
        return first_ok && second_ok && !is_t_s;
    }

    // Every state of the automaton in canonical order; (t,s') is excluded.
    std::vector<PairState> states() const {
        std::vector<PairState> out;
        out.reserve(slot_count() - 1);
        for (int f = 0; f <= left_count_; ++f) {
            std::int32_t first = f == left_count_ ? PairState::left_done : f;
            for (int s = -1; s < right_count_; ++s) {
                std::int32_t second = s < 0 ? PairState::right_idle : s;
                PairState p{first, second};
                if (contains_state(p)) out.push_back(p);
            }
        }
        return out;
    }

    const std::vector<PairState>& moves_from(PairState p, int symbol) const {
        return moves_[index(p) * static_cast<std::size_t>(alphabet_size_) + static_cast<std::size_t>(symbol)];
    }

    const std::vector<PairState>& epsilon_from(PairState p) const { return eps_[index(p)]; }

    std::vector<NfaTransition> all_transitions() const {
        std::vector<NfaTransition> out;
        for (PairState p : states())
            for (int s = 0; s < alphabet_size_; ++s)
                for (PairState q : moves_from(p, s)) out.push_back({p, s, q});
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<NfaEpsilonTransition> all_epsilon_transitions() const {
        std::vector<NfaEpsilonTransition> out;
        for (PairState p : states())
            for (PairState q : epsilon_from(p)) out.push_back({p, q});
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static std::size_t checked_slot_count(int left, int right, int alphabet) {
        if (left < 1 || right < 1)
            throw AutomataError("epsilon nfa: both operand state counts must be positive");
        if (alphabet < 1) throw AutomataError("epsilon nfa: alphabet size must be positive");
        return static_cast<std::size_t>(left + 1) * static_cast<std::size_t>(right + 1);
    }

    std::size_t slot_count() const {
        return static_cast<std::size_t>(left_count_ + 1) * static_cast<std::size_t>(right_count_ + 1);
    }

    std::size_t index(PairState p) const {
        std::size_t row = p.first == PairState::left_done ? static_cast<std::size_t>(left_count_)
                                                          : static_cast<std::size_t>(p.first);
        std::size_t col = p.second == PairState::right_idle ? 0 : static_cast<std::size_t>(p.second) + 1;
        return row * static_cast<std::size_t>(right_count_ + 1) + col;
    }

    void check_state(PairState p) const {
        if (!contains_state(p))
            throw AutomataError("epsilon nfa: state " + to_string(p) + " is not constructible");
    }

    int left_count_;
    int right_count_;
    int alphabet_size_;
    std::vector<std::vector<PairState>> moves_;
    std::vector<std::vector<PairState>> eps_;
    std::vector<PairState> finals_;
};

// Least superset of `s` closed under the epsilon edges. Idempotent; the
// empty set is a fixed point.
inline StateSet epsilon_closure(const EpsilonNfa& nfa, const StateSet& s) {
    std::vector<PairState> pending(s.begin(), s.end());
    for (PairState p : pending)
        if (!nfa.contains_state(p))
            throw AutomataError("epsilon_closure: " + to_string(p) + " is not a state of the nfa");
    std::vector<PairState> closed;
    while (!pending.empty()) {
        PairState p = pending.back();
        pending.pop_back();
        if (std::find(closed.begin(), closed.end(), p) != closed.end()) continue;
        closed.push_back(p);
        for (PairState q : nfa.epsilon_from(p)) pending.push_back(q);
    }
    return StateSet::of(std::move(closed));
}

}  // namespace oasm
