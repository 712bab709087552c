// Subset construction over the overlap epsilon-NFA.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "oasm/automaton.hpp"
#include "oasm/nfa.hpp"

namespace oasm {

// The subset automaton together with the subset behind each DFA state, so
// callers can inspect the reachable subsets (structure checks, counting).
struct Determinized {
    Dfa dfa;
    std::vector<StateSet> subsets;  // subsets[i] is the subset numbered i
};

// Breadth-first subset construction starting from an arbitrary seed subset
// (closed under epsilon first). Subsets are numbered in discovery order,
// expanding symbols in index order; if the empty subset is ever produced it
// becomes an explicit sink so the result stays complete.
inline Determinized determinize_from(const EpsilonNfa& nfa, const StateSet& seed) {
    const int k = nfa.alphabet_size();
    std::vector<StateSet> subsets{epsilon_closure(nfa, seed)};
    std::map<StateSet, int> ids{{subsets[0], 0}};
    std::vector<int> trans;
    std::vector<int> finals;

    for (std::size_t i = 0; i < subsets.size(); ++i) {
        StateSet current = subsets[i];  // copy: subsets reallocates below
        bool is_final = false;
        for (PairState p : current) is_final = is_final || nfa.is_final(p);
        if (is_final) finals.push_back(static_cast<int>(i));
        for (int s = 0; s < k; ++s) {
            std::vector<PairState> moved;
            for (PairState p : current)
                for (PairState q : nfa.moves_from(p, s)) moved.push_back(q);
            StateSet target = epsilon_closure(nfa, StateSet::of(std::move(moved)));
            auto [it, inserted] = ids.try_emplace(target, static_cast<int>(subsets.size()));
            if (inserted) subsets.push_back(std::move(target));
            trans.push_back(it->second);
        }
    }
    Dfa dfa(static_cast<int>(subsets.size()), k, std::move(trans), 0, std::move(finals));
    return Determinized{std::move(dfa), std::move(subsets)};
}

inline Determinized determinize_full(const EpsilonNfa& nfa) {
    return determinize_from(nfa, StateSet::of({nfa.initial()}));
}

// Complete DFA accepting the language of the NFA, states numbered
// breadth-first from the initial subset.
inline Dfa determinize(const EpsilonNfa& nfa) { return determinize_full(nfa).dfa; }

}  // namespace oasm
