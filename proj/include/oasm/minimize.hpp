// DFA minimization by partition refinement, with a canonical numbering so
// that equal languages produce identical tables.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "oasm/automaton.hpp"

namespace oasm {

namespace detail {

// States reachable from the initial state, in breadth-first discovery order
// (symbols expanded in index order).
inline std::vector<int> reachable_states(const Dfa& dfa) {
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(dfa.state_count()), false);
    order.push_back(dfa.initial());
    seen[static_cast<std::size_t>(dfa.initial())] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int s = 0; s < dfa.alphabet_size(); ++s) {
            int t = dfa.next(order[i], s);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                order.push_back(t);
            }
        }
    }
    return order;
}

// Renumbers states breadth-first from the initial state. All emitted DFAs go
// through this, so isomorphic results compare equal with operator==.
inline Dfa canonical_renumber(const Dfa& dfa) {
    std::vector<int> order = reachable_states(dfa);  // covers all states of a trim DFA
    std::vector<int> new_id(static_cast<std::size_t>(dfa.state_count()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) new_id[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    const int n = static_cast<int>(order.size());
    const int k = dfa.alphabet_size();
    std::vector<int> trans(static_cast<std::size_t>(n) * k);
    std::vector<int> finals;
    for (int i = 0; i < n; ++i) {
        int old = order[static_cast<std::size_t>(i)];
        for (int s = 0; s < k; ++s)
            trans[static_cast<std::size_t>(i) * k + s] = new_id[static_cast<std::size_t>(dfa.next(old, s))];
        if (dfa.is_final(old)) finals.push_back(i);
    }
    return Dfa(n, k, std::move(trans), 0, std::move(finals));
}

}  // namespace detail

// Minimal complete DFA for the same language over the same alphabet:
// restrict to reachable states, refine the final/non-final partition until
// stable, then renumber the quotient breadth-first. Idempotent.
inline Dfa minimize(const Dfa& dfa) {
    const int k = dfa.alphabet_size();
    std::vector<int> order = detail::reachable_states(dfa);
    const int n = static_cast<int>(order.size());

    // Compact reachable transition table.
    std::vector<int> compact(static_cast<std::size_t>(dfa.state_count()), -1);
    for (int i = 0; i < n; ++i) compact[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<int> trans(static_cast<std::size_t>(n) * k);
    std::vector<bool> fin(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int old = order[static_cast<std::size_t>(i)];
        for (int s = 0; s < k; ++s)
            trans[static_cast<std::size_t>(i) * k + s] = compact[static_cast<std::size_t>(dfa.next(old, s))];
        fin[static_cast<std::size_t>(i)] = dfa.is_final(old);
    }

    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cls[static_cast<std::size_t>(i)] = fin[static_cast<std::size_t>(i)] ? 1 : 0;
    int class_count = 0;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        std::vector<int> sig(static_cast<std::size_t>(k) + 1);
        for (int i = 0; i < n; ++i) {
            sig[0] = cls[static_cast<std::size_t>(i)];
            for (int s = 0; s < k; ++s) sig[static_cast<std::size_t>(s) + 1] = cls[static_cast<std::size_t>(trans[static_cast<std::size_t>(i) * k + s])];
            auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
            (void)inserted;
            next_cls[static_cast<std::size_t>(i)] = it->second;
        }
        cls.swap(next_cls);
        if (static_cast<int>(ids.size()) == class_count) break;
        class_count = static_cast<int>(ids.size());
    }

    std::vector<int> rep(static_cast<std::size_t>(class_count), -1);
    for (int i = 0; i < n; ++i)
        if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])] < 0) rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])] = i;

    std::vector<int> qtrans(static_cast<std::size_t>(class_count) * k);
    std::vector<int> qfinals;
    for (int c = 0; c < class_count; ++c) {
        int r = rep[static_cast<std::size_t>(c)];
        for (int s = 0; s < k; ++s)
            qtrans[static_cast<std::size_t>(c) * k + s] = cls[static_cast<std::size_t>(trans[static_cast<std::size_t>(r) * k + s])];
        if (fin[static_cast<std::size_t>(r)]) qfinals.push_back(c);
    }
    Dfa quotient(class_count, k, std::move(qtrans), cls[0], std::move(qfinals));
    return detail::canonical_renumber(quotient);
}

// Number of states of the minimal complete DFA. Dead states count; the
// alphabet is taken as declared, with no letter-removal analysis.
inline int state_complexity(const Dfa& dfa) { return minimize(dfa).state_count(); }

}  // namespace oasm
