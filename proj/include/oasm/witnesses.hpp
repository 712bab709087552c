// Witness DFA families whose overlap assembly attains (or bounds) the worst
// case, and the closed-form state-count bounds they are measured against.
#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "oasm/automaton.hpp"

namespace oasm {

namespace detail {

// Assembles a DFA from one permutation-or-function table per letter.
inline Dfa from_letter_actions(int states, const std::vector<std::vector<int>>& actions,
                               std::vector<int> finals) {
    const int k = static_cast<int>(actions.size());
    std::vector<int> trans(static_cast<std::size_t>(states) * k);
    for (int q = 0; q < states; ++q)
        for (int a = 0; a < k; ++a)
            trans[static_cast<std::size_t>(q) * k + a] = actions[static_cast<std::size_t>(a)][static_cast<std::size_t>(q)];
    return Dfa(states, k, std::move(trans), 0, std::move(finals));
}

inline std::vector<int> identity_action(int states) {
    std::vector<int> v(static_cast<std::size_t>(states));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

inline std::vector<int> full_cycle_action(int states) {
    std::vector<int> v(static_cast<std::size_t>(states));
    for (int q = 0; q < states; ++q) v[static_cast<std::size_t>(q)] = (q + 1) % states;
    return v;
}

// Permutation given in cycle notation over all listed states.
inline std::vector<int> cycle_action(int states, const std::vector<int>& cycle) {
    std::vector<int> v = identity_action(states);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        v[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    return v;
}

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace detail

// Left witness over n letters: state 0 is final, letter a_1 cycles all m
// states, every other letter is the identity.
inline Dfa make_general_left(int m, int n) {
    if (m < 2) throw std::invalid_argument("make_general_left: m must be at least 2");
    if (n < 3) throw std::invalid_argument("make_general_left: n must be at least 3");
    std::vector<std::vector<int>> actions(static_cast<std::size_t>(n), detail::identity_action(m));
    actions[1] = detail::full_cycle_action(m);
    return detail::from_letter_actions(m, actions, {0});
}

// Right witness over n letters: state n-1 is final, a_0 resets every state
// to 0, and a_i (i >= 1) is the n-cycle (1, 2, ..., i-1, 0, i, ..., n-1).
inline Dfa make_general_right(int n) {
    if (n < 3) throw std::invalid_argument("make_general_right: n must be at least 3");
    std::vector<std::vector<int>> actions;
    actions.push_back(std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i < n; ++i) {
        std::vector<int> cycle;
        for (int p = 1; p < i; ++p) cycle.push_back(p);
        cycle.push_back(0);
        for (int p = i; p < n; ++p) cycle.push_back(p);
        actions.push_back(detail::cycle_action(n, cycle));
    }
    return detail::from_letter_actions(n, actions, {n - 1});
}

// Binary left witness: a_0 identity, a_1 the full m-cycle, state 0 final.
inline Dfa make_binary_left(int m) {
    if (m < 2) throw std::invalid_argument("make_binary_left: m must be at least 2");
    return detail::from_letter_actions(
        m, {detail::identity_action(m), detail::full_cycle_action(m)}, {0});
}

// Binary right witness: a_0 fixes 0 and cycles (1, ..., n-1), a_1 cycles all
// n states, state n-1 final.
inline Dfa make_binary_right(int n) {
    if (n < 3) throw std::invalid_argument("make_binary_right: n must be at least 3");
    std::vector<int> outer;
    for (int p = 1; p < n; ++p) outer.push_back(p);
    return detail::from_letter_actions(
        n, {detail::cycle_action(n, outer), detail::full_cycle_action(n)}, {n - 1});
}

// Unary witness pair: pure cycles of m and n states whose finals are chosen
// so the left accepts lengths congruent to n-1 mod m and the right lengths
// congruent to m-1 mod n. Each is minimal.
inline std::pair<Dfa, Dfa> make_unary_witnesses(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("make_unary_witnesses: m and n must be at least 1");
    Dfa left = detail::from_letter_actions(m, {detail::full_cycle_action(m)}, {(n - 1) % m});
    Dfa right = detail::from_letter_actions(n, {detail::full_cycle_action(n)}, {(m - 1) % n});
    return {std::move(left), std::move(right)};
}

// Minimal complete unary DFA for the singleton {a^longest}: a path of
// longest+1 states followed by a sink, so longest+2 states in total.
inline Dfa make_unary_finite(int longest) {
    if (longest < 0) throw std::invalid_argument("make_unary_finite: longest must be >= 0");
    const int states = longest + 2;
    std::vector<int> action(static_cast<std::size_t>(states));
    for (int q = 0; q < states; ++q) action[static_cast<std::size_t>(q)] = std::min(q + 1, states - 1);
    return detail::from_letter_actions(states, {action}, {longest});
}

// Worst-case state count of the overlap of languages with state
// complexities m and n: 2(m-1)3^(n-1) + 2^n.
inline long long general_upper_bound(int m, int n) {
    if (m < 2) throw std::invalid_argument("general_upper_bound: m must be at least 2");
    if (n < 1) throw std::invalid_argument("general_upper_bound: n must be at least 1");
    return 2 * (m - 1) * detail::ipow(3, n - 1) + detail::ipow(2, n);
}

// Count of subsets of selector/core/subcore shape that can arise during
// determinization when the left automaton has f final states:
// (m-f)(3^n - 1) + f(2^n - 1) + 1.
inline long long reachable_count_bound(int m, int n, int f) {
    if (m < 1 || n < 1 || f < 1 || f > m)
        throw std::invalid_argument("reachable_count_bound: need m,n >= 1 and 1 <= f <= m");
    return (m - f) * (detail::ipow(3, n) - 1) + f * (detail::ipow(2, n) - 1) + 1;
}

// Count after merging the subsets that provably collapse:
// (m-f) * 2 * 3^(n-1) + f(2^n - 1) + 1. Maximized at f = 1, where it equals
// general_upper_bound.
inline long long distinguishable_count_bound(int m, int n, int f) {
    if (m < 1 || n < 1 || f < 1 || f > m)
        throw std::invalid_argument("distinguishable_count_bound: need m,n >= 1 and 1 <= f <= m");
    return (m - f) * 2 * detail::ipow(3, n - 1) + f * (detail::ipow(2, n) - 1) + 1;
}

// Floor on the overlap state complexity reachable with binary witnesses:
// m(2^(n-1) - 2) + 2.
inline long long binary_lower_bound(int m, int n) {
    if (m < 2) throw std::invalid_argument("binary_lower_bound: m must be at least 2");
    if (n < 3) throw std::invalid_argument("binary_lower_bound: n must be at least 3");
    return m * (detail::ipow(2, n - 1) - 2) + 2;
}

}  // namespace oasm
