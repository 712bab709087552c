// Shared fixtures: the running two-state example pair (odd number of a's,
// ends in a) and a few degenerate automata.
#pragma once

#include <string_view>

#include "oasm/automaton.hpp"

namespace fixtures {

// Letters a, b, c, ... to symbol indices 0, 1, 2, ...
inline oasm::Word w(std::string_view letters) {
    oasm::Word out;
    for (char c : letters) out.push_back(static_cast<char>(c - 'a'));
    return out;
}

// Over {a,b}: words with an odd number of a's.
inline oasm::Dfa odd_as() {
    return oasm::Dfa(2, 2, {1, 0, 0, 1}, 0, {1});
}

// Over {a,b}: words ending in the letter a.
inline oasm::Dfa ends_in_a() {
    return oasm::Dfa(2, 2, {1, 0, 1, 0}, 0, {1});
}

inline oasm::Dfa sigma_star(int alphabet) {
    return oasm::Dfa(1, alphabet, std::vector<int>(static_cast<std::size_t>(alphabet), 0), 0, {0});
}

inline oasm::Dfa sigma_plus(int alphabet) {
    std::vector<int> trans;
    for (int a = 0; a < alphabet; ++a) trans.push_back(1);
    for (int a = 0; a < alphabet; ++a) trans.push_back(1);
    return oasm::Dfa(2, alphabet, std::move(trans), 0, {1});
}

// No final states; `states` lets callers exercise non-minimal shapes.
inline oasm::Dfa empty_language(int alphabet, int states = 1) {
    std::vector<int> trans;
    for (int q = 0; q < states; ++q)
        for (int a = 0; a < alphabet; ++a) trans.push_back((q + 1) % states);
    return oasm::Dfa(states, alphabet, std::move(trans), 0, {});
}

// Unary DFA accepting exactly the given word lengths; the longest length
// determines the path, everything beyond falls into a sink.
inline oasm::Dfa unary_finite_set(const std::vector<int>& lengths) {
    int longest = 0;
    for (int len : lengths) longest = std::max(longest, len);
    int states = longest + 2;
    std::vector<int> trans;
    for (int q = 0; q < states; ++q) trans.push_back(std::min(q + 1, states - 1));
    return oasm::Dfa(states, 1, std::move(trans), 0, lengths);
}

}  // namespace fixtures
