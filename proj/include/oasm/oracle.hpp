// Ground truth by bounded enumeration, straight from the word-level
// definition of overlap assembly. Deliberately ignorant of the epsilon-NFA
// construction so the two routes stay independent.
#pragma once

#include <utility>

#include "oasm/automaton.hpp"
#include "oasm/overlap.hpp"

namespace oasm {

struct BoundedLanguage {
    int alphabet_size = 1;
    int max_len = 0;
    WordSet words;  // shortlex order; every word has length <= max_len
};

// All accepted words of length <= max_len, shortlex order.
inline BoundedLanguage enumerate_language(const Dfa& dfa, int max_len) {
    BoundedLanguage lang{dfa.alphabet_size(), max_len, {}};
    std::vector<std::pair<Word, int>> frontier{{Word{}, dfa.initial()}};
    if (dfa.is_final(dfa.initial())) lang.words.insert(Word{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::pair<Word, int>> next;
        next.reserve(frontier.size() * static_cast<std::size_t>(dfa.alphabet_size()));
        for (const auto& [word, state] : frontier) {
            for (int s = 0; s < dfa.alphabet_size(); ++s) {
                Word extended = word;
                extended.push_back(static_cast<char>(s));
                int target = dfa.next(state, s);
                if (dfa.is_final(target)) lang.words.insert(extended);
                next.emplace_back(std::move(extended), target);
            }
        }
        frontier = std::move(next);
    }
    return lang;
}

// All words of length <= max_len in the overlap assembly of the two word
// sets, computed by pairwise word_overlap. Every product z satisfies
// max(|x|,|y|) <= |z|, so operands enumerated up to max_len suffice; an
// operand horizon shorter than max_len would silently truncate the result
// and is rejected.
inline BoundedLanguage brute_force_overlap(const BoundedLanguage& a, const BoundedLanguage& b,
                                           int max_len) {
    if (a.alphabet_size != b.alphabet_size)
        throw AlphabetMismatch("brute_force_overlap: operand alphabets differ");
    if (a.max_len < max_len || b.max_len < max_len)
        throw AutomataError("brute_force_overlap: operand horizon " +
                            std::to_string(std::min(a.max_len, b.max_len)) +
                            " shorter than requested " + std::to_string(max_len));
    BoundedLanguage out{a.alphabet_size, max_len, {}};
    for (const Word& x : a.words) {
        if (static_cast<int>(x.size()) > max_len) continue;
        for (const Word& y : b.words) {
            if (static_cast<int>(y.size()) > max_len) continue;
            for (const Word& z : word_overlap(x, y))
                if (static_cast<int>(z.size()) <= max_len) out.words.insert(z);
        }
    }
    return out;
}

}  // namespace oasm
