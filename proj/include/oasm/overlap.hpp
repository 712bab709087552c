// Overlap assembly: the word-level operation, the epsilon-NFA construction
// realizing it on regular languages, and the selector/core/subcore view of
// the subsets arising during determinization.
#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "oasm/automaton.hpp"
#include "oasm/determinize.hpp"
#include "oasm/minimize.hpp"
#include "oasm/nfa.hpp"

namespace oasm {

// All words u v w with x = uv, y = vw and v nonempty. Every result z
// satisfies max(|x|,|y|) <= |z| <= |x|+|y|-1.
inline WordSet word_overlap(const Word& x, const Word& y) {
    WordSet out;
    std::size_t max_v = std::min(x.size(), y.size());
    for (std::size_t v = 1; v <= max_v; ++v) {
        if (x.compare(x.size() - v, v, y, 0, v) == 0) out.insert(x + y.substr(v));
    }
    return out;
}

// Builds the product epsilon-NFA whose language is L(left) (.) L(right).
//
// Transitions, for every letter a:
//   (q, s')  -a-> (left(q,a), s')              left automaton reads alone
//   (q, s')  -a-> (left(q,a), right(0',a))     right automaton joins in
//   (q, p')  -a-> (left(q,a), right(p',a))     both read the shared part
//   (f, p')  -e-> (t, p')       for f final    left automaton signs off
//   (t, p')  -a-> (t, right(p',a))             right automaton reads alone
inline EpsilonNfa build_overlap_nfa(const Dfa& left, const Dfa& right) {
    if (left.alphabet_size() != right.alphabet_size())
        throw AlphabetMismatch("build_overlap_nfa: operand alphabets differ (" +
                               std::to_string(left.alphabet_size()) + " vs " +
                               std::to_string(right.alphabet_size()) + ")");
    const int k = left.alphabet_size();
    const std::int32_t t = PairState::left_done;
    const std::int32_t idle = PairState::right_idle;

    std::vector<NfaTransition> moves;
    std::vector<NfaEpsilonTransition> eps;
    for (int q = 0; q < left.state_count(); ++q) {
        for (int a = 0; a < k; ++a) {
            int lq = left.next(q, a);
            moves.push_back({{q, idle}, a, {lq, idle}});
            moves.push_back({{q, idle}, a, {lq, right.next(right.initial(), a)}});
            for (int p = 0; p < right.state_count(); ++p)
                moves.push_back({{q, p}, a, {lq, right.next(p, a)}});
        }
        if (left.is_final(q))
            for (int p = 0; p < right.state_count(); ++p) eps.push_back({{q, p}, {t, p}});
    }
    for (int p = 0; p < right.state_count(); ++p)
        for (int a = 0; a < k; ++a) moves.push_back({{t, p}, a, {t, right.next(p, a)}});

    std::vector<PairState> finals;
    for (int p : right.final_states()) finals.push_back({t, p});
    return EpsilonNfa(left.state_count(), right.state_count(), k, std::move(moves),
                      std::move(eps), std::move(finals));
}

// The full pipeline: construct, determinize, minimize.
inline Dfa overlap_automaton(const Dfa& left, const Dfa& right) {
    return minimize(determinize(build_overlap_nfa(left, right)));
}

// A reachable determinization subset always looks like
//     {(q,s')}  u  ({q} x S')  u  ({t} x T'),
// for a single left state q. The decomposition separates q (selector),
// S' without the right initial state (core), T' (subcore), and whether
// (q, 0') itself is present (has_zero).
struct SubsetDecomposition {
    int selector = 0;
    std::vector<int> core;     // sorted, never contains 0
    std::vector<int> subcore;  // sorted
    bool has_zero = false;
};

// Splits a subset into the form above. Throws SubsetFormError, naming the
// violated clause, when the subset does not have that shape; in particular
// the empty sink subset is not decomposable.
inline SubsetDecomposition decompose_subset(const StateSet& s, const Dfa& left) {
    SubsetDecomposition d;
    int selector = -1;
    for (PairState p : s) {
        if (p.second != PairState::right_idle) continue;
        if (p.first == PairState::left_done)
            throw SubsetFormError("decompose_subset: contains the non-constructible pair (t,s')");
        if (selector >= 0)
            throw SubsetFormError("decompose_subset: two distinct selector pairs (" +
                                  std::to_string(selector) + ",s') and " + to_string(p));
        selector = p.first;
    }
    if (selector < 0)
        throw SubsetFormError("decompose_subset: no selector pair (q,s') present");
    if (selector >= left.state_count())
        throw SubsetFormError("decompose_subset: selector " + std::to_string(selector) +
                              " is not a state of the left automaton");
    d.selector = selector;
    for (PairState p : s) {
        if (p.second == PairState::right_idle) continue;
        if (p.first == PairState::left_done) {
            d.subcore.push_back(p.second);
        } else if (p.first != selector) {
            throw SubsetFormError("decompose_subset: two distinct left states " +
                                  std::to_string(selector) + " and " + std::to_string(p.first));
        } else if (p.second == 0) {
            d.has_zero = true;
        } else {
            d.core.push_back(p.second);
        }
    }
    std::sort(d.core.begin(), d.core.end());
    std::sort(d.subcore.begin(), d.subcore.end());
    for (int p : d.subcore)
        if (p != 0 && !std::binary_search(d.core.begin(), d.core.end(), p))
            throw SubsetFormError("decompose_subset: subcore state " + std::to_string(p) +
                                  "' outside core u {0'}");
    return d;
}

// Checks that the subset automaton cannot tell `s` apart from
// `s u {(q,0')}` where q is the (non-final) selector of s. Requires a
// subset that decomposes with a non-final selector and no (q,0') pair.
inline bool merged_pair_equivalent(const Dfa& left, const Dfa& right, const StateSet& s) {
    SubsetDecomposition d = decompose_subset(s, left);
    if (left.is_final(d.selector))
        throw AutomataError("merged_pair_equivalent: selector " + std::to_string(d.selector) +
                            " is final; the closure already carries (t,0')");
    if (d.has_zero)
        throw AutomataError("merged_pair_equivalent: subset already contains (q,0')");
    EpsilonNfa nfa = build_overlap_nfa(left, right);
    std::vector<PairState> enlarged(s.begin(), s.end());
    enlarged.push_back(PairState{d.selector, 0});
    Dfa plain = determinize_from(nfa, s).dfa;
    Dfa merged = determinize_from(nfa, StateSet::of(std::move(enlarged))).dfa;
    return equivalent(plain, merged);
}

}  // namespace oasm
