#include <catch2/catch_amalgamated.hpp>

#include "oasm/experiments.hpp"
#include "oasm/oracle.hpp"
#include "oasm/overlap.hpp"

#include "fixtures.hpp"

using namespace oasm;
using fixtures::w;

namespace {
constexpr std::int32_t T = PairState::left_done;
constexpr std::int32_t S = PairState::right_idle;
}  // namespace

TEST_CASE("word overlap enumerates the shared-part splits") {
    CHECK(word_overlap(w("a"), w("a")) == WordSet{w("a")});
    CHECK(word_overlap(w("ab"), w("ba")) == WordSet{w("aba")});
    CHECK(word_overlap(w("ab"), w("cd")).empty());

    SECTION("both splits of aa with aa") {
        CHECK(word_overlap(w("aa"), w("aa")) == WordSet{w("aaa"), w("aa")});
    }
    SECTION("the empty word cannot take part") {
        CHECK(word_overlap(Word{}, w("a")).empty());
        CHECK(word_overlap(w("a"), Word{}).empty());
        CHECK(word_overlap(Word{}, Word{}).empty());
    }
    SECTION("length window and result count") {
        std::mt19937 rng(29);
        for (int i = 0; i < 300; ++i) {
            Word x, y;
            for (unsigned j = rng() % 7u; j > 0; --j) x.push_back(static_cast<char>(rng() % 2u));
            for (unsigned j = rng() % 7u; j > 0; --j) y.push_back(static_cast<char>(rng() % 2u));
            WordSet products = word_overlap(x, y);
            CHECK(products.size() <= std::min(x.size(), y.size()));
            for (const Word& z : products) {
                CHECK(z.size() >= std::max(x.size(), y.size()));
                CHECK(z.size() <= x.size() + y.size() - 1);
            }
        }
    }
}

TEST_CASE("the product nfa of the running example, edge by edge") {
    EpsilonNfa nfa = build_overlap_nfa(fixtures::odd_as(), fixtures::ends_in_a());

    CHECK(nfa.states().size() == 8);  // (t,s') excluded
    CHECK(nfa.initial() == PairState{0, S});
    CHECK(nfa.finals() == std::vector<PairState>{{T, 1}});

    std::vector<NfaTransition> expected{
        {{0, S}, 0, {1, S}}, {{0, S}, 0, {1, 1}},  // left alone / right joins
        {{0, S}, 1, {0, S}}, {{0, S}, 1, {0, 0}},
        {{0, 0}, 0, {1, 1}}, {{0, 0}, 1, {0, 0}},  // both read
        {{0, 1}, 0, {1, 1}}, {{0, 1}, 1, {0, 0}},
        {{1, S}, 0, {0, S}}, {{1, S}, 0, {0, 1}},
        {{1, S}, 1, {1, S}}, {{1, S}, 1, {1, 0}},
        {{1, 0}, 0, {0, 1}}, {{1, 0}, 1, {1, 0}},
        {{1, 1}, 0, {0, 1}}, {{1, 1}, 1, {1, 0}},
        {{T, 0}, 0, {T, 1}}, {{T, 0}, 1, {T, 0}},  // right alone
        {{T, 1}, 0, {T, 1}}, {{T, 1}, 1, {T, 0}},
    };
    std::sort(expected.begin(), expected.end());
    CHECK(nfa.all_transitions() == expected);

    std::vector<NfaEpsilonTransition> eps{{{1, 0}, {T, 0}}, {{1, 1}, {T, 1}}};
    CHECK(nfa.all_epsilon_transitions() == eps);
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_AS(build_overlap_nfa(fixtures::odd_as(), fixtures::sigma_star(3)),
                    AlphabetMismatch);
    SECTION("an empty right language leaves the finals unreachable") {
        Dfa result = overlap_automaton(fixtures::odd_as(), fixtures::empty_language(2, 2));
        CHECK(result.state_count() == 1);
        CHECK(result.final_states().empty());
    }
    SECTION("one-state operands accepting everything overlap to the nonempty words") {
        Dfa result = overlap_automaton(fixtures::sigma_star(2), fixtures::sigma_star(2));
        CHECK(result == fixtures::sigma_plus(2));
    }
    SECTION("an operand language of just the empty word contributes nothing") {
        Dfa just_empty = fixtures::unary_finite_set({0});
        Dfa other = fixtures::sigma_star(1);
        CHECK(state_complexity(overlap_automaton(just_empty, other)) == 1);
        CHECK(state_complexity(overlap_automaton(other, just_empty)) == 1);
    }
}

TEST_CASE("accepted words factor through both operands and vice versa") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int alphabet = 2 + static_cast<int>(rng() % 2u);
        Dfa a = random_dfa(rng, 3, alphabet);
        Dfa b = random_dfa(rng, 3, alphabet);
        Dfa result = overlap_automaton(a, b);

        BoundedLanguage la = enumerate_language(a, 6);
        BoundedLanguage lb = enumerate_language(b, 6);

        // sampled joint factorizations are accepted
        for (const Word& x : la.words)
            for (const Word& y : lb.words)
                for (const Word& z : word_overlap(x, y))
                    if (z.size() <= 6) CHECK(accepts(result, z));

        // every accepted word factors as uv / vw with nonempty v
        for (const Word& z : enumerate_language(result, 6).words) {
            bool factors = false;
            for (std::size_t i = 0; i < z.size() && !factors; ++i)
                for (std::size_t j = i + 1; j <= z.size() && !factors; ++j)
                    factors = accepts(a, z.substr(0, j)) && accepts(b, z.substr(i));
            CHECK(factors);
        }
    }
}

TEST_CASE("subset decomposition") {
    Dfa left = fixtures::odd_as();

    SECTION("documented shapes") {
        SubsetDecomposition d = decompose_subset(StateSet::of({{0, S}, {0, 0}}), left);
        CHECK(d.selector == 0);
        CHECK(d.core.empty());
        CHECK(d.subcore.empty());
        CHECK(d.has_zero);

        d = decompose_subset(StateSet::of({{1, S}, {1, 1}, {T, 1}}), left);
        CHECK(d.selector == 1);
        CHECK(d.core == std::vector<int>{1});
        CHECK(d.subcore == std::vector<int>{1});
        CHECK_FALSE(d.has_zero);

        d = decompose_subset(StateSet::of({{0, S}}), left);
        CHECK(d.selector == 0);
        CHECK(d.core.empty());
        CHECK(d.subcore.empty());
        CHECK_FALSE(d.has_zero);
    }
    SECTION("violations name the broken clause") {
        auto message = [&left](const StateSet& s) {
            try {
                decompose_subset(s, left);
            } catch (const SubsetFormError& e) {
                return std::string(e.what());
            }
            return std::string{};
        };
        CHECK(message(StateSet::of({{0, S}, {1, S}})).find("two distinct selector") !=
              std::string::npos);
        CHECK(message(StateSet::of({{0, S}, {0, 1}, {1, 1}})).find("two distinct left states") !=
              std::string::npos);
        CHECK(message(StateSet::of({{0, S}, {T, 1}})).find("outside core") != std::string::npos);
        CHECK(message(StateSet{}).find("no selector pair") != std::string::npos);
        CHECK(message(StateSet::of({{0, 1}})).find("no selector pair") != std::string::npos);
        CHECK(message(StateSet::of({{T, S}})).find("non-constructible") != std::string::npos);
        // subcore membership via (q,0') alone is fine: 0' needs no core entry
        CHECK_NOTHROW(decompose_subset(StateSet::of({{0, S}, {0, 0}, {T, 0}}), left));
    }
}

TEST_CASE("a missing (q,0') never separates subsets with a non-final selector") {
    Dfa left = fixtures::odd_as();
    Dfa right = fixtures::ends_in_a();

    SECTION("preconditions") {
        // selector 1 is final in the left operand
        CHECK_THROWS_AS(
            merged_pair_equivalent(left, right, StateSet::of({{1, S}, {1, 1}, {T, 1}})),
            AutomataError);
        // (q,0') already present
        CHECK_THROWS_AS(merged_pair_equivalent(left, right, StateSet::of({{0, S}, {0, 0}})),
                        AutomataError);
    }
    SECTION("exhaustively over the reachable subsets of the running example") {
        Determinized det = determinize_full(build_overlap_nfa(left, right));
        int checked = 0;
        for (const StateSet& subset : det.subsets) {
            SubsetDecomposition d = decompose_subset(subset, left);
            if (left.is_final(d.selector) || d.has_zero) continue;
            ++checked;
            CHECK(merged_pair_equivalent(left, right, subset));
        }
        CHECK(checked == 2);  // {(0,s')} and {(0,s'),(0,1'),(t,1')}
    }
    SECTION("and over a witness pair large enough to have many subset shapes") {
        Dfa wl = make_general_left(3, 4);
        Dfa wr = make_general_right(4);
        Determinized det = determinize_full(build_overlap_nfa(wl, wr));
        int checked = 0;
        for (const StateSet& subset : det.subsets) {
            SubsetDecomposition d = decompose_subset(subset, wl);
            if (wl.is_final(d.selector) || d.has_zero) continue;
            ++checked;
            REQUIRE(merged_pair_equivalent(wl, wr, subset));
        }
        CHECK(checked > 10);
    }
}
