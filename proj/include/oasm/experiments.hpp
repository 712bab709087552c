// Measurement harness: sweeps the witness families over (m,n) grids and
// compares measured state complexity against the predicted bounds, runs the
// exhaustive two-letter search at (m,n) = (2,3), and cross-checks random
// pairs against the brute-force oracle.
#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oasm/minimize.hpp"
#include "oasm/io.hpp"
#include "oasm/oracle.hpp"
#include "oasm/overlap.hpp"
#include "oasm/witnesses.hpp"

namespace oasm {

enum class Relation { equal, at_least, at_most };

inline std::string to_string(Relation r) {
    switch (r) {
        case Relation::equal: return "equal";
        case Relation::at_least: return "at-least";
        case Relation::at_most: return "at-most";
    }
    return "?";
}

inline bool relation_holds(long long measured, Relation r, long long predicted) {
    switch (r) {
        case Relation::equal: return measured == predicted;
        case Relation::at_least: return measured >= predicted;
        case Relation::at_most: return measured <= predicted;
    }
    return false;
}

// One measured grid cell. Only records whose relation actually holds are
// ever constructed; a violated cell surfaces as an ExperimentError instead.
struct ExperimentRecord {
    std::string family;
    int m = 0;
    int n = 0;
    long long measured = 0;
    long long predicted = 0;
    Relation relation = Relation::equal;
    double elapsed_ms = 0.0;
};

// Raised when a measurement contradicts its predicted bound. Carries the
// records that did hold, so callers can still report them.
struct ExperimentError : AutomataError {
    ExperimentError(std::string msg, std::vector<ExperimentRecord> ok,
                    std::vector<std::string> bad)
        : AutomataError(std::move(msg)), valid_records(std::move(ok)), violations(std::move(bad)) {}
    std::vector<ExperimentRecord> valid_records;
    std::vector<std::string> violations;
};

struct GridRange {
    int lo = 0;
    int hi = -1;  // inclusive
};

// CSV with the fixed column order family,m,n,measured,predicted,relation,elapsed_ms.
inline std::string to_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream out;
    out << "family,m,n,measured,predicted,relation,elapsed_ms\n";
    char buf[32];
    for (const ExperimentRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
        out << r.family << ',' << r.m << ',' << r.n << ',' << r.measured << ',' << r.predicted
            << ',' << to_string(r.relation) << ',' << buf << '\n';
    }
    return out.str();
}

namespace detail {

class RecordSink {
public:
    void add(std::string family, int m, int n, long long measured, long long predicted,
             Relation relation, double elapsed_ms) {
        if (relation_holds(measured, relation, predicted)) {
            records_.push_back({std::move(family), m, n, measured, predicted, relation, elapsed_ms});
        } else {
            violations_.push_back(family + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                  ": measured " + std::to_string(measured) + " violates " +
                                  to_string(relation) + " " + std::to_string(predicted));
        }
    }

    std::vector<ExperimentRecord> finish(const char* suite) {
        if (!violations_.empty()) {
            std::string msg = std::string(suite) + ": " + std::to_string(violations_.size()) +
                              " bound violation(s)";
            for (const std::string& v : violations_) msg += "\n  " + v;
            throw ExperimentError(std::move(msg), std::move(records_), std::move(violations_));
        }
        return std::move(records_);
    }

private:
    std::vector<ExperimentRecord> records_;
    std::vector<std::string> violations_;
};

struct StopWatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace detail

// Measures the n-letter witness family; the result must hit the subset
// bound exactly.
inline std::vector<ExperimentRecord> run_general_grid(GridRange m_range, GridRange n_range) {
    detail::RecordSink sink;
    for (int m = m_range.lo; m <= m_range.hi; ++m)
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            detail::StopWatch watch;
            long long measured = state_complexity(
                overlap_automaton(make_general_left(m, n), make_general_right(n)));
            sink.add("general", m, n, measured, general_upper_bound(m, n), Relation::equal,
                     watch.ms());
        }
    return sink.finish("general grid");
}

// Unary families. Infinite-pair cells must equal m+n; finite-pair cells
// (both operands singletons a^(m-2), a^(n-2)) must equal m+n-3; mixed cells
// (infinite left, finite right) are bounded by n-1 when m <= n-2 and by
// m+n-2 otherwise.
inline std::vector<ExperimentRecord> run_unary_grid(GridRange m_range, GridRange n_range) {
    detail::RecordSink sink;
    for (int m = m_range.lo; m <= m_range.hi; ++m)
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            if (m < 1 || n < 1) throw std::invalid_argument("run_unary_grid: m,n must be >= 1");
            {
                detail::StopWatch watch;
                auto [left, right] = make_unary_witnesses(m, n);
                long long measured = state_complexity(overlap_automaton(left, right));
                sink.add("unary-infinite", m, n, measured, m + n, Relation::equal, watch.ms());
            }
            if (m >= 2 && n >= 2) {
                detail::StopWatch watch;
                long long measured = state_complexity(
                    overlap_automaton(make_unary_finite(m - 2), make_unary_finite(n - 2)));
                sink.add("unary-finite", m, n, measured, m + n - 3, Relation::equal, watch.ms());
            }
            if (n >= 2) {
                detail::StopWatch watch;
                Dfa left = make_unary_witnesses(m, n).first;
                long long measured =
                    state_complexity(overlap_automaton(left, make_unary_finite(n - 2)));
                long long bound = m <= n - 2 ? n - 1 : m + n - 2;
                sink.add("unary-mixed", m, n, measured, bound, Relation::at_most, watch.ms());
            }
        }
    return sink.finish("unary grid");
}

// Two-letter witness family; the measurement must reach the binary floor
// and stay within the general ceiling.
inline std::vector<ExperimentRecord> run_binary_grid(GridRange m_range, GridRange n_range) {
    detail::RecordSink sink;
    for (int m = m_range.lo; m <= m_range.hi; ++m)
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            detail::StopWatch watch;
            long long measured =
                state_complexity(overlap_automaton(make_binary_left(m), make_binary_right(n)));
            double elapsed = watch.ms();
            sink.add("binary", m, n, measured, binary_lower_bound(m, n), Relation::at_least,
                     elapsed);
            sink.add("binary-ceiling", m, n, measured, general_upper_bound(m, n),
                     Relation::at_most, 0.0);
        }
    return sink.finish("binary grid");
}

// Every complete DFA with the given shape: initial state 0, all transition
// tables, all final sets (the empty one included).
inline std::vector<Dfa> enumerate_complete_dfas(int states, int alphabet) {
    std::vector<Dfa> out;
    const int cells = states * alphabet;
    long long tables = detail::ipow(states, cells);
    long long final_sets = detail::ipow(2, states);
    out.reserve(static_cast<std::size_t>(tables * final_sets));
    std::vector<int> trans(static_cast<std::size_t>(cells), 0);
    for (long long t = 0; t < tables; ++t) {
        long long code = t;
        for (int c = 0; c < cells; ++c) {
            trans[static_cast<std::size_t>(c)] = static_cast<int>(code % states);
            code /= states;
        }
        for (long long mask = 0; mask < final_sets; ++mask) {
            std::vector<int> finals;
            for (int q = 0; q < states; ++q)
                if (mask >> q & 1) finals.push_back(q);
            out.emplace_back(states, alphabet, trans, 0, std::move(finals));
        }
    }
    return out;
}

struct AlphabetCheckResult {
    long long pairs_total = 0;     // before filtering to exact state complexities
    long long pairs_checked = 0;   // pairs actually run through the pipeline
    int max_state_complexity = 0;
    std::optional<Dfa> best_left;  // a pair attaining the maximum
    std::optional<Dfa> best_right;
};

// Sweeps every pair of a complete 2-state and 3-state binary DFA (operands
// filtered to state complexities exactly 2 and 3) and returns the largest
// overlap state complexity seen. Over two letters the general bound of 26
// is unreachable; finding it anyway signals an implementation bug, so that
// case throws.
inline AlphabetCheckResult exhaustive_alphabet_check() {
    std::vector<Dfa> lefts = enumerate_complete_dfas(2, 2);
    std::vector<Dfa> rights = enumerate_complete_dfas(3, 2);
    AlphabetCheckResult result;
    result.pairs_total = static_cast<long long>(lefts.size()) * static_cast<long long>(rights.size());

    std::vector<Dfa> lefts_exact, rights_exact;
    for (const Dfa& a : lefts)
        if (state_complexity(a) == 2) lefts_exact.push_back(a);
    for (const Dfa& b : rights)
        if (state_complexity(b) == 3) rights_exact.push_back(b);

    const long long ceiling = general_upper_bound(2, 3);
    for (const Dfa& a : lefts_exact)
        for (const Dfa& b : rights_exact) {
            ++result.pairs_checked;
            int sc = state_complexity(determinize(build_overlap_nfa(a, b)));
            if (sc > result.max_state_complexity) {
                result.max_state_complexity = sc;
                result.best_left = a;
                result.best_right = b;
            }
        }
    if (result.max_state_complexity >= ceiling)
        throw AutomataError(
            "exhaustive_alphabet_check: two-letter pair reached the n-letter bound " +
            std::to_string(ceiling) + "; left:\n" + render_automaton(*result.best_left) +
            "right:\n" + render_automaton(*result.best_right));
    return result;
}

// Uniform complete DFA: 1..max_states states, total transition table,
// nonempty final set, initial state 0.
inline Dfa random_dfa(std::mt19937& rng, int max_states, int alphabet) {
    int states = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_states));
    std::vector<int> trans(static_cast<std::size_t>(states) * alphabet);
    for (int& t : trans) t = static_cast<int>(rng() % static_cast<unsigned>(states));
    unsigned long long mask =
        1 + rng() % ((1ull << states) - 1);  // never the empty final set
    std::vector<int> finals;
    for (int q = 0; q < states; ++q)
        if (mask >> q & 1) finals.push_back(q);
    return Dfa(states, alphabet, std::move(trans), 0, std::move(finals));
}

// Asserts the selector/core/subcore shape of one reachable subset, plus the
// closure facts that make the shape tight: the subcore sits inside the core
// (0' included only when (q,0') is present), a final selector forces the
// subcore to equal the core, and only the initial subset may have an empty
// core. Returns an explanation when a check fails.
inline std::optional<std::string> check_subset_shape(const StateSet& subset, const Dfa& left,
                                                     const EpsilonNfa& nfa) {
    SubsetDecomposition d;
    try {
        d = decompose_subset(subset, left);
    } catch (const SubsetFormError& e) {
        return std::string(e.what());
    }
    std::vector<int> s_prime = d.core;
    if (d.has_zero) s_prime.insert(s_prime.begin(), 0);
    for (int p : d.subcore)
        if (!std::binary_search(s_prime.begin(), s_prime.end(), p))
            return "subcore state " + std::to_string(p) + "' outside S'";
    if (left.is_final(d.selector) && d.subcore != s_prime)
        return "final selector " + std::to_string(d.selector) + " but subcore != S'";
    if (s_prime.empty() && subset != StateSet::of({nfa.initial()}))
        return "non-initial subset with empty S'";
    return std::nullopt;
}

struct ConformanceSummary {
    int trials = 0;
    int bound_checked = 0;  // trials whose minimized left operand has >= 2 states
    int bound_skipped = 0;
    std::vector<ExperimentRecord> records;
};

// Per trial: draw a random DFA pair, compare the constructed overlap
// automaton against the brute-force oracle up to the horizon, check the
// shape of every reachable determinization subset, and check the ceiling
// bound on the minimized operands. Any disagreement throws with both
// operands serialized. Identical seeds give identical trial sequences.
inline ConformanceSummary random_conformance(int trials, int max_states, int alphabet,
                                             int horizon, unsigned seed) {
    if (horizon < 1) throw std::invalid_argument("random_conformance: horizon must be >= 1");
    std::mt19937 rng(seed);
    ConformanceSummary summary;
    for (int trial = 0; trial < trials; ++trial) {
        detail::StopWatch watch;
        Dfa a = random_dfa(rng, max_states, alphabet);
        Dfa b = random_dfa(rng, max_states, alphabet);
        auto fail = [&](const std::string& why) {
            throw AutomataError("random_conformance: trial " + std::to_string(trial) + " (seed " +
                                std::to_string(seed) + "): " + why + "\nleft:\n" +
                                render_automaton(a) + "right:\n" + render_automaton(b));
        };

        EpsilonNfa nfa = build_overlap_nfa(a, b);
        Determinized det = determinize_full(nfa);
        Dfa overlap = minimize(det.dfa);

        BoundedLanguage expected =
            brute_force_overlap(enumerate_language(a, horizon), enumerate_language(b, horizon), horizon);
        BoundedLanguage actual = enumerate_language(overlap, horizon);
        if (actual.words != expected.words)
            fail("construction disagrees with the brute-force oracle up to length " +
                 std::to_string(horizon));

        for (const StateSet& subset : det.subsets)
            if (auto why = check_subset_shape(subset, a, nfa)) fail(*why);

        Dfa min_a = minimize(a);
        Dfa min_b = minimize(b);
        int m = min_a.state_count();
        int n = min_b.state_count();
        if (m >= 2) {
            ++summary.bound_checked;
            long long ceiling = general_upper_bound(m, n);
            if (overlap.state_count() > ceiling)
                fail("overlap state complexity " + std::to_string(overlap.state_count()) +
                     " above ceiling " + std::to_string(ceiling));
            summary.records.push_back({"conformance", m, n, overlap.state_count(), ceiling,
                                       Relation::at_most, watch.ms()});
        } else {
            ++summary.bound_skipped;
        }
        ++summary.trials;
    }
    return summary;
}

}  // namespace oasm
