// Line-based text format for automata and DOT rendering.
//
//   # comment
//   dfa <state_count> <alphabet_size> <initial>
//   finals <i> <j> ...
//   trans <state> <target_for_a0> <target_for_a1> ...
//
// One trans line per state; '#' starts a comment anywhere on a line.
#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "oasm/automaton.hpp"
#include "oasm/nfa.hpp"

namespace oasm {

namespace detail {

struct Token {
    std::string_view text;
    int line;
    int column;
};

inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start)
                tokens.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lines;
}

inline int parse_int(const Token& t, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || value < 0)
        throw ParseError("expected " + std::string(what) + ", got '" + std::string(t.text) + "'",
                         t.line, t.column);
    return value;
}

}  // namespace detail

// Parses the text format. Errors carry the 1-based line/column of the
// offending token.
inline Dfa parse_automaton(std::string_view text) {
    auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty input, expected a 'dfa' header", 1, 1);

    const auto& header = lines[0];
    if (header[0].text != "dfa")
        throw ParseError("expected 'dfa' header", header[0].line, header[0].column);
    if (header.size() != 4)
        throw ParseError("header needs exactly: dfa <states> <alphabet> <initial>",
                         header[0].line, header[0].column);
    int states = detail::parse_int(header[1], "state count");
    int alphabet = detail::parse_int(header[2], "alphabet size");
    int initial = detail::parse_int(header[3], "initial state");
    if (states < 1) throw ParseError("state count must be positive", header[1].line, header[1].column);
    if (alphabet < 1)
        throw ParseError("alphabet size must be positive", header[2].line, header[2].column);
    if (initial >= states)
        throw ParseError("initial state out of range", header[3].line, header[3].column);

    if (lines.size() < 2 || lines[1][0].text != "finals")
        throw ParseError("expected a 'finals' line after the header",
                         lines.size() < 2 ? header[0].line + 1 : lines[1][0].line,
                         lines.size() < 2 ? 1 : lines[1][0].column);
    std::vector<int> finals;
    for (std::size_t i = 1; i < lines[1].size(); ++i) {
        int f = detail::parse_int(lines[1][i], "final state index");
        if (f >= states)
            throw ParseError("final state out of range", lines[1][i].line, lines[1][i].column);
        finals.push_back(f);
    }

    std::vector<int> trans(static_cast<std::size_t>(states) * alphabet);
    std::vector<bool> covered(static_cast<std::size_t>(states), false);
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const auto& row = lines[li];
        if (row[0].text != "trans")
            throw ParseError("expected a 'trans' line, got '" + std::string(row[0].text) + "'",
                             row[0].line, row[0].column);
        if (row.size() != static_cast<std::size_t>(alphabet) + 2)
            throw ParseError("trans line needs a state index and one target per letter",
                             row[0].line, row[0].column);
        int state = detail::parse_int(row[1], "state index");
        if (state >= states)
            throw ParseError("state index out of range", row[1].line, row[1].column);
        if (covered[static_cast<std::size_t>(state)])
            throw ParseError("duplicate trans line for state " + std::to_string(state),
                             row[1].line, row[1].column);
        covered[static_cast<std::size_t>(state)] = true;
        for (int a = 0; a < alphabet; ++a) {
            int target = detail::parse_int(row[static_cast<std::size_t>(a) + 2], "target state");
            if (target >= states)
                throw ParseError("transition target out of range", row[static_cast<std::size_t>(a) + 2].line,
                                 row[static_cast<std::size_t>(a) + 2].column);
            trans[static_cast<std::size_t>(state) * alphabet + a] = target;
        }
    }
    for (int q = 0; q < states; ++q)
        if (!covered[static_cast<std::size_t>(q)]) {
            int last_line = lines.back()[0].line;
            throw ParseError("missing trans line for state " + std::to_string(q), last_line, 1);
        }
    return Dfa(states, alphabet, std::move(trans), initial, std::move(finals));
}

inline std::string render_automaton(const Dfa& dfa) {
    std::ostringstream out;
    out << "dfa " << dfa.state_count() << ' ' << dfa.alphabet_size() << ' ' << dfa.initial()
        << '\n';
    out << "finals";
    for (int f : dfa.final_states()) out << ' ' << f;
    out << '\n';
    for (int q = 0; q < dfa.state_count(); ++q) {
        out << "trans " << q;
        for (int a = 0; a < dfa.alphabet_size(); ++a) out << ' ' << dfa.next(q, a);
        out << '\n';
    }
    return out.str();
}

// DOT graph: one node per state (doubled border on finals, arrow into the
// initial state), one edge per (state, symbol), in index order.
inline std::string to_dot(const Dfa& dfa) {
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  __init [shape=point];\n";
    for (int q = 0; q < dfa.state_count(); ++q)
        out << "  " << q << " [shape=" << (dfa.is_final(q) ? "doublecircle" : "circle") << "];\n";
    out << "  __init -> " << dfa.initial() << ";\n";
    for (int q = 0; q < dfa.state_count(); ++q)
        for (int a = 0; a < dfa.alphabet_size(); ++a)
            out << "  " << q << " -> " << dfa.next(q, a) << " [label=\"" << render_symbol(a)
                << "\"];\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const EpsilonNfa& nfa) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n  __init [shape=point];\n";
    std::vector<PairState> states = nfa.states();
    auto node_id = [&states](PairState p) {
        return static_cast<int>(std::lower_bound(states.begin(), states.end(), p) - states.begin());
    };
    for (std::size_t i = 0; i < states.size(); ++i)
        out << "  n" << i << " [label=\"" << to_string(states[i]) << "\" shape="
            << (nfa.is_final(states[i]) ? "doublecircle" : "circle") << "];\n";
    out << "  __init -> n" << node_id(nfa.initial()) << ";\n";
    for (const NfaTransition& t : nfa.all_transitions())
        out << "  n" << node_id(t.from) << " -> n" << node_id(t.to) << " [label=\""
            << render_symbol(t.symbol) << "\"];\n";
    for (const NfaEpsilonTransition& e : nfa.all_epsilon_transitions())
        out << "  n" << node_id(e.from) << " -> n" << node_id(e.to)
            << " [label=\"ε\" style=dashed];\n";
    out << "}\n";
    return out.str();
}

}  // namespace oasm
