// oasm -- overlap assembly of regular languages from the command line:
// automaton pipelines on text files, witness generation, bound experiments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oasm/oasm.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw oasm::AutomataError("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw oasm::AutomataError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw oasm::AutomataError("failed writing '" + path + "'");
}

oasm::Dfa load_dfa(const std::string& path) {
    try {
        return oasm::parse_automaton(read_file(path));
    } catch (const oasm::ParseError& e) {
        throw oasm::AutomataError(path + ":" + std::to_string(e.line) + ":" +
                                  std::to_string(e.column) + ": " + e.what());
    }
}

oasm::GridRange parse_range(const std::string& text) {
    oasm::GridRange range;
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            range.lo = range.hi = std::stoi(text);
        } else {
            range.lo = std::stoi(text.substr(0, dots));
            range.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw oasm::AutomataError("bad range '" + text + "', expected N or A..B");
    }
    if (range.lo > range.hi) throw oasm::AutomataError("empty range '" + text + "'");
    return range;
}

void emit_dfa(const oasm::Dfa& dfa, const std::string& path, const std::string& format) {
    write_file(path, format == "dot" ? oasm::to_dot(dfa) : oasm::render_automaton(dfa));
}

int run(int argc, char** argv) {
    CLI::App app{"overlap assembly of regular languages: construction, exact state complexity, "
                 "witness families, bound experiments"};
    app.require_subcommand(1);

    std::string left_path, right_path, in_path, out_path, format = "text", nfa_dot_path;
    unsigned seed = 1;
    int horizon = 6, trials = 200, max_states = 4, alphabet = 3;
    std::string m_text, n_text;

    auto* overlap = app.add_subcommand(
        "overlap", "build, determinize and minimize the overlap of two automata");
    overlap->add_option("left", left_path, "left automaton file")->required();
    overlap->add_option("right", right_path, "right automaton file")->required();
    overlap->add_option("--out", out_path, "output automaton file")->required();
    overlap->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "dot"}));
    overlap->add_option("--nfa-dot", nfa_dot_path,
                        "also write the intermediate epsilon-NFA as DOT");

    auto* minimize_cmd = app.add_subcommand("minimize", "minimize an automaton");
    minimize_cmd->add_option("input", in_path, "automaton file")->required();
    minimize_cmd->add_option("--out", out_path, "output automaton file")->required();
    minimize_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "dot"}));

    auto* sc_cmd = app.add_subcommand("sc", "print the state complexity of an automaton's language");
    sc_cmd->add_option("input", in_path, "automaton file")->required();

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "list accepted words up to the horizon, shortest first");
    enumerate_cmd->add_option("input", in_path, "automaton file")->required();
    enumerate_cmd->add_option("--horizon", horizon, "maximum word length");
    enumerate_cmd->add_option("--out", out_path, "write words here instead of stdout");

    std::string kind;
    std::vector<int> params;
    auto* witness = app.add_subcommand("witness", "generate a witness automaton");
    witness->add_option("kind", kind, "family")
        ->required()
        ->check(CLI::IsMember({"general-left", "general-right", "binary-left", "binary-right",
                               "unary-left", "unary-right", "unary-finite"}));
    witness->add_option("params", params, "family parameters (m and/or n)")->expected(1, 2);
    witness->add_option("--out", out_path, "output automaton file")->required();
    witness->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "dot"}));

    std::string suite;
    auto* experiment = app.add_subcommand("experiment", "run a measurement suite, write CSV");
    experiment->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"general", "unary", "binary", "alphabet", "conformance"}));
    experiment->add_option("--m", m_text, "grid range for m, e.g. 2..4");
    experiment->add_option("--n", n_text, "grid range for n, e.g. 3..4");
    experiment->add_option("--seed", seed, "random seed (conformance)");
    experiment->add_option("--trials", trials, "trial count (conformance)");
    experiment->add_option("--horizon", horizon, "oracle horizon (conformance)");
    experiment->add_option("--max-states", max_states, "operand state bound (conformance)");
    experiment->add_option("--alphabet", alphabet, "operand alphabet size (conformance)");
    experiment->add_option("--out", out_path, "CSV output file");

    auto* export_dot = app.add_subcommand("export-dot", "render an automaton file as DOT");
    export_dot->add_option("input", in_path, "automaton file")->required();
    export_dot->add_option("--out", out_path, "output DOT file")->required();

    CLI11_PARSE(app, argc, argv);

    if (overlap->parsed()) {
        oasm::Dfa a = load_dfa(left_path);
        oasm::Dfa b = load_dfa(right_path);
        oasm::EpsilonNfa nfa = oasm::build_overlap_nfa(a, b);
        if (!nfa_dot_path.empty()) write_file(nfa_dot_path, oasm::to_dot(nfa));
        oasm::Dfa result = oasm::minimize(oasm::determinize(nfa));
        emit_dfa(result, out_path, format);
        std::cout << result.state_count() << '\n';
        return 0;
    }
    if (minimize_cmd->parsed()) {
        oasm::Dfa result = oasm::minimize(load_dfa(in_path));
        emit_dfa(result, out_path, format);
        std::cout << result.state_count() << '\n';
        return 0;
    }
    if (sc_cmd->parsed()) {
        std::cout << oasm::state_complexity(load_dfa(in_path)) << '\n';
        return 0;
    }
    if (enumerate_cmd->parsed()) {
        oasm::BoundedLanguage lang = oasm::enumerate_language(load_dfa(in_path), horizon);
        std::ostringstream lines;
        for (const oasm::Word& w : lang.words) lines << oasm::render_word(w) << '\n';
        if (out_path.empty())
            std::cout << lines.str();
        else
            write_file(out_path, lines.str());
        return 0;
    }
    if (witness->parsed()) {
        auto need = [&](std::size_t n_params) {
            if (params.size() != n_params)
                throw oasm::AutomataError("witness " + kind + " takes " +
                                          std::to_string(n_params) + " parameter(s)");
        };
        std::optional<oasm::Dfa> dfa;
        if (kind == "general-left") {
            need(2);
            dfa = oasm::make_general_left(params[0], params[1]);
        } else if (kind == "general-right") {
            need(1);
            dfa = oasm::make_general_right(params[0]);
        } else if (kind == "binary-left") {
            need(1);
            dfa = oasm::make_binary_left(params[0]);
        } else if (kind == "binary-right") {
            need(1);
            dfa = oasm::make_binary_right(params[0]);
        } else if (kind == "unary-left") {
            need(2);
            dfa = oasm::make_unary_witnesses(params[0], params[1]).first;
        } else if (kind == "unary-right") {
            need(2);
            dfa = oasm::make_unary_witnesses(params[0], params[1]).second;
        } else {  // unary-finite
            need(1);
            dfa = oasm::make_unary_finite(params[0]);
        }
        emit_dfa(*dfa, out_path, format);
        return 0;
    }
    if (experiment->parsed()) {
        std::vector<oasm::ExperimentRecord> records;
        auto range_or = [&](const std::string& text, int lo, int hi) {
            return text.empty() ? oasm::GridRange{lo, hi} : parse_range(text);
        };
        try {
            if (suite == "general") {
                records = oasm::run_general_grid(range_or(m_text, 2, 4), range_or(n_text, 3, 4));
            } else if (suite == "unary") {
                records = oasm::run_unary_grid(range_or(m_text, 1, 6), range_or(n_text, 1, 6));
            } else if (suite == "binary") {
                records = oasm::run_binary_grid(range_or(m_text, 2, 3), range_or(n_text, 3, 5));
            } else if (suite == "alphabet") {
                oasm::AlphabetCheckResult result = oasm::exhaustive_alphabet_check();
                long long ceiling = oasm::general_upper_bound(2, 3);
                records.push_back({"alphabet", 2, 3, result.max_state_complexity, ceiling,
                                   oasm::Relation::at_most, 0.0});
                std::cout << "max overlap state complexity over two letters: "
                          << result.max_state_complexity << " < " << ceiling << " ("
                          << result.pairs_checked << " of " << result.pairs_total
                          << " pairs had exact operand complexities)\n";
            } else {  // conformance
                oasm::ConformanceSummary summary =
                    oasm::random_conformance(trials, max_states, alphabet, horizon, seed);
                records = summary.records;
                std::cout << "conformance: " << summary.trials << " trials, 0 failures, ceiling "
                          << "checked on " << summary.bound_checked << ", skipped (operand "
                          << "complexity 1) on " << summary.bound_skipped << '\n';
            }
        } catch (const oasm::ExperimentError& e) {
            if (!out_path.empty()) write_file(out_path, oasm::to_csv(e.valid_records));
            std::cerr << "error: " << e.what() << '\n';
            return 1;
        }
        if (!out_path.empty()) write_file(out_path, oasm::to_csv(records));
        if (suite != "alphabet" && suite != "conformance")
            std::cout << suite << ": " << records.size() << " record(s), all bounds hold\n";
        return 0;
    }
    if (export_dot->parsed()) {
        write_file(out_path, oasm::to_dot(load_dfa(in_path)));
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
