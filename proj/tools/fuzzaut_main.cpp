/* fuzzaut_main.cpp -- command-line front end.
 *
 * One verb per invocation; reports go to standard output (or --output FILE)
 * in a deterministic, byte-stable form. Exit codes:
 *   0  property holds / equivalent / success
 *   1  property fails / not equivalent (the report names a counterexample)
 *   2  usage or input error
 *   3  undecided (a fixpoint hit its iteration cap)
 */

#include "fuzzaut/bisim.hpp"
#include "fuzzaut/json_io.hpp"
#include "fuzzaut/ufb.hpp"
#include "fuzzaut/uniform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace fuzzaut;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::string count_noun(std::size_t n, const std::string& singular,
                       const std::string& plural)
{
    return std::to_string(n) + " " + (n == 1 ? singular : plural);
}

std::string format_set(const Lattice& lattice, const FuzzySet& s)
{
    std::vector<std::string> parts;
    parts.reserve(s.size());
    for (const Value& v : s.values)
        parts.push_back(lattice.format(v));
    return join(parts, " ");
}

std::string format_matrix(const Lattice& lattice, const FuzzyRelation& r,
                          const std::string& indent)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < r.rows; ++i) {
        out << indent;
        for (std::size_t j = 0; j < r.cols; ++j) {
            if (j > 0)
                out << ' ';
            out << lattice.format(r.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string format_automaton(const Lattice& lattice, const FuzzyAutomaton& a)
{
    std::ostringstream out;
    out << "states (" << a.size() << "): " << join(a.states, ", ") << '\n';
    out << "alphabet: " << join(a.alphabet, ", ") << '\n';
    out << "sigma: " << format_set(lattice, a.sigma) << '\n';
    out << "tau: " << format_set(lattice, a.tau) << '\n';
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        out << "delta " << a.alphabet[x] << ":\n";
        out << format_matrix(lattice, a.delta[x], "  ");
    }
    return out.str();
}

std::string format_word(const Word& w)
{
    return w.empty() ? "(empty word)" : join(w, ",");
}

/// Splits --word text into alphabet symbols: empty text is the empty word,
/// comma-separated text lists symbols explicitly, and any other text is
/// taken as one whole symbol if the alphabet contains it, otherwise one
/// symbol per character.
Word parse_word(const std::string& text, const FuzzyAutomaton& a)
{
    Word w;
    if (text.empty())
        return w;
    if (text.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            const std::string token = text.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (token.empty())
                throw Error("word: empty symbol between commas");
            w.push_back(token);
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return w;
    }
    if (std::find(a.alphabet.begin(), a.alphabet.end(), text) != a.alphabet.end()) {
        w.push_back(text);
        return w;
    }
    for (char c : text)
        w.push_back(std::string(1, c));
    return w;
}

/// Writes the report to --output FILE when given, otherwise to stdout.
void emit(const std::string& report, const std::string& output_path)
{
    if (output_path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
        throw Error(output_path + ": cannot open for writing");
    out << report;
    if (!out)
        throw Error(output_path + ": write failed");
}

/// Copies the fields of an automaton document into a report object, so the
/// report itself is loadable as an automaton file.
void put_automaton_fields(ordered_json& report, const Lattice& lattice,
                          const FuzzyAutomaton& a)
{
    const ordered_json doc = automaton_to_json(lattice, a);
    for (const auto& item : doc.items())
        report[item.key()] = item.value();
}

struct CommonOptions {
    std::string format = "text";
    std::string output;
};

bool is_json(const CommonOptions& opt) { return opt.format == "json"; }

// --- verb handlers ---------------------------------------------------------

int run_check(const std::string& path_a, const std::string& path_b,
              const std::string& path_rel, const std::string& kind_text,
              const CommonOptions& opt)
{
    const BisimKind kind = bisim_kind_from_string(kind_text);
    AutomatonFile fa = load_automaton(path_a);
    AutomatonFile fb = load_automaton(path_b);
    const FuzzyRelation phi = load_relation(path_rel, fa.lattice);
    const CheckResult res =
        check_relation(fa.lattice, fa.automaton, fb.automaton, phi, kind);

    std::ostringstream out;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "check";
        report["kind"] = to_string(kind);
        report["holds"] = res.holds;
        if (!res.holds) {
            const Violation& v = *res.violation;
            ordered_json vio;
            vio["condition"] = v.condition;
            vio["expression"] = v.expression;
            vio["row"] = v.row;
            vio["row_state"] = v.row_label;
            if (!v.col_label.empty()) {
                vio["col"] = v.col;
                vio["col_state"] = v.col_label;
            }
            vio["lhs"] = value_to_json(fa.lattice, v.lhs);
            vio["rhs"] = value_to_json(fa.lattice, v.rhs);
            report["violation"] = std::move(vio);
        }
        out << render_json(report);
    } else {
        out << "check " << to_string(kind) << ": " << (res.holds ? "holds" : "fails")
            << '\n';
        if (!res.holds) {
            const Violation& v = *res.violation;
            out << "condition: " << v.condition << '\n';
            out << "expression: " << v.expression << '\n';
            if (v.col_label.empty())
                out << "at: state " << v.row_label << " (index " << v.row << ")\n";
            else
                out << "at: (" << v.row_label << ", " << v.col_label << ") (indices "
                    << v.row << ", " << v.col << ")\n";
            out << "lhs: " << fa.lattice.format(v.lhs) << '\n';
            out << "rhs: " << fa.lattice.format(v.rhs) << '\n';
        }
    }
    emit(out.str(), opt.output);
    return res.holds ? kExitHolds : kExitFails;
}

int report_fixpoint(const std::string& verb, const Lattice& lattice,
                    BisimKind kind, const FixpointReport& rep, std::size_t cap,
                    const CommonOptions& opt)
{
    std::ostringstream out;
    int code = kExitHolds;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = verb;
        report["kind"] = to_string(kind);
        if (!rep.converged) {
            report["outcome"] = "undecided";
            report["iterations"] = rep.iterations;
            code = kExitUndecided;
        } else if (!rep.result) {
            report["outcome"] = "none";
            report["reason"] = to_string(rep.failure);
            report["iterations"] = rep.iterations;
            code = kExitFails;
        } else {
            report["outcome"] = "found";
            report["iterations"] = rep.iterations;
            // lattice + entries make the report loadable as a relation file.
            report["lattice"] = lattice_to_json(lattice);
            report["entries"] = matrix_to_json(lattice, *rep.result);
        }
        out << render_json(report);
    } else {
        if (!rep.converged) {
            out << verb << ' ' << to_string(kind) << ": undecided (iteration cap "
                << cap << " reached)\n";
            code = kExitUndecided;
        } else if (!rep.result) {
            out << verb << ' ' << to_string(kind) << ": none (reason: "
                << to_string(rep.failure) << ")\n";
            out << "iterations: " << rep.iterations << '\n';
            code = kExitFails;
        } else {
            out << verb << ' ' << to_string(kind) << ": found in "
                << count_noun(rep.iterations, "iteration", "iterations") << '\n';
            out << "relation (" << rep.result->rows << "x" << rep.result->cols
                << "):\n";
            out << format_matrix(lattice, *rep.result, "  ");
        }
    }
    emit(out.str(), opt.output);
    return code;
}

int run_greatest(const std::string& path_a, const std::string& path_b,
                 const std::string& kind_text, std::size_t cap,
                 const CommonOptions& opt)
{
    const BisimKind kind = bisim_kind_from_string(kind_text);
    AutomatonFile fa = load_automaton(path_a);
    AutomatonFile fb = load_automaton(path_b);
    const bool plain_sim =
        kind == BisimKind::forward_sim || kind == BisimKind::backward_sim;
    const FixpointReport rep =
        plain_sim ? greatest_simulation(fa.lattice, fa.automaton, fb.automaton, kind, cap)
                  : greatest_bisimulation(fa.lattice, fa.automaton, fb.automaton, kind, cap);
    return report_fixpoint("greatest", fa.lattice, kind, rep, cap, opt);
}

int run_greatest_equiv(const std::string& path_a, const std::string& kind_text,
                       std::size_t cap, const CommonOptions& opt)
{
    const BisimKind kind = bisim_kind_from_string(kind_text);
    AutomatonFile fa = load_automaton(path_a);
    const FixpointReport rep =
        greatest_bisim_equivalence(fa.lattice, fa.automaton, kind, cap);
    return report_fixpoint("greatest-equiv", fa.lattice, kind, rep, cap, opt);
}

int run_factor(const std::string& path_a, const std::string& path_equiv,
               const CommonOptions& opt)
{
    AutomatonFile fa = load_automaton(path_a);
    const FuzzyRelation e = load_relation(path_equiv, fa.lattice);
    const FactorAutomaton factor = factor_automaton(fa.lattice, fa.automaton, e);

    std::ostringstream out;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "factor";
        report["class_count"] = factor.quotient.size();
        put_automaton_fields(report, fa.lattice, factor.quotient);
        out << render_json(report);
    } else {
        out << "factor: " << count_noun(factor.quotient.size(), "class", "classes")
            << '\n';
        out << format_automaton(fa.lattice, factor.quotient);
    }
    emit(out.str(), opt.output);
    return kExitHolds;
}

int run_reduce(const std::string& path_a, std::size_t cap, const CommonOptions& opt)
{
    AutomatonFile fa = load_automaton(path_a);
    const ReduceResult res = reduce(fa.lattice, fa.automaton, cap);

    std::ostringstream out;
    int code = kExitHolds;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "reduce";
        if (!res.factor) {
            report["outcome"] = "undecided";
            report["iterations"] = res.equivalence_report.iterations;
            code = kExitUndecided;
        } else {
            report["outcome"] = "reduced";
            report["iterations"] = res.equivalence_report.iterations;
            report["class_count"] = res.factor->quotient.size();
            put_automaton_fields(report, fa.lattice, res.factor->quotient);
        }
        out << render_json(report);
    } else {
        if (!res.factor) {
            out << "reduce: undecided (iteration cap " << cap << " reached)\n";
            code = kExitUndecided;
        } else {
            out << "reduce: " << count_noun(res.factor->quotient.size(), "class", "classes")
                << " from " << count_noun(fa.automaton.size(), "state", "states")
                << " in "
                << count_noun(res.equivalence_report.iterations, "iteration", "iterations")
                << '\n';
            out << format_automaton(fa.lattice, res.factor->quotient);
        }
    }
    emit(out.str(), opt.output);
    return code;
}

int run_ufb_equiv(const std::string& path_a, const std::string& path_b,
                  std::size_t cap, const CommonOptions& opt)
{
    AutomatonFile fa = load_automaton(path_a);
    AutomatonFile fb = load_automaton(path_b);
    const UfbVerdict verdict = ufb_equivalent(fa.lattice, fa.automaton, fb.automaton, cap);

    std::ostringstream out;
    int code = kExitHolds;
    if (verdict.outcome == UfbOutcome::not_equivalent)
        code = kExitFails;
    else if (verdict.outcome == UfbOutcome::undecided)
        code = kExitUndecided;

    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "ufb-equiv";
        report["outcome"] = to_string(verdict.outcome);
        if (verdict.e)
            report["e"] = relation_to_json(fa.lattice, *verdict.e);
        if (verdict.f)
            report["f"] = relation_to_json(fa.lattice, *verdict.f);
        if (verdict.factor_a)
            report["factor_a"] = automaton_to_json(fa.lattice, verdict.factor_a->quotient);
        if (verdict.factor_b)
            report["factor_b"] = automaton_to_json(fa.lattice, verdict.factor_b->quotient);
        if (verdict.iso) {
            ordered_json iso = ordered_json::array();
            for (std::size_t i = 0; i < verdict.iso->size(); ++i)
                iso.push_back(verdict.factor_b->quotient.states[(*verdict.iso)[i]]);
            report["isomorphism"] = std::move(iso);
        }
        if (verdict.witness)
            report["witness"] = relation_to_json(fa.lattice, *verdict.witness);
        out << render_json(report);
    } else {
        switch (verdict.outcome) {
        case UfbOutcome::equivalent:
            out << "ufb-equiv: equivalent\n";
            break;
        case UfbOutcome::not_equivalent:
            out << "ufb-equiv: not-equivalent"
                << " (no compatible isomorphism between the factor automata)\n";
            break;
        case UfbOutcome::undecided:
            out << "ufb-equiv: undecided (iteration cap " << cap << " reached)\n";
            break;
        }
        if (verdict.e) {
            out << "greatest forward-bisim equivalence on A (" << verdict.e->rows
                << "x" << verdict.e->cols << "):\n";
            out << format_matrix(fa.lattice, *verdict.e, "  ");
        }
        if (verdict.f) {
            out << "greatest forward-bisim equivalence on B (" << verdict.f->rows
                << "x" << verdict.f->cols << "):\n";
            out << format_matrix(fa.lattice, *verdict.f, "  ");
        }
        if (verdict.factor_a)
            out << "factor of A: "
                << count_noun(verdict.factor_a->quotient.size(), "class", "classes")
                << ": " << join(verdict.factor_a->quotient.states, ", ") << '\n';
        if (verdict.factor_b)
            out << "factor of B: "
                << count_noun(verdict.factor_b->quotient.size(), "class", "classes")
                << ": " << join(verdict.factor_b->quotient.states, ", ") << '\n';
        if (verdict.iso) {
            out << "isomorphism:\n";
            for (std::size_t i = 0; i < verdict.iso->size(); ++i)
                out << "  " << verdict.factor_a->quotient.states[i] << " -> "
                    << verdict.factor_b->quotient.states[(*verdict.iso)[i]] << '\n';
        }
        if (verdict.witness) {
            out << "witness (" << verdict.witness->rows << "x"
                << verdict.witness->cols << "):\n";
            out << format_matrix(fa.lattice, *verdict.witness, "  ");
        }
    }
    emit(out.str(), opt.output);
    return code;
}

int run_lang(const std::string& path_a, const std::string& word_text,
             const CommonOptions& opt)
{
    AutomatonFile fa = load_automaton(path_a);
    const Word w = parse_word(word_text, fa.automaton);
    const Value v = language_value(fa.lattice, fa.automaton, w);

    std::ostringstream out;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "lang";
        report["word"] = w;
        report["value"] = value_to_json(fa.lattice, v);
        out << render_json(report);
    } else {
        out << fa.lattice.format(v) << '\n';
    }
    emit(out.str(), opt.output);
    return kExitHolds;
}

int run_lang_eq(const std::string& path_a, const std::string& path_b,
                std::size_t max_len, const CommonOptions& opt)
{
    AutomatonFile fa = load_automaton(path_a);
    AutomatonFile fb = load_automaton(path_b);
    const LanguageComparison cmp =
        language_equal_bounded(fa.lattice, fa.automaton, fb.automaton, max_len);

    std::ostringstream out;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "lang-eq";
        report["max_len"] = max_len;
        report["equal"] = cmp.equal;
        if (!cmp.equal) {
            report["counterexample"] = *cmp.counterexample;
            report["lhs"] = value_to_json(fa.lattice, cmp.lhs);
            report["rhs"] = value_to_json(fa.lattice, cmp.rhs);
        }
        out << render_json(report);
    } else {
        if (cmp.equal) {
            out << "lang-eq: equal up to length " << max_len << '\n';
        } else {
            out << "lang-eq: languages differ\n";
            out << "word: " << format_word(*cmp.counterexample) << '\n';
            out << "lhs: " << fa.lattice.format(cmp.lhs) << '\n';
            out << "rhs: " << fa.lattice.format(cmp.rhs) << '\n';
        }
    }
    emit(out.str(), opt.output);
    return cmp.equal ? kExitHolds : kExitFails;
}

int run_reverse(const std::string& path_a, const CommonOptions& opt)
{
    AutomatonFile fa = load_automaton(path_a);
    const FuzzyAutomaton rev = reverse(fa.automaton);

    std::ostringstream out;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "reverse";
        put_automaton_fields(report, fa.lattice, rev);
        out << render_json(report);
    } else {
        out << "reverse:\n";
        out << format_automaton(fa.lattice, rev);
    }
    emit(out.str(), opt.output);
    return kExitHolds;
}

std::string describe_witness(const UniformClassification& c)
{
    if (c.failed_check == "L-function")
        return "row " + std::to_string(c.witness.at(0));
    if (c.failed_check == "surjectivity")
        return "column " + std::to_string(c.witness.at(0));
    return "(" + std::to_string(c.witness.at(0)) + ", " + std::to_string(c.witness.at(1))
        + ")";
}

int run_classify(const std::string& path_rel, const CommonOptions& opt)
{
    RelationFile file = load_standalone_relation(path_rel);
    const UniformClassification c = classify(file.lattice, file.relation);

    std::ostringstream out;
    if (is_json(opt)) {
        ordered_json report;
        report["verb"] = "classify";
        report["uniform"] = c.is_uniform;
        report["l_function"] = c.is_L_function;
        report["surjective"] = c.is_surjective;
        report["partial_fuzzy_function"] = c.is_partial_fuzzy_function;
        if (!c.is_uniform) {
            report["failed_check"] = c.failed_check;
            report["witness"] = c.witness;
        }
        out << render_json(report);
    } else {
        out << "classify: " << (c.is_uniform ? "uniform" : "not uniform") << '\n';
        out << "L-function: " << (c.is_L_function ? "yes" : "no") << '\n';
        out << "surjective: " << (c.is_surjective ? "yes" : "no") << '\n';
        out << "partial fuzzy function: " << (c.is_partial_fuzzy_function ? "yes" : "no")
            << '\n';
        if (!c.is_uniform) {
            out << "failed check: " << c.failed_check << '\n';
            out << "witness: " << describe_witness(c) << '\n';
        }
    }
    emit(out.str(), opt.output);
    return c.is_uniform ? kExitHolds : kExitFails;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "fuzzaut -- simulations, bisimulations and reductions of fuzzy automata\n"
        "over complete residuated lattices, with exact rational arithmetic"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string path_a;
    std::string path_b;
    std::string path_rel;
    std::string path_equiv;
    std::string kind_text = "forward-bisim"; // overwritten wherever --kind is required
    std::string word_text;
    std::size_t max_len = 6;
    std::size_t cap = 1000;

    const std::vector<std::string> kind_names = {
        "forward-sim",      "backward-sim",     "forward-bisim",
        "backward-bisim",   "forward-backward", "backward-forward"};

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "Report format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--output", common.output,
                        "Write the report to this file instead of standard output");
    };
    const auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--iteration-cap", cap, "Fixpoint iteration cap")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* check_cmd = app.add_subcommand(
        "check", "Check that a relation is a simulation or bisimulation of the given kind");
    check_cmd->add_option("a", path_a, "Automaton A file")->required();
    check_cmd->add_option("b", path_b, "Automaton B file")->required();
    check_cmd->add_option("--rel", path_rel,
                          "Relation file (rows = states of A, columns = states of B)")
        ->required();
    check_cmd->add_option("--kind", kind_text, "Relation kind")
        ->check(CLI::IsMember(kind_names))
        ->required();
    add_common(check_cmd);

    CLI::App* greatest_cmd = app.add_subcommand(
        "greatest", "Compute the greatest simulation or bisimulation from A to B");
    greatest_cmd->add_option("a", path_a, "Automaton A file")->required();
    greatest_cmd->add_option("b", path_b, "Automaton B file")->required();
    greatest_cmd->add_option("--kind", kind_text, "Relation kind")
        ->check(CLI::IsMember(kind_names))
        ->required();
    add_cap(greatest_cmd);
    add_common(greatest_cmd);

    CLI::App* greatest_equiv_cmd = app.add_subcommand(
        "greatest-equiv",
        "Compute the greatest forward or backward bisimulation fuzzy equivalence");
    greatest_equiv_cmd->add_option("a", path_a, "Automaton file")->required();
    greatest_equiv_cmd
        ->add_option("--kind", kind_text, "forward-bisim or backward-bisim")
        ->check(CLI::IsMember({"forward-bisim", "backward-bisim"}))
        ->capture_default_str();
    add_cap(greatest_equiv_cmd);
    add_common(greatest_equiv_cmd);

    CLI::App* factor_cmd = app.add_subcommand(
        "factor", "Factor an automaton by a fuzzy equivalence");
    factor_cmd->add_option("a", path_a, "Automaton file")->required();
    factor_cmd->add_option("--equiv", path_equiv, "Fuzzy equivalence file")->required();
    add_common(factor_cmd);

    CLI::App* reduce_cmd = app.add_subcommand(
        "reduce",
        "Factor an automaton by its greatest forward bisimulation fuzzy equivalence");
    reduce_cmd->add_option("a", path_a, "Automaton file")->required();
    add_cap(reduce_cmd);
    add_common(reduce_cmd);

    CLI::App* ufb_cmd = app.add_subcommand(
        "ufb-equiv",
        "Decide whether a uniform forward bisimulation exists between two automata");
    ufb_cmd->add_option("a", path_a, "Automaton A file")->required();
    ufb_cmd->add_option("b", path_b, "Automaton B file")->required();
    add_cap(ufb_cmd);
    add_common(ufb_cmd);

    CLI::App* lang_cmd = app.add_subcommand(
        "lang", "Print the membership value of a word in the fuzzy language");
    lang_cmd->add_option("a", path_a, "Automaton file")->required();
    lang_cmd->add_option(
        "--word", word_text,
        "Word: one symbol per character, or comma-separated symbols; empty = empty word");
    add_common(lang_cmd);

    CLI::App* lang_eq_cmd = app.add_subcommand(
        "lang-eq", "Compare fuzzy languages on all words up to a length bound");
    lang_eq_cmd->add_option("a", path_a, "Automaton A file")->required();
    lang_eq_cmd->add_option("b", path_b, "Automaton B file")->required();
    lang_eq_cmd->add_option("--max-len", max_len, "Word length bound")
        ->capture_default_str();
    add_common(lang_eq_cmd);

    CLI::App* reverse_cmd = app.add_subcommand(
        "reverse", "Reverse an automaton (transposed transitions, swapped ends)");
    reverse_cmd->add_option("a", path_a, "Automaton file")->required();
    add_common(reverse_cmd);

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "Classify a relation: L-function, surjective, partial fuzzy "
                    "function, uniform");
    classify_cmd->add_option("rel", path_rel,
                             "Self-describing relation file ({\"lattice\", \"entries\"})")
        ->required();
    add_common(classify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*check_cmd)
            return run_check(path_a, path_b, path_rel, kind_text, common);
        if (*greatest_cmd)
            return run_greatest(path_a, path_b, kind_text, cap, common);
        if (*greatest_equiv_cmd)
            return run_greatest_equiv(path_a, kind_text, cap, common);
        if (*factor_cmd)
            return run_factor(path_a, path_equiv, common);
        if (*reduce_cmd)
            return run_reduce(path_a, cap, common);
        if (*ufb_cmd)
            return run_ufb_equiv(path_a, path_b, cap, common);
        if (*lang_cmd)
            return run_lang(path_a, word_text, common);
        if (*lang_eq_cmd)
            return run_lang_eq(path_a, path_b, max_len, common);
        if (*reverse_cmd)
            return run_reverse(path_a, common);
        if (*classify_cmd)
            return run_classify(path_rel, common);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
