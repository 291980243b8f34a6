#include "spalg/checks.hpp"
#include "spalg/exprio.hpp"
#include "spalg/machine.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace spalg;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string session_path;
    std::string format = "text";
};

SessionSpec load(const CommonOptions& opt) {
    if (opt.session_path.empty())
        throw SessionError("--session <file> is required");
    return load_session_file(opt.session_path);
}

void print_poly(const SuperPolynomial& value, const std::string& format) {
    if (format == "machine")
        std::cout << to_machine_encoding(value);
    else
        std::cout << format_canonical(value) << "\n";
}

void print_series(const FormalSeries& value, const std::string& format) {
    if (format == "machine") {
        std::cout << to_machine_encoding(value);
        return;
    }
    for (std::size_t k = 0; k <= value.order(); ++k)
        std::cout << "order " << k << ": " << format_canonical(value.coeff(k)) << "\n";
    std::cout << "series: " << format_series(value) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for supercommutative polynomial superalgebras:\n"
                 "canonical and Dirac superbrackets, truncated star products, and a\n"
                 "deterministic randomized verification harness."};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    CommonOptions opt;
    app.add_option("--session", opt.session_path, "session file (see docs/formats.md)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string expr_f, expr_g;
    long long order_override = -1;

    auto* bracket_cmd = app.add_subcommand("bracket", "canonical superbracket {f,g}");
    bracket_cmd->add_option("f", expr_f, "left operand")->required();
    bracket_cmd->add_option("g", expr_g, "right operand")->required();

    auto* dirac_cmd = app.add_subcommand("dirac", "Dirac superbracket over the session constraints");
    dirac_cmd->add_option("f", expr_f, "left operand")->required();
    dirac_cmd->add_option("g", expr_g, "right operand")->required();

    auto* star_cmd = app.add_subcommand("star", "truncated star product f * g");
    star_cmd->add_option("f", expr_f, "left operand")->required();
    star_cmd->add_option("g", expr_g, "right operand")->required();
    star_cmd->add_option("--order", order_override, "truncation order override");

    auto* d1_cmd = app.add_subcommand("d1", "first-order deformation superbracket of (f, g)");
    d1_cmd->add_option("f", expr_f, "left operand")->required();
    d1_cmd->add_option("g", expr_g, "right operand")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "normal form of f modulo solvable constraints");
    reduce_cmd->add_option("f", expr_f, "expression")->required();

    std::string suite = "all";
    std::uint64_t cases = 200;
    std::uint64_t seed = 42;
    RandomTermSpec term_spec;
    auto* check_cmd = app.add_subcommand("check", "run a named verification suite");
    check_cmd->add_option("--suite", suite, "suite name or 'all'");
    check_cmd->add_option("--cases", cases, "random cases per suite");
    check_cmd->add_option("--seed", seed, "64-bit seed");
    check_cmd->add_option("--max-even-degree", term_spec.max_even_degree,
                          "per-monomial even degree bound");
    check_cmd->add_option("--max-odd-factors", term_spec.max_odd_factors,
                          "per-monomial odd factor bound");
    check_cmd->add_option("--max-terms", term_spec.max_terms, "terms per polynomial");
    check_cmd->add_option("--coeff-num-bound", term_spec.coeff_num_bound, "numerator bound");
    check_cmd->add_option("--coeff-den-bound", term_spec.coeff_den_bound, "denominator bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (bracket_cmd->parsed()) {
            SessionSpec session = load(opt);
            BracketStructure B = session.bracket_structure();
            SuperPolynomial f = parse_expression(expr_f, session.table);
            SuperPolynomial g = parse_expression(expr_g, session.table);
            print_poly(poisson_superbracket(f, g, B), opt.format);
            return kExitPass;
        }
        if (dirac_cmd->parsed()) {
            SessionSpec session = load(opt);
            DiracContext ctx = session.dirac_context();
            SuperPolynomial f = parse_expression(expr_f, session.table);
            SuperPolynomial g = parse_expression(expr_g, session.table);
            if (opt.format == "text") {
                auto [fe, fo] = f.homogeneous_components();
                auto [ge, go] = g.homogeneous_components();
                const SuperPolynomial* fc[2] = {&fe, &fo};
                const SuperPolynomial* gc[2] = {&ge, &go};
                const char* label[2] = {"even", "odd"};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        if (fc[i]->is_zero() || gc[j]->is_zero()) continue;
                        auto branch = dirac_branch(Parity(i), Parity(j));
                        std::cout << "branch (" << label[i] << "," << label[j] << "): "
                                  << (branch == DiracBranch::Corrected ? "corrected" : "plain")
                                  << "\n";
                    }
            }
            print_poly(dirac_superbracket(f, g, ctx), opt.format);
            return kExitPass;
        }
        if (star_cmd->parsed()) {
            SessionSpec session = load(opt);
            if (order_override >= 0) session.order = static_cast<std::size_t>(order_override);
            StarProduct sp = session.star_product();
            SuperPolynomial f = parse_expression(expr_f, session.table);
            SuperPolynomial g = parse_expression(expr_g, session.table);
            print_series(star_multiply(f, g, sp), opt.format);
            return kExitPass;
        }
        if (d1_cmd->parsed()) {
            SessionSpec session = load(opt);
            StarProduct sp = session.star_product();
            SuperPolynomial f = parse_expression(expr_f, session.table);
            SuperPolynomial g = parse_expression(expr_g, session.table);
            print_poly(d1_superbracket_general(f, g, sp), opt.format);
            return kExitPass;
        }
        if (reduce_cmd->parsed()) {
            SessionSpec session = load(opt);
            DiracContext ctx = session.dirac_context();
            SuperPolynomial f = parse_expression(expr_f, session.table);
            print_poly(reduce_mod_constraints(f, ctx), opt.format);
            return kExitPass;
        }
        if (check_cmd->parsed()) {
            SessionSpec session = opt.session_path.empty() ? default_session() : load(opt);
            if (!is_suite_name(suite)) throw UnknownSuiteError(suite);
            std::vector<CheckReport> reports;
            if (suite == "all")
                reports = run_all_suites(session, cases, seed, term_spec);
            else
                reports.push_back(run_suite(suite, session, cases, seed, term_spec));
            bool all_passed = true;
            for (const auto& report : reports) {
                all_passed = all_passed && report.passed();
                if (opt.format == "machine")
                    std::cout << to_machine_encoding(report);
                else
                    std::cout << render_text(report) << "\n";
            }
            return all_passed ? kExitPass : kExitCheckFailure;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
