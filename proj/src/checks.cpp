#include "spalg/checks.hpp"

#include "spalg/exprio.hpp"

#include <chrono>
#include <functional>
#include <sstream>

namespace spalg {

namespace {

struct CaseTools {
    const SessionSpec& session;
    const TablePtr& table;
    const RandomTermSpec& spec;
    std::uint64_t seed;
    CheckReport& report;

    // Deterministic polynomial for slot `slot` of case `index`; eight slots
    // are reserved per case (see docs/formats.md).
    SuperPolynomial poly(std::uint64_t index, std::uint64_t slot,
                         std::optional<Parity> parity) const {
        RandomTermSpec s = spec;
        s.parity = parity;
        return generate_random_poly(table, s, seed, index * 8 + slot);
    }

    void fail(std::uint64_t index, const std::string& law,
              std::initializer_list<std::pair<std::string, const SuperPolynomial*>> inputs,
              const SuperPolynomial& residual) const {
        CheckFailure f;
        f.case_index = index;
        f.law = law;
        for (const auto& [slot, value] : inputs) f.inputs.emplace_back(slot, format_canonical(*value));
        f.residual = format_canonical(residual);
        report.failures.push_back(std::move(f));
    }

    // Asserts residual == 0, recording a minimal counterexample otherwise.
    void require_zero(std::uint64_t index, const std::string& law,
                      std::initializer_list<std::pair<std::string, const SuperPolynomial*>> inputs,
                      const SuperPolynomial& residual) const {
        if (!residual.is_zero()) fail(index, law, inputs, residual);
    }
};

Parity draw_parity(SplitMix64& rng) {
    return rng.below(2) == 0 ? Parity::Even : Parity::Odd;
}

void suite_axioms_canonical(CaseTools& t, std::uint64_t cases) {
    BracketStructure B = t.session.bracket_structure();
    for (std::uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = case_rng(t.seed ^ 0x5EEDu, i);
        Parity pf = draw_parity(rng), pg = draw_parity(rng), ph = draw_parity(rng);
        SuperPolynomial f = t.poly(i, 0, pf);
        SuperPolynomial g = t.poly(i, 1, pg);
        SuperPolynomial h = t.poly(i, 2, ph);
        SuperPolynomial any = t.poly(i, 3, std::nullopt);
        Rational sign(koszul_sign(pf, pg));

        t.require_zero(i, "supercommutativity", {{"f", &f}, {"g", &g}},
                       f * g - sign * (g * f));
        t.require_zero(i, "skew-symmetry", {{"f", &f}, {"g", &g}},
                       poisson_superbracket(f, g, B) + sign * poisson_superbracket(g, f, B));
        t.require_zero(i, "leibniz", {{"f", &f}, {"g", &g}, {"h", &any}},
                       poisson_superbracket(f, g * any, B) -
                           (poisson_superbracket(f, g, B) * any +
                            sign * (g * poisson_superbracket(f, any, B))));
        BracketFn fn = [&B](const SuperPolynomial& a, const SuperPolynomial& b) {
            return poisson_superbracket(a, b, B);
        };
        t.require_zero(i, "jacobi", {{"f", &f}, {"g", &g}, {"h", &h}},
                       jacobi_cyclic_sum(f, g, h, fn));

        SuperPolynomial br = poisson_superbracket(f, g, B);
        if (!br.is_zero()) {
            auto p = br.try_parity();
            if (!p || *p != pf + pg)
                t.fail(i, "bracket-parity-additivity", {{"f", &f}, {"g", &g}}, br);
        }
    }
}

void suite_lemma1_dirac(CaseTools& t, std::uint64_t cases, const DiracContext& ctx) {
    for (std::uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = case_rng(t.seed ^ 0x1E1Bu, i);
        Parity pf = draw_parity(rng), pg = draw_parity(rng);
        SuperPolynomial f = t.poly(i, 0, pf);
        SuperPolynomial g = t.poly(i, 1, pg);
        SuperPolynomial h = t.poly(i, 2, std::nullopt);
        Rational sign(koszul_sign(pf, pg));

        t.require_zero(i, "dirac-skew-symmetry", {{"f", &f}, {"g", &g}},
                       dirac_superbracket(f, g, ctx) + sign * dirac_superbracket(g, f, ctx));
        // The derivation law holds for the corrected bracket on every parity
        // sector; the parity-split bracket satisfies it only when g and h are
        // even (regression-tested counterexamples in tests/test_dirac.cpp).
        t.require_zero(i, "dirac-corrected-leibniz", {{"f", &f}, {"g", &g}, {"h", &h}},
                       dirac_superbracket_corrected(f, g * h, ctx) -
                           (dirac_superbracket_corrected(f, g, ctx) * h +
                            sign * (g * dirac_superbracket_corrected(f, h, ctx))));
        // Bilinearity of the case-split bracket.
        SuperPolynomial lin = dirac_superbracket(f + g, h, ctx) -
                              dirac_superbracket(f, h, ctx) - dirac_superbracket(g, h, ctx);
        t.require_zero(i, "dirac-bilinearity", {{"f", &f}, {"g", &g}, {"h", &h}}, lin);
    }
}

void suite_theorem1_jacobi(CaseTools& t, std::uint64_t cases, const DiracContext& ctx) {
    BracketFn corrected = [&ctx](const SuperPolynomial& a, const SuperPolynomial& b) {
        return dirac_superbracket_corrected(a, b, ctx);
    };
    BracketFn split = [&ctx](const SuperPolynomial& a, const SuperPolynomial& b) {
        return dirac_superbracket(a, b, ctx);
    };
    for (std::uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = case_rng(t.seed ^ 0x7ACB1u, i);
        Parity same = draw_parity(rng);
        SuperPolynomial f = t.poly(i, 0, same);
        SuperPolynomial g = t.poly(i, 1, same);
        SuperPolynomial h = t.poly(i, 2, same);
        t.require_zero(i, "dirac-jacobi-same-parity", {{"f", &f}, {"g", &g}, {"h", &h}},
                       jacobi_cyclic_sum(f, g, h, corrected));
        if (same == Parity::Even)
            t.require_zero(i, "dirac-jacobi-case-split-even", {{"f", &f}, {"g", &g}, {"h", &h}},
                           jacobi_cyclic_sum(f, g, h, split));

        SuperPolynomial fm = t.poly(i, 3, std::nullopt);
        SuperPolynomial gm = t.poly(i, 4, std::nullopt);
        SuperPolynomial hm = t.poly(i, 5, std::nullopt);
        t.require_zero(i, "dirac-jacobi-mixed-bilinear", {{"f", &fm}, {"g", &gm}, {"h", &hm}},
                       jacobi_general_sum(fm, gm, hm, corrected));
    }
}

void suite_casimir(CaseTools& t, std::uint64_t cases, const DiracContext& ctx) {
    for (std::uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = case_rng(t.seed ^ 0xCA51u, i);
        std::size_t which = static_cast<std::size_t>(rng.below(ctx.constraint_set.size()));
        const SuperPolynomial& phi = ctx.constraint_set.constraints[which];
        SuperPolynomial g = t.poly(i, 0, ctx.constraint_set.parities[which]);
        SuperPolynomial d = dirac_superbracket(phi, g, ctx);
        t.require_zero(i, "constraint-casimir", {{"phi", &phi}, {"g", &g}}, d);
        if (!check_constraint_casimir(ctx, g))
            t.fail(i, "constraint-casimir-checker", {{"g", &g}}, d);
    }
}

void suite_theorem2_xi(CaseTools& t, std::uint64_t cases, const DiracContext& ctx) {
    const Parity P[2] = {Parity::Even, Parity::Odd};
    for (Parity pf : P)
        for (Parity pg : P)
            for (Parity pa : P)
                for (Parity pb : P) {
                    std::ostringstream line;
                    line << "xi " << to_string(pf) << " " << to_string(pg) << " "
                         << to_string(pa) << " " << to_string(pb) << " -> "
                         << to_string(xi_indicator(pf, pg, pa, pb));
                    t.report.notes.push_back(line.str());
                }
    for (std::uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = case_rng(t.seed ^ 0x2E11u, i);
        Parity pf = draw_parity(rng), pg = draw_parity(rng);
        SuperPolynomial f = t.poly(i, 0, pf);
        SuperPolynomial g = t.poly(i, 1, pg);
        bool all_even = true;
        for (Parity pa : ctx.constraint_set.parities)
            for (Parity pb : ctx.constraint_set.parities)
                if (xi_indicator(pf, pg, pa, pb) != Parity::Even) all_even = false;
        if (!all_even) continue;
        SuperPolynomial lhs = dirac_superbracket_corrected(f, g, ctx);
        SuperPolynomial rhs = dirac_superbracket_corrected(g, f, ctx);
        t.require_zero(i, "xi-even-implies-corrected-skew", {{"f", &f}, {"g", &g}},
                       lhs + Rational(koszul_sign(pf, pg)) * rhs);
        if (!check_theorem2(f, g, ctx))
            t.fail(i, "theorem2-checker", {{"f", &f}, {"g", &g}}, lhs);
    }
}

void suite_star_assoc(CaseTools& t, std::uint64_t cases) {
    StarProduct sp = t.session.star_product();
    for (std::uint64_t i = 0; i < cases; ++i) {
        SuperPolynomial f = t.poly(i, 0, std::nullopt);
        SuperPolynomial g = t.poly(i, 1, std::nullopt);
        SuperPolynomial h = t.poly(i, 2, std::nullopt);
        FormalSeries fg = star_multiply(f, g, sp);
        t.require_zero(i, "star-order0-is-product", {{"f", &f}, {"g", &g}},
                       fg.coeff(0) - f * g);
        if (!check_star_associativity(f, g, h, sp)) {
            FormalSeries lhs = star_multiply_series(fg, FormalSeries::embed(h, sp.order), sp);
            FormalSeries rhs = star_multiply_series(FormalSeries::embed(f, sp.order),
                                                    star_multiply(g, h, sp), sp);
            std::size_t k = 0;
            while (k < sp.order && (lhs.coeff(k) - rhs.coeff(k)).is_zero()) ++k;
            t.fail(i, "star-associativity", {{"f", &f}, {"g", &g}, {"h", &h}},
                   lhs.coeff(k) - rhs.coeff(k));
        }
    }
}

void suite_hochschild(CaseTools& t, std::uint64_t cases) {
    StarProduct sp = t.session.star_product();
    for (std::uint64_t i = 0; i < cases; ++i) {
        SuperPolynomial f = t.poly(i, 0, std::nullopt);
        SuperPolynomial g = t.poly(i, 1, std::nullopt);
        SuperPolynomial h = t.poly(i, 2, std::nullopt);
        SuperPolynomial residual = f * extract_D1(g, h, sp) - extract_D1(f * g, h, sp) +
                                   extract_D1(f, g * h, sp) - extract_D1(f, g, sp) * h;
        t.require_zero(i, "hochschild-d1", {{"f", &f}, {"g", &g}, {"h", &h}}, residual);
    }
}

void suite_theorem3_d1(CaseTools& t, std::uint64_t cases) {
    StarProduct sp = t.session.star_product();
    BracketStructure B = t.session.bracket_structure();
    for (std::uint64_t i = 0; i < cases; ++i) {
        SplitMix64 rng = case_rng(t.seed ^ 0xD1u, i);
        Parity pf = draw_parity(rng), pg = draw_parity(rng), ph = draw_parity(rng);
        SuperPolynomial f = t.poly(i, 0, pf);
        SuperPolynomial g = t.poly(i, 1, pg);
        SuperPolynomial h = t.poly(i, 2, ph);
        if (!check_theorem3(f, g, h, sp, B)) {
            SuperPolynomial residual = d1_superbracket(f, g, sp) - poisson_superbracket(f, g, B);
            t.fail(i, "theorem3-d1-bracket", {{"f", &f}, {"g", &g}, {"h", &h}}, residual);
        }
        // Raw D1 satisfies the summarized derivation law as well.
        SuperPolynomial any = t.poly(i, 3, std::nullopt);
        SuperPolynomial raw = extract_D1(f, g * any, sp) -
                              (extract_D1(f, g, sp) * any +
                               Rational(koszul_sign(pf, pg)) * (g * extract_D1(f, any, sp)));
        t.require_zero(i, "d1-raw-leibniz", {{"f", &f}, {"g", &g}, {"h", &any}}, raw);
    }
}

void suite_parser_roundtrip(CaseTools& t, std::uint64_t cases) {
    for (std::uint64_t i = 0; i < cases; ++i) {
        SuperPolynomial f = t.poly(i, 0, std::nullopt);
        SuperPolynomial reparsed = parse_expression(format_canonical(f), t.table);
        t.require_zero(i, "parse-format-roundtrip", {{"f", &f}}, reparsed - f);
        SuperPolynomial remachined = parse_machine_poly(to_machine_encoding(f), t.table);
        t.require_zero(i, "machine-roundtrip", {{"f", &f}}, remachined - f);
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "axioms-canonical", "lemma1-dirac",  "theorem1-jacobi", "theorem2-xi",
        "casimir",          "star-assoc",    "hochschild-l1",   "theorem3-d1",
        "parser-roundtrip",
    };
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

CheckReport run_suite(const std::string& name, const SessionSpec& session, std::uint64_t cases,
                      std::uint64_t seed, const RandomTermSpec& spec) {
    if (!is_suite_name(name) || name == "all") throw UnknownSuiteError(name);
    CheckReport report;
    report.suite = name;
    report.cases = cases;
    report.seed = seed;
    CaseTools tools{session, session.table, spec, seed, report};

    auto start = std::chrono::steady_clock::now();
    if (name == "axioms-canonical") {
        suite_axioms_canonical(tools, cases);
    } else if (name == "lemma1-dirac") {
        DiracContext ctx = session.dirac_context();
        suite_lemma1_dirac(tools, cases, ctx);
    } else if (name == "theorem1-jacobi") {
        DiracContext ctx = session.dirac_context();
        suite_theorem1_jacobi(tools, cases, ctx);
    } else if (name == "theorem2-xi") {
        DiracContext ctx = session.dirac_context();
        suite_theorem2_xi(tools, cases, ctx);
    } else if (name == "casimir") {
        DiracContext ctx = session.dirac_context();
        suite_casimir(tools, cases, ctx);
    } else if (name == "star-assoc") {
        suite_star_assoc(tools, cases);
    } else if (name == "hochschild-l1") {
        suite_hochschild(tools, cases);
    } else if (name == "theorem3-d1") {
        suite_theorem3_d1(tools, cases);
    } else if (name == "parser-roundtrip") {
        suite_parser_roundtrip(tools, cases);
    }
    auto end = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(end - start).count();
    return report;
}

std::vector<CheckReport> run_all_suites(const SessionSpec& session, std::uint64_t cases,
                                        std::uint64_t seed, const RandomTermSpec& spec) {
    std::vector<CheckReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, session, cases, seed, spec));
    return out;
}

std::string render_text(const CheckReport& report) {
    std::ostringstream out;
    out << "suite: " << report.suite << "\n";
    out << "seed: " << report.seed << "\n";
    out << "cases: " << report.cases << "\n";
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    out << "failures: " << report.failures.size() << "\n";
    for (const auto& f : report.failures) {
        out << "failure case " << f.case_index << "\n";
        out << "  law: " << f.law << "\n";
        for (const auto& [slot, text] : f.inputs) out << "  input " << slot << ": " << text << "\n";
        out << "  residual: " << f.residual << "\n";
    }
    out << "status: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    out << "elapsed-ms: " << static_cast<std::uint64_t>(report.elapsed_ms) << "\n";
    return out.str();
}

FuzzOutcome fuzz_parser(const TablePtr& table, std::uint64_t count, std::uint64_t seed) {
    FuzzOutcome outcome;
    for (std::uint64_t i = 0; i < count; ++i) {
        SplitMix64 rng = case_rng(seed ^ 0xF022u, i);
        std::string input;
        std::uint64_t len = rng.below(41);
        for (std::uint64_t j = 0; j < len; ++j)
            input += static_cast<char>(rng.below(256));
        ++outcome.attempted;
        try {
            parse_expression(input, table);
            ++outcome.parsed;
        } catch (const ParseError&) {
            ++outcome.positioned_errors;
        } catch (...) {
            ++outcome.other_failures;
        }
    }
    return outcome;
}

} // namespace spalg
