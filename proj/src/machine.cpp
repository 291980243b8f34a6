#include "spalg/machine.hpp"

#include <iomanip>
#include <sstream>

namespace spalg {

namespace {

void emit_table_line(std::ostream& out, const VariableTable& table) {
    out << "table " << table.pair_count() << " " << table.odd_count() << " " << std::hex
        << std::setw(16) << std::setfill('0') << table.digest() << std::dec
        << std::setfill(' ') << "\n";
}

void emit_terms(std::ostream& out, const SuperPolynomial& f) {
    for (const auto& [m, c] : f.terms()) {
        out << "term " << c << " e:";
        for (std::size_t i = 0; i < m.even_exponents.size(); ++i) {
            if (i) out << ",";
            out << m.even_exponents[i];
        }
        out << " o:";
        for (std::size_t i = 0; i < m.odd_factors.size(); ++i) {
            if (i) out << ",";
            out << m.odd_factors[i];
        }
        out << "\n";
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string to_machine_encoding(const SuperPolynomial& f) {
    std::ostringstream out;
    out << "spalg-io 1\n";
    emit_table_line(out, *f.table());
    out << "begin poly\n";
    emit_terms(out, f);
    out << "end\n";
    return out.str();
}

std::string to_machine_encoding(const FormalSeries& series) {
    std::ostringstream out;
    out << "spalg-io 1\n";
    emit_table_line(out, *series.table());
    out << "begin series " << series.order() << "\n";
    for (std::size_t k = 0; k <= series.order(); ++k) {
        out << "order " << k << "\n";
        emit_terms(out, series.coeff(k));
    }
    out << "end\n";
    return out.str();
}

std::string to_machine_encoding(const CheckReport& report) {
    std::ostringstream out;
    out << "spalg-io 1\n";
    out << "begin report\n";
    out << "suite " << report.suite << "\n";
    out << "seed " << report.seed << "\n";
    out << "cases " << report.cases << "\n";
    for (const auto& note : report.notes) out << "note " << note << "\n";
    out << "failures " << report.failures.size() << "\n";
    for (const auto& f : report.failures) {
        out << "begin failure " << f.case_index << "\n";
        out << "law " << f.law << "\n";
        for (const auto& [slot, text] : f.inputs) out << "input " << slot << " " << text << "\n";
        out << "residual " << f.residual << "\n";
        out << "end failure\n";
    }
    out << "status " << (report.passed() ? "pass" : "fail") << "\n";
    out << "end\n";
    return out.str();
}

SuperPolynomial parse_machine_poly(const std::string& text, const TablePtr& table) {
    std::istringstream in(text);
    std::string line;
    SuperPolynomial out(table);
    bool saw_header = false, saw_table = false, in_poly = false, done = false;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError(ParseError::Kind::SyntaxError, lineno, 1, why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (!saw_header) {
            std::string version;
            ls >> version;
            if (word != "spalg-io" || version != "1") throw fail("expected 'spalg-io 1' header");
            saw_header = true;
            continue;
        }
        if (!saw_table) {
            if (word != "table") throw fail("expected table line");
            std::size_t pairs = 0, odd = 0;
            std::string digest_hex;
            ls >> pairs >> odd >> digest_hex;
            std::uint64_t digest = std::stoull(digest_hex, nullptr, 16);
            if (digest != table->digest()) throw fail("table digest mismatch");
            saw_table = true;
            continue;
        }
        if (!in_poly) {
            std::string what;
            ls >> what;
            if (word != "begin" || what != "poly") throw fail("expected 'begin poly'");
            in_poly = true;
            continue;
        }
        if (word == "end") {
            done = true;
            break;
        }
        if (word != "term") throw fail("expected term or end");
        std::string coeff_text, evens, odds;
        ls >> coeff_text >> evens >> odds;
        if (evens.rfind("e:", 0) != 0 || odds.rfind("o:", 0) != 0)
            throw fail("malformed term line");
        Rational coeff;
        try {
            coeff = Rational(coeff_text);
        } catch (const std::exception&) {
            throw fail("bad coefficient: " + coeff_text);
        }
        Monomial m;
        m.even_exponents.assign(table->even_count(), 0);
        std::string elist = evens.substr(2);
        if (!elist.empty()) {
            auto parts = split(elist, ',');
            if (parts.size() != table->even_count()) throw fail("even exponent count mismatch");
            for (std::size_t i = 0; i < parts.size(); ++i)
                m.even_exponents[i] = static_cast<std::uint32_t>(std::stoul(parts[i]));
        } else if (table->even_count() != 0) {
            throw fail("even exponent count mismatch");
        }
        std::string olist = odds.substr(2);
        if (!olist.empty()) {
            for (const auto& part : split(olist, ',')) {
                auto idx = std::stoul(part);
                if (idx >= table->odd_count()) throw fail("odd index out of range");
                m.odd_factors.push_back(static_cast<std::uint32_t>(idx));
            }
            for (std::size_t i = 1; i < m.odd_factors.size(); ++i)
                if (m.odd_factors[i - 1] >= m.odd_factors[i])
                    throw fail("odd factors not strictly increasing");
        }
        out.add_term(std::move(m), std::move(coeff));
    }
    if (!done) throw fail("missing 'end'");
    return out;
}

} // namespace spalg
