#include "spalg/exprio.hpp"

#include <cctype>
#include <sstream>

namespace spalg {

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (input[i + j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += k;
    };
    while (i < input.size()) {
        unsigned char c = static_cast<unsigned char>(input[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        std::size_t tline = line, tcol = col;
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
            out.push_back({TokenKind::Number, input.substr(i, j - i), tline, tcol});
            advance(j - i);
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[j])) || input[j] == '_'))
                ++j;
            out.push_back({TokenKind::Identifier, input.substr(i, j - i), tline, tcol});
            advance(j - i);
            continue;
        }
        TokenKind kind;
        switch (c) {
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            case '^': kind = TokenKind::Caret; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case '/': kind = TokenKind::Slash; break;
            default:
                throw ParseError(ParseError::Kind::IllegalCharacter, tline, tcol,
                                 std::string("'") + static_cast<char>(c) + "'");
        }
        out.push_back({kind, input.substr(i, 1), tline, tcol});
        advance(1);
    }
    out.push_back({TokenKind::End, "", line, col});
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const TablePtr& table)
        : tokens_(tokens), table_(table) {}

    SuperPolynomial run() {
        SuperPolynomial value = expr();
        expect(TokenKind::End, "trailing input");
        return value;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    const Token& take() { return tokens_[pos_++]; }

    bool accept(TokenKind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    void expect(TokenKind kind, const std::string& what) {
        if (peek().kind != kind)
            throw ParseError(ParseError::Kind::SyntaxError, peek().line, peek().column,
                             "expected " + what);
    }

    SuperPolynomial expr() {
        SuperPolynomial value = term();
        while (true) {
            if (accept(TokenKind::Plus)) {
                value += term();
            } else if (accept(TokenKind::Minus)) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    SuperPolynomial term() {
        SuperPolynomial value = factor();
        while (accept(TokenKind::Star)) value = value * factor();
        return value;
    }

    SuperPolynomial factor() {
        SuperPolynomial value = primary();
        while (accept(TokenKind::Caret)) {
            const Token& e = peek();
            if (e.kind != TokenKind::Number)
                throw ParseError(ParseError::Kind::NonNaturalExponent, e.line, e.column,
                                 "exponent must be a natural number");
            take();
            value = value.pow(parse_nat(e));
        }
        return value;
    }

    SuperPolynomial primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Number: {
                take();
                Integer num(t.lexeme);
                if (accept(TokenKind::Slash)) {
                    const Token& d = peek();
                    expect(TokenKind::Number, "denominator");
                    take();
                    Integer den(d.lexeme);
                    if (den == 0)
                        throw ParseError(ParseError::Kind::SyntaxError, d.line, d.column,
                                         "zero denominator");
                    return SuperPolynomial::constant(table_, Rational(num, den));
                }
                return SuperPolynomial::constant(table_, Rational(num));
            }
            case TokenKind::Identifier: {
                take();
                if (!table_->find(t.lexeme))
                    throw ParseError(ParseError::Kind::UnknownIdentifier, t.line, t.column,
                                     t.lexeme);
                return SuperPolynomial::variable(table_, t.lexeme);
            }
            case TokenKind::LParen: {
                take();
                SuperPolynomial value = expr();
                if (!accept(TokenKind::RParen))
                    throw ParseError(ParseError::Kind::SyntaxError, peek().line, peek().column,
                                     "expected ')'");
                return value;
            }
            case TokenKind::Minus: {
                take();
                return -factor();
            }
            default:
                throw ParseError(ParseError::Kind::SyntaxError, t.line, t.column,
                                 "expected a factor");
        }
    }

    std::size_t parse_nat(const Token& t) {
        Integer value(t.lexeme);
        if (value > 4096)
            throw ParseError(ParseError::Kind::NonNaturalExponent, t.line, t.column,
                             "exponent too large");
        return static_cast<std::size_t>(value);
    }

    const std::vector<Token>& tokens_;
    TablePtr table_;
    std::size_t pos_ = 0;
};

void format_monomial(std::ostream& out, const Monomial& m, const VariableTable& table,
                     bool coefficient_printed) {
    bool first = !coefficient_printed;
    auto sep = [&]() {
        if (!first) out << "*";
        first = false;
    };
    for (std::size_t i = 0; i < m.even_exponents.size(); ++i) {
        if (m.even_exponents[i] == 0) continue;
        sep();
        out << table.even_name(i);
        if (m.even_exponents[i] > 1) out << "^" << m.even_exponents[i];
    }
    for (auto a : m.odd_factors) {
        sep();
        out << table.odd_name(a);
    }
}

} // namespace

SuperPolynomial parse_expression(const std::vector<Token>& tokens, const TablePtr& table) {
    return Parser(tokens, table).run();
}

SuperPolynomial parse_expression(const std::string& input, const TablePtr& table) {
    return parse_expression(tokenize(input), table);
}

std::string format_canonical(const SuperPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool print_coeff = m.is_constant() || mag != 1;
        if (print_coeff) out << mag;
        if (!m.is_constant()) format_monomial(out, m, *f.table(), print_coeff);
    }
    return out.str();
}

std::string format_series(const FormalSeries& series) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k <= series.order(); ++k) {
        const SuperPolynomial& c = series.coeff(k);
        if (c.is_zero()) continue;
        std::string text = format_canonical(c);
        if (k == 0) {
            out << text;
            first = false;
            continue;
        }
        bool negative = false;
        if (c.term_count() == 1 && text.size() > 0 && text[0] == '-') {
            negative = true;
            text = text.substr(1);
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (c.term_count() > 1) {
            out << "(" << text << ")*";
        } else if (text != "1") {
            out << text << "*";
        }
        out << "hbar";
        if (k > 1) out << "^" << k;
    }
    if (first) return "0";
    return out.str();
}

} // namespace spalg
