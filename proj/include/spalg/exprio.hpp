#pragma once

#include "spalg/series.hpp"
#include "spalg/super_polynomial.hpp"

#include <string>
#include <vector>

namespace spalg {

enum class TokenKind { Number, Identifier, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t line;   // 1-based
    std::size_t column; // 1-based
};

// Maximal-munch lexer. Numbers are nonnegative integer literals; rationals
// are formed syntactically as a/b. Whitespace separates tokens. Throws
// ParseError(IllegalCharacter) with a 1-based position.
std::vector<Token> tokenize(const std::string& input);

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ('^' nat)*
//   primary:= rational | identifier | '(' expr ')' | '-' factor
// Juxtaposition is not multiplication; '/' appears only inside rational
// literals. An odd identifier raised to a power >= 2 yields the zero
// polynomial. The result is canonical.
SuperPolynomial parse_expression(const std::vector<Token>& tokens, const TablePtr& table);
SuperPolynomial parse_expression(const std::string& input, const TablePtr& table);

// Deterministic canonical text: terms in graded-lexicographic order over the
// declared variable order, coefficients in lowest terms, explicit '*', the
// zero polynomial prints "0".
std::string format_canonical(const SuperPolynomial& f);

// Series rendered as a polynomial in hbar: "q1*p1 + 1/2*hbar", one line.
std::string format_series(const FormalSeries& series);

} // namespace spalg
