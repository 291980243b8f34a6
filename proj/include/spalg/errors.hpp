#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spalg {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class TableMismatchError : public Error {
public:
    TableMismatchError() : Error("operands belong to different variable tables") {}
};

class UnknownVariableError : public Error {
public:
    explicit UnknownVariableError(const std::string& name)
        : Error("unknown variable: " + name) {}
};

class NonhomogeneousError : public Error {
public:
    explicit NonhomogeneousError(const std::string& context)
        : Error("nonhomogeneous element where a homogeneous one is required (" + context + ")") {}
};

class OddEntryError : public Error {
public:
    OddEntryError(std::size_t row, std::size_t col)
        : Error("constraint matrix entry (" + std::to_string(row) + "," + std::to_string(col) +
                ") has odd parity and cannot be inverted in the even subring"),
          row_(row), col_(col) {}
    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_, col_;
};

class SingularBodyError : public Error {
public:
    SingularBodyError()
        : Error("constraint matrix body is singular over the rationals "
                "(constraints are not second class)") {}
};

// The terminating inverse series needs nilpotent souls; a purely even
// non-constant term (e.g. q1) is not nilpotent in a polynomial algebra.
class NonNilpotentSoulError : public Error {
public:
    NonNilpotentSoulError(std::size_t row, std::size_t col)
        : Error("matrix entry (" + std::to_string(row) + "," + std::to_string(col) +
                ") has a non-nilpotent soul; cannot invert exactly") {}
};

class UnsolvableConstraintError : public Error {
public:
    explicit UnsolvableConstraintError(std::size_t index)
        : Error("constraint " + std::to_string(index) +
                " has no distinguished linear variable; quotient representative "
                "not computable by substitution"),
          index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

class OrderMismatchError : public Error {
public:
    OrderMismatchError(std::size_t lhs, std::size_t rhs)
        : Error("formal series truncation orders differ: " + std::to_string(lhs) +
                " vs " + std::to_string(rhs)) {}
};

class TruncationOrderError : public Error {
public:
    explicit TruncationOrderError(const std::string& what) : Error(what) {}
};

class RetryExhaustedError : public Error {
public:
    RetryExhaustedError()
        : Error("random generation retry budget exhausted (degenerate term spec)") {}
};

class UnknownSuiteError : public Error {
public:
    explicit UnknownSuiteError(const std::string& name)
        : Error("unknown check suite: " + name) {}
};

// Positioned errors from the text front end. Positions are 1-based.
class ParseError : public Error {
public:
    enum class Kind { IllegalCharacter, SyntaxError, UnknownIdentifier, NonNaturalExponent };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& detail)
        : Error(label(kind) + " at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + detail),
          kind_(kind), line_(line), column_(column) {}

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string label(Kind kind) {
        switch (kind) {
            case Kind::IllegalCharacter: return "illegal character";
            case Kind::SyntaxError: return "syntax error";
            case Kind::UnknownIdentifier: return "unknown identifier";
            case Kind::NonNaturalExponent: return "non-natural exponent";
        }
        return "parse error";
    }

    Kind kind_;
    std::size_t line_, column_;
};

class SessionError : public Error {
public:
    explicit SessionError(const std::string& what) : Error("session: " + what) {}
};

} // namespace spalg
