#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pseudo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed definition text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) {
            return column == 0 ? what : "column " + std::to_string(column) + ": " + what;
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Polynomials over different variable sets were combined without an explicit embedding.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// Operands have incompatible ranks, arities or ambient dimensions.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An input object fails the axioms an operation requires of it (a module that is
/// not a module, structure constants that are not associative).
class AxiomError : public Error {
public:
    using Error::Error;
};

/// Two computations that must agree did not (d∘d ≠ 0, verdict mismatch, B ⊄ Z).
/// Always a bug in the library, never a property of the input.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace pseudo
