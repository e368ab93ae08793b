#pragma once

// Recursive-descent parser for the polynomial text grammar:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | variable | '(' expr ')'
//
// Variables are del, lam, mu, lam1, lam2, ...; only those in the allowed set are accepted.

#include <cctype>
#include <string>
#include <string_view>

#include "pseudo/poly.hpp"

namespace pseudo {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const VarSet& allowed) : text_(text), vars_(allowed) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 0, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Poly unary() {
        if (accept('-')) return -unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            std::string digits = integer_literal();
            if (digits.size() > 4) {
                pos_ = start;
                fail("exponent too large");
            }
            return base.pow(std::stoi(digits));
        }
        return base;
    }

    std::string integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value(integer_literal());
            if (accept('/')) {
                std::size_t at = pos_;
                Rational den(integer_literal());
                if (sgn(den) == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
                value /= den;
            }
            value.canonicalize();
            return Poly::constant(vars_, value);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string_view name = text_.substr(start, pos_ - start);
            auto v = Var::from_name(name);
            if (!v || !vars_.contains(*v)) {
                pos_ = start;
                fail("variable '" + std::string(name) + "' is not allowed here (allowed: " + vars_.to_string() + ")");
            }
            return Poly::variable(vars_, *v);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const VarSet& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses `text` into a polynomial over exactly the variable set `allowed`.
/// Throws ParseError (column = 1-based offset into `text`).
inline Poly parse_poly(std::string_view text, const VarSet& allowed) {
    return detail::PolyParser(text, allowed).parse();
}

} // namespace pseudo
