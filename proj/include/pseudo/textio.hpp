#pragma once

// Line-oriented definition files. '#' starts a comment; blank lines are ignored.
//
//   algebra:      generators: e f
//                 product e f -> (lam + del) * f
//   module:       generators: u
//                 sides: left right            (optional; default both)
//                 left e u -> 1 * u
//                 right u e -> 2 * u
//   cochain:      degree: 2
//                 value e e -> lam1 * u        (degree 0: "value -> 3/2 * u")
//   gamma:        gamma e v -> lam * u         (γ(e)_λ(v) ∈ Chom(N, M))
//   fd algebra:   generators: one x
//                 product x x -> 0 * one       (rational coefficients only)
//                 unit -> 1 * one
//   fd bimodule:  generators: u / left e u -> 1 * u / right u e -> 1 * u
//
// The right-hand side is "<polynomial> * <generator>" (split at the last
// top-level '*') or a bare generator name.

#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pseudo/classical.hpp"
#include "pseudo/cohomology.hpp"
#include "pseudo/constructions.hpp"
#include "pseudo/poly_parse.hpp"

namespace pseudo {

namespace detail {

struct Line {
    std::size_t number = 0;
    std::string text;   // comment stripped
    std::string keyword;
    std::size_t rest_at = 0; // offset of the text after the keyword
};

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0, start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::size_t k = 0;
        while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k]))) ++k;
        if (k < raw.size()) {
            Line l;
            l.number = number;
            l.text = std::string(raw);
            std::size_t e = k;
            while (e < raw.size() && !std::isspace(static_cast<unsigned char>(raw[e])) && raw[e] != ':') ++e;
            l.keyword = std::string(raw.substr(k, e - k));
            if (e < raw.size() && raw[e] == ':') {
                l.keyword += ':';
                ++e;
            }
            l.rest_at = e;
            out.push_back(std::move(l));
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

inline std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

[[noreturn]] inline void fail(const Line& l, std::size_t offset, const std::string& msg) {
    throw ParseError(msg, l.number, offset + 1);
}

inline std::vector<std::string> parse_names(const Line& l) {
    auto names = words(std::string_view(l.text).substr(l.rest_at));
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) fail(l, l.rest_at, "duplicate generator name '" + n + "'");
        if (Var::from_name(n)) fail(l, l.rest_at, "generator name '" + n + "' clashes with a variable name");
    }
    return names;
}

/// "<lhs words> -> <poly> * <gen>" after the keyword.
struct Rule {
    std::vector<std::string> lhs;
    Poly coefficient;
    std::string target;
};

inline Rule parse_rule(const Line& l, const VarSet& vars) {
    const std::string& t = l.text;
    std::size_t arrow = t.find("->", l.rest_at);
    if (arrow == std::string::npos) fail(l, l.rest_at, "expected '->'");
    Rule r;
    r.lhs = words(std::string_view(t).substr(l.rest_at, arrow - l.rest_at));
    std::size_t rhs_at = arrow + 2;
    std::string_view rhs = std::string_view(t).substr(rhs_at);
    int depth = 0;
    std::size_t star = std::string_view::npos;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        if (rhs[i] == '(') ++depth;
        if (rhs[i] == ')') --depth;
        if (rhs[i] == '*' && depth == 0) star = i;
    }
    auto parse_at = [&](std::string_view text, std::size_t at) {
        try {
            return parse_poly(text, vars);
        } catch (const ParseError& e) {
            std::size_t col = e.column() ? e.column() - 1 : 0;
            std::string msg = e.what();
            if (auto p = msg.find(": "); p != std::string::npos && msg.rfind("column", 0) == 0) msg = msg.substr(p + 2);
            fail(l, at + col, msg);
        }
    };
    auto is_name = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
        return true;
    };
    r.target = trim(star == std::string_view::npos ? rhs : rhs.substr(star + 1));
    if (depth != 0 || !is_name(r.target)) {
        // Not "<poly> * <name>": a polynomial syntax error is the likely cause, report its position.
        parse_at(rhs, rhs_at);
        fail(l, rhs_at + (star == std::string_view::npos ? 0 : star + 1), "expected '<polynomial> * <generator>'");
    }
    r.coefficient = star == std::string_view::npos ? parse_at("1", rhs_at) : parse_at(rhs.substr(0, star), rhs_at);
    return r;
}

inline std::size_t lookup(const Line& l, const std::vector<std::string>& names, const std::string& name,
                          const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    fail(l, l.rest_at, std::string("unknown ") + what + " generator '" + name + "'");
}

inline std::vector<std::string> require_generators(const std::vector<Line>& lines) {
    for (const auto& l : lines)
        if (l.keyword == "generators:") return parse_names(l);
    throw ParseError("missing 'generators:' line", 0, 0);
}

inline void expect_arity(const Line& l, const Rule& r, std::size_t n) {
    if (r.lhs.size() != n) {
        fail(l, l.rest_at, "expected " + std::to_string(n) + " argument(s) before '->', got " +
                               std::to_string(r.lhs.size()));
    }
}

inline std::string rule_rhs(const Poly& p, const std::string& target) { return "(" + p.to_string() + ") * " + target; }

} // namespace detail

inline ConformalAlgebra parse_algebra(std::string_view text) {
    using namespace detail;
    auto lines = split_lines(text);
    auto names = require_generators(lines);
    ConformalAlgebra A(names);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& l : lines) {
        if (l.keyword == "generators:") continue;
        if (l.keyword != "product") fail(l, 0, "unknown directive '" + l.keyword + "'");
        Rule r = parse_rule(l, structure_vars());
        expect_arity(l, r, 2);
        auto i = lookup(l, names, r.lhs[0], "algebra");
        auto j = lookup(l, names, r.lhs[1], "algebra");
        auto k = lookup(l, names, r.target, "algebra");
        if (!seen.insert({i, j, k}).second) fail(l, l.rest_at, "duplicate product entry");
        A.set_structure(i, j, k, r.coefficient);
    }
    return A;
}

inline BimoduleStructure parse_module(std::string_view text, const ConformalAlgebra& A) {
    using namespace detail;
    auto lines = split_lines(text);
    auto names = require_generators(lines);
    bool has_left = true, has_right = true;
    for (const auto& l : lines) {
        if (l.keyword != "sides:") continue;
        auto s = words(std::string_view(l.text).substr(l.rest_at));
        has_left = has_right = false;
        for (const auto& w : s) {
            if (w == "left") {
                has_left = true;
            } else if (w == "right") {
                has_right = true;
            } else {
                fail(l, l.rest_at, "sides must be 'left' and/or 'right'");
            }
        }
    }
    BimoduleStructure M(A.rank(), names, has_left, has_right);
    std::set<std::tuple<int, std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& l : lines) {
        if (l.keyword == "generators:" || l.keyword == "sides:") continue;
        const bool left = l.keyword == "left";
        if (!left && l.keyword != "right") fail(l, 0, "unknown directive '" + l.keyword + "'");
        if (left && !has_left) fail(l, 0, "left action given for a right-only module");
        if (!left && !has_right) fail(l, 0, "right action given for a left-only module");
        Rule r = parse_rule(l, structure_vars());
        expect_arity(l, r, 2);
        auto k = lookup(l, names, r.target, "module");
        if (left) {
            auto i = lookup(l, A.generator_names(), r.lhs[0], "algebra");
            auto j = lookup(l, names, r.lhs[1], "module");
            if (!seen.insert({0, i, j, k}).second) fail(l, l.rest_at, "duplicate left action entry");
            M.left().set(i, j, k, r.coefficient);
        } else {
            auto j = lookup(l, names, r.lhs[0], "module");
            auto i = lookup(l, A.generator_names(), r.lhs[1], "algebra");
            if (!seen.insert({1, j, i, k}).second) fail(l, l.rest_at, "duplicate right action entry");
            M.right().set(j, i, k, r.coefficient);
        }
    }
    return M;
}

/// Cochain with values in M. For degree 2, `lam` is accepted as a synonym of `lam1`.
inline Cochain parse_cochain(std::string_view text, const ConformalAlgebra& A, const BimoduleStructure& M) {
    using namespace detail;
    auto lines = split_lines(text);
    int n = -1;
    for (const auto& l : lines) {
        if (l.keyword != "degree:") continue;
        auto w = words(std::string_view(l.text).substr(l.rest_at));
        if (w.size() != 1 || w[0].find_first_not_of("0123456789") != std::string::npos || w[0].size() > 2) {
            fail(l, l.rest_at, "degree must be a small non-negative integer");
        }
        n = std::stoi(w[0]);
    }
    if (n < 0) throw ParseError("missing 'degree:' line", 0, 0);
    Cochain c = Cochain::zero(n, A.rank(), M.rank());
    VarSet vars = cochain_vars(n);
    const bool alias = n == 2;
    VarSet parse_vars = alias ? vars.united(VarSet{Var::lam()}) : vars;
    if (n == 0) parse_vars = VarSet{};
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& l : lines) {
        if (l.keyword == "degree:") continue;
        if (l.keyword != "value") fail(l, 0, "unknown directive '" + l.keyword + "'");
        Rule r = parse_rule(l, parse_vars);
        expect_arity(l, r, static_cast<std::size_t>(n));
        auto k = lookup(l, M.generator_names(), r.target, "module");
        std::vector<std::size_t> tuple;
        for (const auto& a : r.lhs) tuple.push_back(lookup(l, A.generator_names(), a, "algebra"));
        std::size_t t = encode_tuple(tuple, A.rank());
        if (!seen.insert({t, k}).second) fail(l, l.rest_at, "duplicate value entry");
        if (n == 0) {
            c.constant[k] = r.coefficient.constant_term();
            continue;
        }
        Poly p = r.coefficient;
        if (alias) p = p.substitute({{Var::lam(), Poly::variable(vars, Var::lam_n(1))}}, vars);
        c.values[t][k] = p.embed(vars);
    }
    return c;
}

inline std::vector<CLinearMap> parse_gamma(std::string_view text, const ConformalAlgebra& A,
                                           const BimoduleStructure& sub, const BimoduleStructure& quotient) {
    using namespace detail;
    auto lines = split_lines(text);
    auto gamma = zero_gamma(A.rank(), sub.rank(), quotient.rank());
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& l : lines) {
        if (l.keyword != "gamma") fail(l, 0, "unknown directive '" + l.keyword + "'");
        Rule r = parse_rule(l, structure_vars());
        expect_arity(l, r, 2);
        auto i = lookup(l, A.generator_names(), r.lhs[0], "algebra");
        auto j = lookup(l, quotient.generator_names(), r.lhs[1], "quotient module");
        auto k = lookup(l, sub.generator_names(), r.target, "submodule");
        if (!seen.insert({i, j, k}).second) fail(l, l.rest_at, "duplicate gamma entry");
        gamma[i].at(j, k) = r.coefficient;
    }
    return gamma;
}

/// True if the text contains γ-lines (a Chom-valued 1-cochain) rather than value-lines.
inline bool is_gamma_file(std::string_view text) {
    for (const auto& l : detail::split_lines(text))
        if (l.keyword == "gamma") return true;
    return false;
}

inline FDAlgebra parse_fd_algebra(std::string_view text) {
    using namespace detail;
    auto lines = split_lines(text);
    auto names = require_generators(lines);
    FDAlgebra A(names);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& l : lines) {
        if (l.keyword == "generators:") continue;
        if (l.keyword == "unit") {
            Rule r = parse_rule(l, VarSet{});
            expect_arity(l, r, 0);
            if (!A.unit) A.unit = QVector(names.size());
            (*A.unit)[lookup(l, names, r.target, "algebra")] = r.coefficient.constant_term();
            continue;
        }
        if (l.keyword != "product") fail(l, 0, "unknown directive '" + l.keyword + "'");
        Rule r = parse_rule(l, VarSet{});
        expect_arity(l, r, 2);
        auto i = lookup(l, names, r.lhs[0], "algebra");
        auto j = lookup(l, names, r.lhs[1], "algebra");
        auto k = lookup(l, names, r.target, "algebra");
        if (!seen.insert({i, j, k}).second) fail(l, l.rest_at, "duplicate product entry");
        A.c(i, j, k) = r.coefficient.constant_term();
    }
    return A;
}

inline FDBimodule parse_fd_bimodule(std::string_view text, const FDAlgebra& A) {
    using namespace detail;
    auto lines = split_lines(text);
    auto names = require_generators(lines);
    FDBimodule M(A.dimension(), names);
    std::set<std::tuple<int, std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& l : lines) {
        if (l.keyword == "generators:") continue;
        const bool left = l.keyword == "left";
        if (!left && l.keyword != "right") fail(l, 0, "unknown directive '" + l.keyword + "'");
        Rule r = parse_rule(l, VarSet{});
        expect_arity(l, r, 2);
        auto k = lookup(l, names, r.target, "module");
        if (left) {
            auto i = lookup(l, A.names, r.lhs[0], "algebra");
            auto j = lookup(l, names, r.lhs[1], "module");
            if (!seen.insert({0, i, j, k}).second) fail(l, l.rest_at, "duplicate left action entry");
            M.left(i, j, k) = r.coefficient.constant_term();
        } else {
            auto j = lookup(l, names, r.lhs[0], "module");
            auto i = lookup(l, A.names, r.lhs[1], "algebra");
            if (!seen.insert({1, j, i, k}).second) fail(l, l.rest_at, "duplicate right action entry");
            M.right(j, i, k) = r.coefficient.constant_term();
        }
    }
    return M;
}

inline std::string format_algebra(const ConformalAlgebra& A) {
    std::string out = "generators:";
    for (const auto& n : A.generator_names()) out += " " + n;
    out += "\n";
    const auto& g = A.generator_names();
    for (std::size_t i = 0; i < A.rank(); ++i)
        for (std::size_t j = 0; j < A.rank(); ++j)
            for (std::size_t k = 0; k < A.rank(); ++k)
                if (!A.structure(i, j, k).is_zero())
                    out += "product " + g[i] + " " + g[j] + " -> " + detail::rule_rhs(A.structure(i, j, k), g[k]) + "\n";
    return out;
}

/// One "value ... -> (P) * u" line per nonzero component.
inline std::vector<std::string> format_cochain_lines(const Cochain& c, const std::vector<std::string>& algebra_names,
                                                     const std::vector<std::string>& module_names) {
    std::vector<std::string> out;
    if (c.degree == 0) {
        for (std::size_t k = 0; k < c.constant.size(); ++k)
            if (sgn(c.constant[k]) != 0) out.push_back("value -> " + c.constant[k].get_str() + " * " + module_names[k]);
        return out;
    }
    for (std::size_t t = 0; t < c.values.size(); ++t) {
        auto tuple = decode_tuple(t, c.algebra_rank, c.degree);
        std::string lhs = "value";
        for (auto i : tuple) lhs += " " + algebra_names[i];
        for (std::size_t k = 0; k < c.module_rank; ++k)
            if (!c.values[t][k].is_zero())
                out.push_back(lhs + " -> " + detail::rule_rhs(c.values[t][k], module_names[k]));
    }
    return out;
}

inline std::string format_cochain(const Cochain& c, const std::vector<std::string>& algebra_names,
                                  const std::vector<std::string>& module_names) {
    std::string out = "degree: " + std::to_string(c.degree) + "\n";
    for (const auto& l : format_cochain_lines(c, algebra_names, module_names)) out += l + "\n";
    return out;
}

/// "e -> (del) * e; f -> ..." one-line rendering of a 1-cochain or H-linear map.
inline std::string describe_cochain(const Cochain& c, const std::vector<std::string>& algebra_names,
                                    const std::vector<std::string>& module_names) {
    auto lines = format_cochain_lines(c, algebra_names, module_names);
    if (lines.empty()) return "0";
    std::string out;
    for (const auto& l : lines) {
        if (!out.empty()) out += "; ";
        out += l.substr(6); // drop "value "
    }
    return out;
}

} // namespace pseudo
