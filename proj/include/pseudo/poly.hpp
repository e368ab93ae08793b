#pragma once

// Exact multivariate polynomials over Q in the formal variables of the
// λ-calculus: ∂ (del), λ (lam), μ (mu) and λ1, λ2, ... (lam1, lam2, ...).

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pseudo/errors.hpp"

namespace pseudo {

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// A formal variable. Ids are globally ordered: del < lam < mu < lam1 < lam2 < ...
class Var {
public:
    constexpr explicit Var(int id) : id_(id) {}

    static constexpr Var del() { return Var(0); }
    static constexpr Var lam() { return Var(1); }
    static constexpr Var mu() { return Var(2); }
    /// λ_k for k >= 1.
    static constexpr Var lam_n(int k) { return Var(2 + k); }

    constexpr int id() const { return id_; }

    std::string name() const {
        switch (id_) {
        case 0: return "del";
        case 1: return "lam";
        case 2: return "mu";
        default: return "lam" + std::to_string(id_ - 2);
        }
    }

    static std::optional<Var> from_name(std::string_view s) {
        if (s == "del") return del();
        if (s == "lam") return lam();
        if (s == "mu") return mu();
        if (s.size() > 3 && s.substr(0, 3) == "lam") {
            int k = 0;
            for (char c : s.substr(3)) {
                if (c < '0' || c > '9') return std::nullopt;
                k = k * 10 + (c - '0');
                if (k > 1000) return std::nullopt;
            }
            if (s[3] == '0') return std::nullopt;
            return lam_n(k);
        }
        return std::nullopt;
    }

    constexpr auto operator<=>(const Var&) const = default;

private:
    int id_;
};

/// Ordered set of variables; the ordering fixes exponent-vector layout.
class VarSet {
public:
    VarSet() = default;
    VarSet(std::initializer_list<Var> vars) : vars_(vars) { normalize(); }
    explicit VarSet(std::vector<Var> vars) : vars_(std::move(vars)) { normalize(); }

    std::size_t size() const { return vars_.size(); }
    bool empty() const { return vars_.empty(); }
    const Var& operator[](std::size_t i) const { return vars_[i]; }
    auto begin() const { return vars_.begin(); }
    auto end() const { return vars_.end(); }

    std::optional<std::size_t> index_of(Var v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }
    bool contains(Var v) const { return index_of(v).has_value(); }

    bool includes(const VarSet& other) const {
        return std::includes(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end());
    }

    VarSet united(const VarSet& other) const {
        std::vector<Var> out;
        std::set_union(vars_.begin(), vars_.end(), other.vars_.begin(), other.vars_.end(),
                       std::back_inserter(out));
        return VarSet(std::move(out));
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) s += ", ";
            s += vars_[i].name();
        }
        return s + "}";
    }

    friend bool operator==(const VarSet&, const VarSet&) = default;

private:
    void normalize() {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    }

    std::vector<Var> vars_;
};

/// {∂, λ1, ..., λk}
inline VarSet del_and_lams(int k) {
    std::vector<Var> v{Var::del()};
    for (int i = 1; i <= k; ++i) v.push_back(Var::lam_n(i));
    return VarSet(std::move(v));
}

class Poly;
using Bindings = std::map<Var, Poly>;

/// Sparse polynomial with exact rational coefficients over a fixed VarSet.
/// Invariant: no stored zero coefficient; every exponent vector has vars().size() entries.
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    Poly() = default;
    explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

    static Poly constant(const VarSet& vars, const Rational& c) {
        Poly p(vars);
        p.add_term(Exponents(vars.size(), 0), c);
        return p;
    }

    static Poly variable(const VarSet& vars, Var v) {
        auto idx = vars.index_of(v);
        if (!idx) throw AlignmentError("variable " + v.name() + " is not in " + vars.to_string());
        Exponents e(vars.size(), 0);
        e[*idx] = 1;
        Poly p(vars);
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    static Poly monomial(const VarSet& vars, Exponents e, const Rational& c = 1) {
        if (e.size() != vars.size()) throw AlignmentError("exponent vector length mismatch");
        Poly p(vars);
        p.add_term(std::move(e), c);
        return p;
    }

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                  [](int e) { return e == 0; }));
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

    /// Total degree; std::nullopt for the zero polynomial.
    std::optional<int> total_degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (!d || s > *d) d = s;
        }
        return d;
    }

    int degree_in(Var v) const {
        auto idx = vars_.index_of(v);
        if (!idx) return 0;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
        return d;
    }

    /// Does any term actually involve v?
    bool mentions(Var v) const { return degree_in(v) > 0; }

    Poly& operator+=(const Poly& q) {
        check_aligned(q);
        for (const auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }

    Poly& operator-=(const Poly& q) {
        check_aligned(q);
        for (const auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }

    Poly& operator*=(const Rational& c) {
        if (sgn(c) == 0) {
            terms_.clear();
        } else {
            for (auto& [e, x] : terms_) x *= c;
        }
        return *this;
    }

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& p, const Poly& q) {
        p.check_aligned(q);
        Poly r(p.vars_);
        if (p.is_zero() || q.is_zero()) return r;
        const std::size_t n = p.vars_.size();
        Exponents e(n);
        for (const auto& [ep, cp] : p.terms_) {
            for (const auto& [eq, cq] : q.terms_) {
                for (std::size_t i = 0; i < n; ++i) e[i] = ep[i] + eq[i];
                r.add_term(e, cp * cq);
            }
        }
        return r;
    }

    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    Poly pow(int k) const {
        Poly r = constant(vars_, 1);
        Poly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    /// Re-expresses the polynomial over a superset of its variables.
    Poly embed(const VarSet& target) const {
        if (target == vars_) return *this;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto idx = target.index_of(vars_[i]);
            if (!idx) {
                if (degree_in(vars_[i]) == 0) {
                    pos[i] = target.size();
                    continue;
                }
                throw AlignmentError("cannot embed " + vars_.to_string() + " into " + target.to_string());
            }
            pos[i] = *idx;
        }
        Poly r(target);
        for (const auto& [e, c] : terms_) {
            Exponents f(target.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (pos[i] < target.size()) f[pos[i]] = e[i];
            }
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    /// Ring homomorphism sending each bound variable to its image and every other
    /// variable to itself inside `target`.
    Poly substitute(const Bindings& bindings, const VarSet& target) const {
        for (const auto& [v, img] : bindings) {
            if (!vars_.contains(v)) throw AlignmentError("substitution binds unknown variable " + v.name());
            if (!target.includes(img.vars())) {
                throw AlignmentError("replacement for " + v.name() + " lives outside " + target.to_string());
            }
        }
        const std::size_t n = vars_.size();
        std::vector<Poly> images;
        images.reserve(n);
        // A plain rename (unbound, or bound to a bare variable) only moves exponents.
        std::vector<std::optional<std::size_t>> rename(n);
        for (std::size_t i = 0; i < n; ++i) {
            auto it = bindings.find(vars_[i]);
            if (it == bindings.end()) {
                auto idx = target.index_of(vars_[i]);
                if (!idx) {
                    if (degree_in(vars_[i]) > 0) {
                        throw AlignmentError("unbound variable " + vars_[i].name() + " is not in " +
                                             target.to_string());
                    }
                    images.emplace_back(target);
                    continue;
                }
                rename[i] = *idx;
                images.emplace_back(target);
            } else {
                Poly img = it->second.embed(target);
                if (img.terms_.size() == 1 && img.terms_.begin()->second == 1) {
                    const auto& e = img.terms_.begin()->first;
                    int total = 0;
                    std::size_t at = 0;
                    for (std::size_t j = 0; j < e.size(); ++j) {
                        total += e[j];
                        if (e[j]) at = j;
                    }
                    if (total == 1) rename[i] = at;
                }
                images.push_back(std::move(img));
            }
        }

        std::vector<std::vector<Poly>> powers(n);
        auto power = [&](std::size_t i, int k) -> const Poly& {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target, 1));
            while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
            return cache[k];
        };

        Poly r(target);
        for (const auto& [e, c] : terms_) {
            Exponents base(target.size(), 0);
            Poly acc;
            bool has_acc = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                if (rename[i]) {
                    base[*rename[i]] += e[i];
                } else {
                    const Poly& pw = power(i, e[i]);
                    acc = has_acc ? acc * pw : pw;
                    has_acc = true;
                }
            }
            if (!has_acc) {
                r.add_term(base, c);
                continue;
            }
            for (const auto& [ea, ca] : acc.terms_) {
                Exponents f = base;
                for (std::size_t j = 0; j < f.size(); ++j) f[j] += ea[j];
                r.add_term(f, c * ca);
            }
        }
        return r;
    }

    /// Same as above with the target taken from the replacements (or vars() if none).
    Poly substitute(const Bindings& bindings) const {
        VarSet target;
        bool first = true;
        for (const auto& [v, img] : bindings) {
            if (first) {
                target = img.vars();
                first = false;
            } else if (!(img.vars() == target)) {
                throw AlignmentError("replacement polynomials must share a variable set");
            }
        }
        if (first) return *this;
        for (Var v : vars_) {
            if (!bindings.count(v)) target = target.united(VarSet{v});
        }
        return substitute(bindings, target);
    }

    /// Canonical text: graded-lex descending terms, grammar-compatible with parse_poly.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const TermMap::value_type*> order;
        order.reserve(terms_.size());
        for (const auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
            int da = 0, db = 0;
            for (int x : a->first) da += x;
            for (int x : b->first) db += x;
            if (da != db) return da > db;
            return a->first > b->first;
        });
        std::string out;
        bool first = true;
        for (const auto* t : order) {
            Rational c = t->second;
            bool negative = sgn(c) < 0;
            if (negative) c = -c;
            std::string mono;
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                int k = t->first[i];
                if (k == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += vars_[i].name();
                if (k > 1) mono += '^' + std::to_string(k);
            }
            std::string term;
            if (mono.empty()) {
                term = c.get_str();
            } else if (c == 1) {
                term = mono;
            } else {
                term = c.get_str() + "*" + mono;
            }
            if (first) {
                out = negative ? "-" + term : term;
                first = false;
            } else {
                out += negative ? " - " : " + ";
                out += term;
            }
        }
        return out;
    }

    friend bool operator==(const Poly& p, const Poly& q) {
        if (p.vars_ == q.vars_) return p.terms_ == q.terms_;
        if (p.is_zero() && q.is_zero()) return true;
        VarSet u = p.vars_.united(q.vars_);
        return p.embed(u).terms_ == q.embed(u).terms_;
    }

private:
    void check_aligned(const Poly& q) const {
        if (!(vars_ == q.vars_)) {
            throw AlignmentError("variable sets differ: " + vars_.to_string() + " vs " + q.vars_.to_string());
        }
    }

    void add_term(const Exponents& e, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    VarSet vars_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

/// A vector of polynomials indexed by generators; the value of a λ-product or action.
using PolyVec = std::vector<Poly>;

inline PolyVec zero_vec(std::size_t n, const VarSet& vars) { return PolyVec(n, Poly(vars)); }

inline PolyVec unit_vec(std::size_t n, std::size_t i, const VarSet& vars) {
    PolyVec v = zero_vec(n, vars);
    v[i] = Poly::constant(vars, 1);
    return v;
}

inline PolyVec embed(const PolyVec& v, const VarSet& vars) {
    PolyVec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.embed(vars));
    return out;
}

inline PolyVec substitute(const PolyVec& v, const Bindings& b, const VarSet& target) {
    PolyVec out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.substitute(b, target));
    return out;
}

inline bool is_zero(const PolyVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

inline PolyVec& operator+=(PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline PolyVec& operator-=(PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
inline PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }

inline PolyVec operator*(const Poly& p, const PolyVec& v) {
    PolyVec out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(p * q);
    return out;
}

inline std::optional<int> total_degree(const PolyVec& v) {
    std::optional<int> d;
    for (const auto& p : v) {
        auto dp = p.total_degree();
        if (dp && (!d || *dp > *d)) d = dp;
    }
    return d;
}

/// "P0 * g0 + P1 * g1" style rendering; "0" when all components vanish.
inline std::string to_string(const PolyVec& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + v[i].to_string() + ")*" + (i < names.size() ? names[i] : "#" + std::to_string(i));
    }
    return out.empty() ? "0" : out;
}

} // namespace pseudo
