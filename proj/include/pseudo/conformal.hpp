#pragma once

// Finite associative conformal algebras given by λ-product structure
// polynomials on a chosen C[∂]-basis, and the sesquilinear calculus used to
// evaluate products and actions on arbitrary elements.

#include <optional>
#include <string>
#include <vector>

#include "pseudo/errors.hpp"
#include "pseudo/poly.hpp"

namespace pseudo {

/// {∂, λ}: the variables of every structure polynomial.
inline const VarSet& structure_vars() {
    static const VarSet v{Var::del(), Var::lam()};
    return v;
}

/// {∂, λ, μ}: the variables of triple (associativity-type) identities.
inline const VarSet& triple_vars() {
    static const VarSet v{Var::del(), Var::lam(), Var::mu()};
    return v;
}

/// Bilinear λ-operation x_i λ y_j = Σ_k T_ijk(λ, ∂) z_k, stored densely.
/// Used for algebra products (n, n -> n), left actions (n, r -> r) and right
/// actions (r, n -> r).
class StructureTable {
public:
    StructureTable() = default;
    StructureTable(std::size_t left, std::size_t right, std::size_t out)
        : left_(left), right_(right), out_(out), entries_(left * right * out, Poly(structure_vars())) {}

    std::size_t left_rank() const { return left_; }
    std::size_t right_rank() const { return right_; }
    std::size_t out_rank() const { return out_; }

    const Poly& at(std::size_t i, std::size_t j, std::size_t k) const { return entries_[index(i, j, k)]; }

    void set(std::size_t i, std::size_t j, std::size_t k, Poly p) {
        if (!(p.vars() == structure_vars())) p = p.embed(structure_vars());
        entries_[index(i, j, k)] = std::move(p);
    }

    PolyVec row(std::size_t i, std::size_t j) const {
        PolyVec v;
        v.reserve(out_);
        for (std::size_t k = 0; k < out_; ++k) v.push_back(at(i, j, k));
        return v;
    }

    /// Max total degree over all entries, or 0 for an all-zero table.
    int max_degree() const {
        int d = 0;
        for (const auto& p : entries_) {
            if (auto dp = p.total_degree()) d = std::max(d, *dp);
        }
        return d;
    }

    bool all_zero() const {
        for (const auto& p : entries_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= left_ || j >= right_ || k >= out_) throw ShapeError("structure table index out of range");
        return (i * right_ + j) * out_ + k;
    }

    std::size_t left_ = 0;
    std::size_t right_ = 0;
    std::size_t out_ = 0;
    std::vector<Poly> entries_;
};

/// Evaluates x_Λ y for x = Σ p_i(∂) x_i and y = Σ q_j(∂) y_j via sesquilinearity:
///   Σ p_i(-Λ) q_j(Λ + ∂) T_ijk(Λ, ∂) z_k.
/// The coefficients of x, y and Λ live in `ctx` (which must contain ∂); Λ must not involve ∂.
/// Any other variables in the coefficients are scalar parameters.
inline PolyVec act(const StructureTable& t, const PolyVec& x, const PolyVec& y, const Poly& lambda,
                   const VarSet& ctx) {
    if (x.size() != t.left_rank() || y.size() != t.right_rank()) throw ShapeError("act: operand rank mismatch");
    if (lambda.mentions(Var::del())) throw AlignmentError("act: Λ must not involve ∂");
    const Poly lam = lambda.embed(ctx);
    const Poly del = Poly::variable(ctx, Var::del());
    const Bindings left_rule{{Var::del(), -lam}};
    const Bindings right_rule{{Var::del(), lam + del}};
    const Bindings table_rule{{Var::lam(), lam}, {Var::del(), del}};

    PolyVec out = zero_vec(t.out_rank(), ctx);
    std::vector<std::optional<Poly>> y_sub(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        const Poly xi = x[i].embed(ctx).substitute(left_rule, ctx);
        if (xi.is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            if (!y_sub[j]) y_sub[j] = y[j].embed(ctx).substitute(right_rule, ctx);
            const Poly coeff = xi * *y_sub[j];
            for (std::size_t k = 0; k < t.out_rank(); ++k) {
                const Poly& s = t.at(i, j, k);
                if (s.is_zero()) continue;
                out[k] += coeff * s.substitute(table_rule, ctx);
            }
        }
    }
    return out;
}

class ConformalAlgebra {
public:
    ConformalAlgebra() = default;
    explicit ConformalAlgebra(std::vector<std::string> names)
        : names_(std::move(names)), product_(names_.size(), names_.size(), names_.size()) {}
    ConformalAlgebra(std::vector<std::string> names, StructureTable product)
        : names_(std::move(names)), product_(std::move(product)) {
        const auto n = names_.size();
        if (product_.left_rank() != n || product_.right_rank() != n || product_.out_rank() != n) {
            throw ShapeError("product table does not match the generator count");
        }
    }

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& generator_names() const { return names_; }
    const StructureTable& product() const { return product_; }

    /// P_ijk, the coefficient of a_k in a_i λ a_j.
    const Poly& structure(std::size_t i, std::size_t j, std::size_t k) const { return product_.at(i, j, k); }
    void set_structure(std::size_t i, std::size_t j, std::size_t k, Poly p) { product_.set(i, j, k, std::move(p)); }

    std::optional<std::size_t> generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

private:
    std::vector<std::string> names_;
    StructureTable product_;
};

/// An element Σ p_i(∂) a_i of a conformal algebra.
struct CElement {
    PolyVec coords; // polynomials in {∂}

    static CElement generator(std::size_t rank, std::size_t i) {
        return CElement{unit_vec(rank, i, VarSet{Var::del()})};
    }
    /// ∂ applied to the element.
    CElement derivative() const {
        Poly d = Poly::variable(VarSet{Var::del()}, Var::del());
        CElement r;
        for (const auto& p : coords) r.coords.push_back(d * p.embed(VarSet{Var::del()}));
        return r;
    }
};

/// a_λ b as polynomials in {λ, ∂} over the generators.
inline PolyVec lambda_product(const ConformalAlgebra& A, const CElement& a, const CElement& b) {
    if (a.coords.size() != A.rank() || b.coords.size() != A.rank()) throw ShapeError("element of another algebra");
    for (const auto* e : {&a, &b})
        for (const auto& p : e->coords)
            if (!VarSet{Var::del()}.includes(p.vars()) && !p.is_zero())
                throw AlignmentError("element coordinates must be polynomials in ∂");
    return act(A.product(), a.coords, b.coords, Poly::variable(structure_vars(), Var::lam()), structure_vars());
}

/// (x_i X_λ x_j) Y_{λ+μ} x_k over {∂, λ, μ}; X, Y are products or actions with matching ranks.
inline PolyVec nested_left(const StructureTable& X, const StructureTable& Y, const PolyVec& a, const PolyVec& b,
                           const PolyVec& c) {
    const VarSet& ctx = triple_vars();
    const Poly lam = Poly::variable(ctx, Var::lam());
    const Poly mu = Poly::variable(ctx, Var::mu());
    return act(Y, act(X, a, b, lam, ctx), c, lam + mu, ctx);
}

/// x_i X_λ (x_j Y_μ x_k) over {∂, λ, μ}.
inline PolyVec nested_right(const StructureTable& X, const StructureTable& Y, const PolyVec& a, const PolyVec& b,
                            const PolyVec& c) {
    const VarSet& ctx = triple_vars();
    const Poly lam = Poly::variable(ctx, Var::lam());
    const Poly mu = Poly::variable(ctx, Var::mu());
    return act(X, a, act(Y, b, c, mu, ctx), lam, ctx);
}

/// A generator triple on which a triple identity fails. residual = lhs - rhs.
struct TripleFailure {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    PolyVec lhs;
    PolyVec rhs;
    PolyVec residual;
};

/// (a_λ b)_{λ+μ} c − a_λ(b_μ c) for generators a_i, a_j, a_k.
inline PolyVec associator(const ConformalAlgebra& A, std::size_t i, std::size_t j, std::size_t k) {
    const VarSet& ctx = triple_vars();
    const auto n = A.rank();
    auto ei = unit_vec(n, i, ctx), ej = unit_vec(n, j, ctx), ek = unit_vec(n, k, ctx);
    return nested_left(A.product(), A.product(), ei, ej, ek) - nested_right(A.product(), A.product(), ei, ej, ek);
}

/// First failing generator triple in lexicographic order, or nullopt if associative.
inline std::optional<TripleFailure> check_associativity(const ConformalAlgebra& A) {
    const VarSet& ctx = triple_vars();
    const auto n = A.rank();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                auto ei = unit_vec(n, i, ctx), ej = unit_vec(n, j, ctx), ek = unit_vec(n, k, ctx);
                auto lhs = nested_left(A.product(), A.product(), ei, ej, ek);
                auto rhs = nested_right(A.product(), A.product(), ei, ej, ek);
                auto res = lhs - rhs;
                if (!is_zero(res)) return TripleFailure{i, j, k, std::move(lhs), std::move(rhs), std::move(res)};
            }
        }
    }
    return std::nullopt;
}

} // namespace pseudo
