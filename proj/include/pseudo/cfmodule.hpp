#pragma once

// Conformal left/right/bimodules over a ConformalAlgebra, their axioms, and
// the bimodule Chom(N, M) of conformal linear maps.

#include <optional>
#include <string>
#include <vector>

#include "pseudo/conformal.hpp"

namespace pseudo {

/// Left action a_i λ u_j = Σ L_ijk u_k and right action u_j λ a_i = Σ R_jik u_k.
/// Either side may be absent (left-only modules are first class).
class BimoduleStructure {
public:
    BimoduleStructure() = default;
    BimoduleStructure(std::size_t algebra_rank, std::vector<std::string> names, bool has_left, bool has_right)
        : algebra_rank_(algebra_rank), names_(std::move(names)) {
        const auto r = names_.size();
        if (has_left) left_ = StructureTable(algebra_rank, r, r);
        if (has_right) right_ = StructureTable(r, algebra_rank, r);
    }

    std::size_t rank() const { return names_.size(); }
    std::size_t algebra_rank() const { return algebra_rank_; }
    const std::vector<std::string>& generator_names() const { return names_; }

    bool has_left() const { return left_.has_value(); }
    bool has_right() const { return right_.has_value(); }

    const StructureTable& left() const {
        if (!left_) throw ShapeError("module has no left action");
        return *left_;
    }
    const StructureTable& right() const {
        if (!right_) throw ShapeError("module has no right action");
        return *right_;
    }
    StructureTable& left() {
        if (!left_) throw ShapeError("module has no left action");
        return *left_;
    }
    StructureTable& right() {
        if (!right_) throw ShapeError("module has no right action");
        return *right_;
    }

    std::optional<std::size_t> generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    int max_degree() const {
        int d = 0;
        if (left_) d = std::max(d, left_->max_degree());
        if (right_) d = std::max(d, right_->max_degree());
        return d;
    }

private:
    std::size_t algebra_rank_ = 0;
    std::vector<std::string> names_;
    std::optional<StructureTable> left_;
    std::optional<StructureTable> right_;
};

/// A as a bimodule over itself.
inline BimoduleStructure regular_bimodule(const ConformalAlgebra& A) {
    BimoduleStructure M(A.rank(), A.generator_names(), true, true);
    M.left() = A.product();
    M.right() = A.product();
    return M;
}

inline void check_compatible(const ConformalAlgebra& A, const BimoduleStructure& M) {
    if (M.algebra_rank() != A.rank()) throw ShapeError("module is defined over an algebra of another rank");
}

enum class ModuleAxiom { Left, Right, Bimodule };

inline const char* to_string(ModuleAxiom a) {
    switch (a) {
    case ModuleAxiom::Left: return "left";
    case ModuleAxiom::Right: return "right";
    case ModuleAxiom::Bimodule: return "bimodule";
    }
    return "?";
}

/// Triple indices follow the identity's argument order:
///   left:     (a_i, a_j, u_k)  a_λ(b_μ u) = (a_λ b)_{λ+μ} u
///   right:    (u_i, a_j, a_k)  u_λ(a_μ b) = (u_λ a)_{λ+μ} b
///   bimodule: (a_i, u_j, a_k)  a_λ(u_μ b) = (a_λ u)_{λ+μ} b
/// residual = (outer-first side) − (nested side), i.e. rhs − lhs of the displayed identity.
struct ModuleFailure {
    ModuleAxiom axiom;
    TripleFailure triple;
};

/// Checks every applicable module identity on all generator triples.
inline std::optional<ModuleFailure> check_module_axioms(const ConformalAlgebra& A, const BimoduleStructure& M) {
    check_compatible(A, M);
    const VarSet& ctx = triple_vars();
    const auto n = A.rank();
    const auto r = M.rank();
    auto run = [&](ModuleAxiom ax, std::size_t ni, std::size_t nj, std::size_t nk, const StructureTable& X,
                   const StructureTable& Y, const StructureTable& Z,
                   const StructureTable& W) -> std::optional<ModuleFailure> {
        // lhs x_i Z_λ (x_j W_μ x_k), rhs (x_i X_λ x_j) Y_{λ+μ} x_k, as the axioms are usually written
        for (std::size_t i = 0; i < ni; ++i)
            for (std::size_t j = 0; j < nj; ++j)
                for (std::size_t k = 0; k < nk; ++k) {
                    auto ei = unit_vec(ni, i, ctx), ej = unit_vec(nj, j, ctx), ek = unit_vec(nk, k, ctx);
                    auto lhs = nested_right(Z, W, ei, ej, ek);
                    auto rhs = nested_left(X, Y, ei, ej, ek);
                    auto res = lhs - rhs;
                    if (!is_zero(res))
                        return ModuleFailure{ax, TripleFailure{i, j, k, std::move(lhs), std::move(rhs),
                                                               std::move(res)}};
                }
        return std::nullopt;
    };
    if (M.has_left()) {
        if (auto f = run(ModuleAxiom::Left, n, n, r, A.product(), M.left(), M.left(), M.left())) return f;
    }
    if (M.has_right()) {
        if (auto f = run(ModuleAxiom::Right, r, n, n, M.right(), M.right(), M.right(), A.product())) return f;
    }
    if (M.has_left() && M.has_right()) {
        if (auto f = run(ModuleAxiom::Bimodule, n, r, n, M.left(), M.right(), M.left(), M.right())) return f;
    }
    return std::nullopt;
}

/// A conformal linear map f: N -> M given on generators, f_λ(v_j) = Σ_k F_jk(λ, ∂) u_k.
struct CLinearMap {
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    std::vector<Poly> entries; // row-major (j, k), polynomials in {λ, ∂}

    CLinearMap() = default;
    CLinearMap(std::size_t source, std::size_t target)
        : source_rank(source), target_rank(target), entries(source * target, Poly(structure_vars())) {}

    const Poly& at(std::size_t j, std::size_t k) const { return entries[j * target_rank + k]; }
    Poly& at(std::size_t j, std::size_t k) { return entries[j * target_rank + k]; }

    /// (∂f)_λ = −λ f_λ
    CLinearMap derivative() const {
        CLinearMap g = *this;
        const Poly lam = Poly::variable(structure_vars(), Var::lam());
        for (auto& p : g.entries) p = -(lam * p.embed(structure_vars()));
        return g;
    }

    bool is_zero() const {
        for (const auto& p : entries)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const CLinearMap&, const CLinearMap&) = default;
};

/// A Chom(N, M)-valued quantity whose entries may carry extra parameters.
/// `eval` names the variable playing the role of the map's own λ, i.e. the
/// entries describe (·)_eval(v_j) = Σ_k entries(j, k) u_k over `vars`.
struct ChomFamily {
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    VarSet vars;
    Var eval = Var::mu();
    std::vector<Poly> entries;

    const Poly& at(std::size_t j, std::size_t k) const { return entries[j * target_rank + k]; }

    PolyVec row(std::size_t j) const {
        return PolyVec(entries.begin() + j * target_rank, entries.begin() + (j + 1) * target_rank);
    }

    ChomFamily substituted(const Bindings& b) const {
        ChomFamily r = *this;
        for (auto& p : r.entries) p = p.substitute(b, vars);
        return r;
    }

    bool is_zero() const {
        for (const auto& p : entries)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ChomFamily& a, const ChomFamily& b) {
        return a.source_rank == b.source_rank && a.target_rank == b.target_rank && a.eval == b.eval &&
               a.entries == b.entries;
    }
};

/// View a CLinearMap as a family over `ctx` with evaluation variable `eval`.
inline ChomFamily as_family(const CLinearMap& f, const VarSet& ctx, Var eval) {
    ChomFamily out{f.source_rank, f.target_rank, ctx, eval, {}};
    const Bindings b{{Var::lam(), Poly::variable(ctx, eval)}, {Var::del(), Poly::variable(ctx, Var::del())}};
    for (const auto& p : f.entries) out.entries.push_back(p.embed(structure_vars()).substitute(b, ctx));
    return out;
}

/// (a_Λ f)_t(v) = a_Λ(f_{t−Λ} v); M = target of f carries the left action.
inline ChomFamily chom_left_act(const BimoduleStructure& target, const PolyVec& a, const ChomFamily& f,
                                const Poly& lambda) {
    if (f.target_rank != target.rank()) throw ShapeError("Chom left action: target module mismatch");
    const VarSet& ctx = f.vars;
    const Poly t = Poly::variable(ctx, f.eval);
    ChomFamily shifted = f.substituted({{f.eval, t - lambda.embed(ctx)}});
    ChomFamily out{f.source_rank, f.target_rank, ctx, f.eval, {}};
    for (std::size_t j = 0; j < f.source_rank; ++j) {
        auto v = act(target.left(), a, shifted.row(j), lambda, ctx);
        out.entries.insert(out.entries.end(), v.begin(), v.end());
    }
    return out;
}

/// (f_Λ a)_t(v) = f_Λ(a_{t−Λ} v); N = source of f carries the left action.
inline ChomFamily chom_right_act(const BimoduleStructure& source, const ChomFamily& f, const PolyVec& a,
                                 const Poly& lambda) {
    if (f.source_rank != source.rank()) throw ShapeError("Chom right action: source module mismatch");
    const VarSet& ctx = f.vars;
    const Poly t = Poly::variable(ctx, f.eval);
    const Poly lam = lambda.embed(ctx);
    const Poly del = Poly::variable(ctx, Var::del());
    if (lam.mentions(f.eval)) throw AlignmentError("Chom right action: Λ must not involve the evaluation variable");
    // f_Λ: entries with eval ↦ Λ; applied to Σ q_k(∂) v_k gives Σ q_k(Λ + ∂) F_k(Λ, ∂).
    ChomFamily at_lambda = f.substituted({{f.eval, lam}});
    const Bindings shift{{Var::del(), lam + del}};
    ChomFamily out{f.source_rank, f.target_rank, ctx, f.eval, std::vector<Poly>(f.entries.size(), Poly(ctx))};
    for (std::size_t j = 0; j < f.source_rank; ++j) {
        auto inner = act(source.left(), a, unit_vec(source.rank(), j, ctx), t - lam, ctx);
        for (std::size_t k = 0; k < f.source_rank; ++k) {
            if (inner[k].is_zero()) continue;
            Poly q = inner[k].substitute(shift, ctx);
            for (std::size_t m = 0; m < f.target_rank; ++m) {
                const Poly& e = at_lambda.at(k, m);
                if (!e.is_zero()) out.entries[j * f.target_rank + m] += q * e;
            }
        }
    }
    return out;
}

/// (a_λ f)_μ as polynomials in {λ, μ, ∂}.
inline ChomFamily chom_left_action(const BimoduleStructure& target, const CElement& a, const CLinearMap& f) {
    const VarSet& ctx = triple_vars();
    return chom_left_act(target, embed(a.coords, ctx), as_family(f, ctx, Var::mu()),
                         Poly::variable(ctx, Var::lam()));
}

/// (f_λ a)_μ as polynomials in {λ, μ, ∂}.
inline ChomFamily chom_right_action(const BimoduleStructure& source, const CLinearMap& f, const CElement& a) {
    const VarSet& ctx = triple_vars();
    return chom_right_act(source, as_family(f, ctx, Var::mu()), embed(a.coords, ctx),
                          Poly::variable(ctx, Var::lam()));
}

} // namespace pseudo
