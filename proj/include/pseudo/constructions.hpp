#pragma once

// Objects classified by low-degree cohomology, built from cochains and checked
// directly against the axioms:
//   * module extensions 0 -> M -> E -> N -> 0 from γ ∈ C¹(A, Chom(N, M)),
//   * abelian extensions 0 -> M -> E -> A -> 0 from φ ∈ C²(A, M),
//   * first-order deformations a_λ b + t f_λ(a, b) from f ∈ C²(A, A).
// Every builder runs both the direct axiom check and the cocycle check and
// throws InconsistencyError if they disagree.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pseudo/cohomology.hpp"
#include "pseudo/linearize.hpp"

namespace pseudo {

// ---------------------------------------------------------------------------
// Module extensions

/// γ(a_i) ∈ Chom(N, M) for every algebra generator, with M (the submodule) of
/// rank r and N (the quotient) of rank s, both left modules.
struct ExtensionDatum {
    ConformalAlgebra algebra;
    BimoduleStructure sub;      // M
    BimoduleStructure quotient; // N
    std::vector<CLinearMap> gamma;
};

/// A C[∂]-linear map N -> M given on generators: β(v_j) = Σ_k B_jk(∂) u_k.
struct HLinearMap {
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    std::vector<Poly> entries; // (j, k) row-major, polynomials in {∂}

    HLinearMap() = default;
    HLinearMap(std::size_t source, std::size_t target)
        : source_rank(source), target_rank(target), entries(source * target, Poly(VarSet{Var::del()})) {}

    const Poly& at(std::size_t j, std::size_t k) const { return entries[j * target_rank + k]; }
    Poly& at(std::size_t j, std::size_t k) { return entries[j * target_rank + k]; }
};

inline std::vector<CLinearMap> zero_gamma(std::size_t algebra_rank, std::size_t sub_rank, std::size_t quotient_rank) {
    return std::vector<CLinearMap>(algebra_rank, CLinearMap(quotient_rank, sub_rank));
}

namespace detail {

inline void check_extension_shapes(const ExtensionDatum& d) {
    check_compatible(d.algebra, d.sub);
    check_compatible(d.algebra, d.quotient);
    if (!d.sub.has_left() || !d.quotient.has_left()) throw ShapeError("module extensions need left modules");
    if (d.gamma.size() != d.algebra.rank()) throw ShapeError("γ must have one value per algebra generator");
    for (const auto& g : d.gamma) {
        if (g.source_rank != d.quotient.rank() || g.target_rank != d.sub.rank()) {
            throw ShapeError("γ values must be maps from the quotient to the submodule");
        }
    }
}

/// Appends `more` to `names`, priming any name already taken.
inline void append_distinct(std::vector<std::string>& names, const std::vector<std::string>& more) {
    for (std::string q : more) {
        while (std::find(names.begin(), names.end(), q) != names.end()) q += "'";
        names.push_back(q);
    }
}

inline PolyVec flatten(const std::vector<CLinearMap>& maps) {
    PolyVec out;
    for (const auto& f : maps)
        for (const auto& p : f.entries) out.push_back(p.embed(structure_vars()));
    return out;
}

} // namespace detail

/// (d₁γ)_λ(a_i, a_j) as Chom-families in {∂, λ, μ} evaluated at μ, indexed i * n + j:
///   a_λ γ(b) − γ(a_λ b) + γ(a)_λ b  with the Chom bimodule actions.
inline std::vector<ChomFamily> chom_d1(const ExtensionDatum& d) {
    detail::check_extension_shapes(d);
    const VarSet& ctx = triple_vars();
    const std::size_t n = d.algebra.rank();
    const Poly lam = Poly::variable(ctx, Var::lam());
    const Poly mu = Poly::variable(ctx, Var::mu());
    std::vector<ChomFamily> gam;
    for (const auto& g : d.gamma) gam.push_back(as_family(g, ctx, Var::mu()));

    std::vector<ChomFamily> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto ei = unit_vec(n, i, ctx), ej = unit_vec(n, j, ctx);
            ChomFamily total = chom_left_act(d.sub, ei, gam[j], lam);
            ChomFamily third = chom_right_act(d.quotient, gam[i], ej, lam);
            for (std::size_t e = 0; e < total.entries.size(); ++e) total.entries[e] += third.entries[e];
            // γ is C[∂]-linear and ∂ acts on Chom as −μ at evaluation variable μ.
            auto prod = act(d.algebra.product(), ei, ej, lam, ctx);
            for (std::size_t k = 0; k < n; ++k) {
                if (prod[k].is_zero()) continue;
                Poly c = prod[k].substitute({{Var::del(), -mu}}, ctx);
                for (std::size_t e = 0; e < total.entries.size(); ++e) total.entries[e] -= c * gam[k].entries[e];
            }
            out.push_back(std::move(total));
        }
    }
    return out;
}

inline bool is_chom_cocycle(const ExtensionDatum& d) {
    for (const auto& f : chom_d1(d))
        if (!f.is_zero()) return false;
    return true;
}

/// γ = d₀β: γ(a)_λ(v) = a_λ β(v) − β(a_λ v).
inline std::vector<CLinearMap> chom_d0(const ConformalAlgebra& A, const BimoduleStructure& M,
                                       const BimoduleStructure& N, const HLinearMap& beta) {
    check_compatible(A, M);
    check_compatible(A, N);
    if (beta.source_rank != N.rank() || beta.target_rank != M.rank()) throw ShapeError("β must map N to M");
    const VarSet& ctx = structure_vars();
    const Poly lam = Poly::variable(ctx, Var::lam());
    const std::size_t n = A.rank(), r = M.rank(), s = N.rank();
    std::vector<PolyVec> beta_rows;
    for (std::size_t j = 0; j < s; ++j) {
        PolyVec row;
        for (std::size_t k = 0; k < r; ++k) row.push_back(beta.at(j, k).embed(ctx));
        beta_rows.push_back(std::move(row));
    }
    std::vector<CLinearMap> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto ei = unit_vec(n, i, ctx);
        CLinearMap g(s, r);
        for (std::size_t j = 0; j < s; ++j) {
            PolyVec v = act(M.left(), ei, beta_rows[j], lam, ctx);
            PolyVec w = act(N.left(), ei, unit_vec(s, j, ctx), lam, ctx);
            for (std::size_t l = 0; l < s; ++l) {
                if (w[l].is_zero()) continue;
                for (std::size_t k = 0; k < r; ++k) v[k] -= w[l] * beta_rows[l][k];
            }
            for (std::size_t k = 0; k < r; ++k) g.at(j, k) = v[k];
        }
        out.push_back(std::move(g));
    }
    return out;
}

struct ExtensionResult {
    BimoduleStructure module;              // E = M ⊕ N, left action only
    std::optional<ModuleFailure> failure;  // direct left-module axiom check
    bool cocycle = false;                  // d₁γ = 0
    bool is_module() const { return !failure.has_value(); }
};

/// E = M ⊕ N with a_λ(u, v) = (a_λ u + γ(a)_λ v, a_λ v).
inline ExtensionResult build_extension(const ExtensionDatum& d) {
    detail::check_extension_shapes(d);
    for (const auto* mod : {&d.sub, &d.quotient}) {
        BimoduleStructure left_only(mod->algebra_rank(), mod->generator_names(), true, false);
        left_only.left() = mod->left();
        if (auto f = check_module_axioms(d.algebra, left_only)) {
            throw AxiomError(std::string("extension input is not a left module (") + to_string(f->axiom) +
                             " axiom fails)");
        }
    }
    const std::size_t n = d.algebra.rank(), r = d.sub.rank(), s = d.quotient.rank();
    std::vector<std::string> names = d.sub.generator_names();
    detail::append_distinct(names, d.quotient.generator_names());
    ExtensionResult res;
    res.module = BimoduleStructure(n, names, true, false);
    StructureTable& L = res.module.left();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) L.set(i, j, k, d.sub.left().at(i, j, k));
        for (std::size_t j = 0; j < s; ++j) {
            for (std::size_t k = 0; k < r; ++k) L.set(i, r + j, k, d.gamma[i].at(j, k));
            for (std::size_t k = 0; k < s; ++k) L.set(i, r + j, r + k, d.quotient.left().at(i, j, k));
        }
    }
    res.failure = check_module_axioms(d.algebra, res.module);
    res.cocycle = is_chom_cocycle(d);
    if (res.is_module() != res.cocycle) {
        throw InconsistencyError("extension verdict disagrees with the cocycle condition");
    }
    return res;
}

/// γ1(a)(v) = γ2(a)(v) + a_λ β(v) − β(a_λ v) for all generators, exactly.
inline bool equivalent_extensions(const ConformalAlgebra& A, const BimoduleStructure& M, const BimoduleStructure& N,
                                  const std::vector<CLinearMap>& gamma1, const std::vector<CLinearMap>& gamma2,
                                  const HLinearMap& beta) {
    if (gamma1.size() != gamma2.size() || gamma1.size() != A.rank()) throw ShapeError("γ shape mismatch");
    auto diff = detail::flatten(gamma1) - detail::flatten(gamma2);
    return is_zero(diff - detail::flatten(chom_d0(A, M, N, beta)));
}

/// A β with entries of ∂-degree <= D witnessing equivalence, or nullopt if none exists in that range.
inline std::optional<HLinearMap> find_extension_witness(const ConformalAlgebra& A, const BimoduleStructure& M,
                                                        const BimoduleStructure& N,
                                                        const std::vector<CLinearMap>& gamma1,
                                                        const std::vector<CLinearMap>& gamma2, int D) {
    const std::size_t r = M.rank(), s = N.rank();
    const VarSet dvars{Var::del()};
    std::vector<HLinearMap> basis;
    std::vector<PolyVec> images;
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < r; ++k)
            for (int e = 0; e <= D; ++e) {
                HLinearMap b(s, r);
                b.at(j, k) = Poly::monomial(dvars, {e});
                images.push_back(detail::flatten(chom_d0(A, M, N, b)));
                basis.push_back(std::move(b));
            }
    auto target = detail::flatten(gamma1) - detail::flatten(gamma2);
    auto x = solve_in_span(images, target);
    if (!x) return std::nullopt;
    HLinearMap beta(s, r);
    for (std::size_t t = 0; t < basis.size(); ++t) {
        if (sgn((*x)[t]) == 0) continue;
        for (std::size_t e = 0; e < beta.entries.size(); ++e) beta.entries[e] += (*x)[t] * basis[t].entries[e];
    }
    return beta;
}

// ---------------------------------------------------------------------------
// Abelian extensions

struct AbelianExtensionDatum {
    ConformalAlgebra algebra;
    BimoduleStructure module;
    Cochain phi; // degree 2, values in the module
};

struct AbelianExtensionResult {
    ConformalAlgebra algebra;             // E = A ⊕ M
    std::optional<TripleFailure> failure; // direct associativity check
    bool cocycle = false;                 // d₂φ = 0
    bool is_associative() const { return !failure.has_value(); }
};

namespace detail {

/// Values of a 2-cochain as a structure table: λ1 becomes λ.
inline Poly two_cochain_entry(const Poly& p) {
    const VarSet src = cochain_vars(2);
    return p.embed(src).substitute({{Var::lam_n(1), Poly::variable(structure_vars(), Var::lam())},
                                    {Var::del(), Poly::variable(structure_vars(), Var::del())}},
                                   structure_vars());
}

} // namespace detail

/// (a, u)_λ(b, v) = (a_λ b, a_λ v + u_λ b + φ_λ(a, b)), with M_λ M = 0.
inline AbelianExtensionResult build_abelian_extension(const AbelianExtensionDatum& d) {
    const auto& A = d.algebra;
    const auto& M = d.module;
    check_compatible(A, M);
    if (d.phi.degree != 2 || d.phi.algebra_rank != A.rank() || d.phi.module_rank != M.rank()) {
        throw ShapeError("abelian extensions take a 2-cochain with values in the module");
    }
    if (!M.has_left() || !M.has_right()) throw ShapeError("abelian extensions need a bimodule");
    if (auto f = check_module_axioms(A, M)) {
        throw AxiomError(std::string("extension input is not a bimodule (") + to_string(f->axiom) + " axiom fails)");
    }
    const std::size_t n = A.rank(), r = M.rank();
    std::vector<std::string> names = A.generator_names();
    detail::append_distinct(names, M.generator_names());
    ConformalAlgebra E(names);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) E.set_structure(i, j, k, A.structure(i, j, k));
            const PolyVec& v = d.phi.value({i, j});
            for (std::size_t k = 0; k < r; ++k) E.set_structure(i, j, n + k, detail::two_cochain_entry(v[k]));
        }
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                E.set_structure(i, n + j, n + k, M.left().at(i, j, k));
                E.set_structure(n + j, i, n + k, M.right().at(j, i, k));
            }
    }
    AbelianExtensionResult res;
    res.failure = check_associativity(E);
    res.cocycle = apply_dn(A, M, d.phi).is_zero();
    res.algebra = std::move(E);
    if (res.is_associative() != res.cocycle) {
        throw InconsistencyError("abelian extension verdict disagrees with the cocycle condition");
    }
    return res;
}

// ---------------------------------------------------------------------------
// First-order deformations

struct DeformationDatum {
    ConformalAlgebra algebra;
    Cochain f; // degree 2, values in A
};

struct DeformationResult {
    bool first_order_associative = false;
    std::optional<TripleFailure> failure; // t¹ coefficient of the associator on the first failing triple
    bool cocycle = false;                 // d₂f = 0
};

/// Expands the t¹ coefficient of (a ∗̂ b) ∗̂ c − a ∗̂ (b ∗̂ c) for a ∗̂ b = a_λ b + t f_λ(a, b)
/// on all generator triples.
inline DeformationResult deform(const DeformationDatum& d) {
    const auto& A = d.algebra;
    const std::size_t n = A.rank();
    if (d.f.degree != 2 || d.f.algebra_rank != n || d.f.module_rank != n) {
        throw ShapeError("deformations take a 2-cochain with values in the algebra");
    }
    StructureTable F(n, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) F.set(i, j, k, detail::two_cochain_entry(d.f.value({i, j})[k]));
    const StructureTable& P = A.product();
    const VarSet& ctx = triple_vars();

    DeformationResult res;
    for (std::size_t i = 0; i < n && !res.failure; ++i)
        for (std::size_t j = 0; j < n && !res.failure; ++j)
            for (std::size_t k = 0; k < n && !res.failure; ++k) {
                auto ei = unit_vec(n, i, ctx), ej = unit_vec(n, j, ctx), ek = unit_vec(n, k, ctx);
                auto lhs = nested_left(F, P, ei, ej, ek) + nested_left(P, F, ei, ej, ek);
                auto rhs = nested_right(P, F, ei, ej, ek) + nested_right(F, P, ei, ej, ek);
                auto residual = lhs - rhs;
                if (!is_zero(residual)) res.failure = TripleFailure{i, j, k, lhs, rhs, residual};
            }
    res.first_order_associative = !res.failure;
    res.cocycle = apply_dn(A, regular_bimodule(A), d.f).is_zero();
    if (res.first_order_associative != res.cocycle) {
        throw InconsistencyError("deformation verdict disagrees with the cocycle condition");
    }
    return res;
}

/// f1 − f2 = d₁g exactly.
inline bool equivalent_deformations(const ConformalAlgebra& A, const Cochain& f1, const Cochain& f2,
                                    const Cochain& g) {
    if (g.degree != 1) throw ShapeError("deformation witnesses are 1-cochains");
    return f1 - f2 == apply_dn(A, regular_bimodule(A), g);
}

/// A g of degree <= D with f1 − f2 = d₁g, or nullopt if the truncated search finds none.
inline std::optional<Cochain> find_deformation_witness(const ConformalAlgebra& A, const Cochain& f1,
                                                       const Cochain& f2, int D) {
    const auto M = regular_bimodule(A);
    const CochainSlice slice(A.rank(), A.rank(), 1, D);
    std::vector<PolyVec> images;
    auto flat = [](const Cochain& c) {
        PolyVec out;
        for (const auto& v : c.values)
            for (const auto& p : v) out.push_back(p.embed(cochain_vars(2)));
        return out;
    };
    for (std::size_t i = 0; i < slice.dimension(); ++i) images.push_back(flat(apply_dn(A, M, slice.basis_element(i))));
    auto x = solve_in_span(images, flat(f1 - f2));
    if (!x) return std::nullopt;
    return slice.from_coordinates(*x);
}

} // namespace pseudo
