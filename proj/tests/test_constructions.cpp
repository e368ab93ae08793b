#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudo;
using namespace pseudo::testing;

namespace {

ExtensionDatum regular_datum(std::vector<CLinearMap> gamma) {
    auto A = cur1();
    return ExtensionDatum{A, regular_bimodule(A), regular_bimodule(A), std::move(gamma)};
}

CLinearMap rank_one_map(const std::string& p) {
    CLinearMap f(1, 1);
    f.at(0, 0) = parse_poly(p, structure_vars());
    return f;
}

/// (u, v) -> (u + β(v), v) on E = M ⊕ N, coefficients over {λ, ∂}.
PolyVec shift_by(const HLinearMap& beta, const PolyVec& x, std::size_t r) {
    PolyVec y = x;
    const std::size_t s = x.size() - r;
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t k = 0; k < r; ++k) y[k] += x[r + j] * beta.at(j, k).embed(structure_vars());
    return y;
}

/// Oracle for γ = d0 β: the shift map intertwines E_γ with the split extension generator by generator.
bool shift_intertwines(const ConformalAlgebra& A, const BimoduleStructure& E_gamma, const BimoduleStructure& E_split,
                       const HLinearMap& beta, std::size_t r) {
    const VarSet& ctx = structure_vars();
    const Poly lam = Poly::variable(ctx, Var::lam());
    const std::size_t total = E_gamma.rank();
    for (std::size_t i = 0; i < A.rank(); ++i)
        for (std::size_t g = 0; g < total; ++g) {
            auto ei = unit_vec(A.rank(), i, ctx), x = unit_vec(total, g, ctx);
            auto lhs = shift_by(beta, act(E_gamma.left(), ei, x, lam, ctx), r);
            auto rhs = act(E_split.left(), ei, shift_by(beta, x, r), lam, ctx);
            if (lhs != rhs) return false;
        }
    return true;
}

TEST(ModuleExtension, SplitExtensionAlwaysPasses) {
    auto A = cur_mat2();
    auto M = regular_bimodule(A);
    auto r = build_extension({A, M, M, zero_gamma(4, 4, 4)});
    EXPECT_TRUE(r.is_module());
    EXPECT_TRUE(r.cocycle);
    EXPECT_EQ(r.module.rank(), 8u);
}

TEST(ModuleExtension, ConstantGammaFails) {
    for (const char* c : {"1", "-3/2"}) {
        auto r = build_extension(regular_datum({rank_one_map(c)}));
        EXPECT_FALSE(r.is_module());
        EXPECT_FALSE(r.cocycle);
        ASSERT_TRUE(r.failure);
        EXPECT_FALSE(is_zero(r.failure->triple.residual));
    }
}

TEST(ModuleExtension, LambdaGammaIsACocycle) {
    auto r = build_extension(regular_datum({rank_one_map("lam")}));
    EXPECT_TRUE(r.is_module());
    EXPECT_TRUE(r.cocycle);
}

TEST(ModuleExtension, RejectsInputsThatAreNotModules) {
    auto A = cur1();
    EXPECT_THROW(build_extension({A, rank_one_module("lam", ""), regular_bimodule(A), {CLinearMap(1, 1)}}), AxiomError);
    EXPECT_THROW(build_extension({A, regular_bimodule(A), regular_bimodule(A), {}}), ShapeError);
}

TEST(ModuleExtension, Equivalence) {
    auto A = cur1();
    auto M = regular_bimodule(A);
    auto g = std::vector<CLinearMap>{rank_one_map("lam")};
    EXPECT_TRUE(equivalent_extensions(A, M, M, g, g, HLinearMap(1, 1)));
    HLinearMap beta(1, 1);
    beta.at(0, 0) = parse_poly("2*del^2 - 1", VarSet{Var::del()});
    auto cob = chom_d0(A, M, M, beta);
    EXPECT_TRUE(equivalent_extensions(A, M, M, cob, zero_gamma(1, 1, 1), beta));
    auto w = find_extension_witness(A, M, M, cob, zero_gamma(1, 1, 1), 2);
    ASSERT_TRUE(w);
    EXPECT_TRUE(equivalent_extensions(A, M, M, cob, zero_gamma(1, 1, 1), *w));
    // γ = λ is d0 of β = ∂ + c: a_λ β(v) − β(a_λ v) = (λ + ∂) − ∂.
    EXPECT_FALSE(find_extension_witness(A, M, M, g, zero_gamma(1, 1, 1), 0));
    auto w1 = find_extension_witness(A, M, M, g, zero_gamma(1, 1, 1), 1);
    ASSERT_TRUE(w1);
    EXPECT_EQ(w1->at(0, 0).coefficient({1}), 1);
    // A non-cocycle is never a coboundary.
    auto c = std::vector<CLinearMap>{rank_one_map("1")};
    for (int D = 0; D <= 3; ++D) EXPECT_FALSE(find_extension_witness(A, M, M, c, zero_gamma(1, 1, 1), D));
}

class ExtensionProperties : public ::testing::TestWithParam<int> {};

TEST_P(ExtensionProperties, CoboundaryGammaMatchesShiftOracle) {
    ConformalAlgebra A = GetParam() % 2 ? cur1() : current_algebra(random_associative_fd());
    BimoduleStructure M = regular_bimodule(A);
    BimoduleStructure N = GetParam() % 3 == 0 && A.rank() == 1 ? rank_one_module("1", "") : M;
    auto beta = random_h_map(N.rank(), M.rank(), 2);
    auto gamma = chom_d0(A, M, N, beta);
    auto ext = build_extension({A, M, N, gamma});
    ASSERT_TRUE(ext.is_module());
    auto split = build_extension({A, M, N, zero_gamma(A.rank(), M.rank(), N.rank())});
    EXPECT_TRUE(shift_intertwines(A, ext.module, split.module, beta, M.rank()));
    EXPECT_TRUE(equivalent_extensions(A, M, N, gamma, zero_gamma(A.rank(), M.rank(), N.rank()), beta));
}

TEST(AbelianExtension, Examples) {
    auto A = cur1();
    auto M = regular_bimodule(A);
    auto zero = build_abelian_extension({A, M, Cochain::zero(2, 1, 1)});
    EXPECT_TRUE(zero.is_associative());
    auto phi = Cochain::zero(2, 1, 1);
    phi.values[0][0] = Poly::constant(cochain_vars(2), 1);
    auto r = build_abelian_extension({A, M, phi});
    EXPECT_TRUE(r.is_associative());
    EXPECT_TRUE(r.cocycle);
    EXPECT_EQ(r.algebra.rank(), 2u);
    phi.values[0][0] = Poly::variable(cochain_vars(2), Var::lam_n(1));
    auto bad = build_abelian_extension({A, M, phi});
    EXPECT_FALSE(bad.is_associative());
    EXPECT_FALSE(bad.cocycle);
}

TEST_P(ExtensionProperties, AbelianExtensionByCoboundaryIsAssociative) {
    auto A = GetParam() % 2 ? cur1() : current_algebra(random_associative_fd());
    auto M = regular_bimodule(A);
    auto psi = random_cochain(A.rank(), M.rank(), 1, 2, 0.4);
    auto r = build_abelian_extension({A, M, apply_dn(A, M, psi)});
    EXPECT_TRUE(r.is_associative());
    EXPECT_TRUE(r.cocycle);
}

TEST(Deformation, Examples) {
    auto A = cur1();
    EXPECT_TRUE(deform({A, Cochain::zero(2, 1, 1)}).first_order_associative);
    auto f = Cochain::zero(2, 1, 1);
    f.values[0][0] = Poly::constant(cochain_vars(2), 1);
    EXPECT_TRUE(deform({A, f}).first_order_associative);
    f.values[0][0] = Poly::variable(cochain_vars(2), Var::lam_n(1));
    auto r = deform({A, f});
    EXPECT_FALSE(r.first_order_associative);
    EXPECT_FALSE(r.cocycle);
    ASSERT_TRUE(r.failure);
    EXPECT_FALSE(is_zero(r.failure->residual));
}

TEST(Deformation, Equivalence) {
    auto A = cur1();
    auto M = regular_bimodule(A);
    auto f = Cochain::zero(2, 1, 1);
    f.values[0][0] = Poly::constant(cochain_vars(2), 1);
    EXPECT_TRUE(equivalent_deformations(A, f, f, Cochain::zero(1, 1, 1)));
    // f = e is d1 of g(e) = e.
    auto g = Cochain::zero(1, 1, 1);
    g.values[0][0] = Poly::constant(cochain_vars(1), 1);
    EXPECT_TRUE(equivalent_deformations(A, f, Cochain::zero(2, 1, 1), g));
    // The kernel of d2 modulo the image of d1 at D = 2 is nonzero; its complement has no witness.
    auto H = cohomology_dimensions(A, M, 2, {2, 1});
    const CochainSlice s(1, 1, 2, 2);
    for (const auto& z : H.Z.vectors()) {
        if (H.B.contains(z)) continue;
        EXPECT_FALSE(find_deformation_witness(A, s.from_coordinates(z), Cochain::zero(2, 1, 1), 2));
    }
}

TEST_P(ExtensionProperties, CoboundaryDeformationsAreTrivial) {
    auto A = GetParam() % 2 ? cur1() : cur_mat2();
    auto M = regular_bimodule(A);
    auto g = random_cochain(A.rank(), A.rank(), 1, 2, 0.3);
    auto f = apply_dn(A, M, g);
    EXPECT_TRUE(deform({A, f}).first_order_associative);
    EXPECT_TRUE(equivalent_deformations(A, f, Cochain::zero(2, A.rank(), A.rank()), g));
    auto w = find_deformation_witness(A, f, Cochain::zero(2, A.rank(), A.rank()), 2);
    ASSERT_TRUE(w);
    EXPECT_TRUE(equivalent_deformations(A, f, Cochain::zero(2, A.rank(), A.rank()), *w));
}

INSTANTIATE_TEST_SUITE_P(Random, ExtensionProperties, ::testing::Range(0, 12));

} // namespace
