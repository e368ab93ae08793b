#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudo;
using namespace pseudo::testing;

namespace {

Poly P(const std::string& s, const VarSet& v = structure_vars()) { return parse_poly(s, v); }
PolyVec PV(std::initializer_list<std::string> xs, const VarSet& v = structure_vars()) {
    PolyVec out;
    for (const auto& s : xs) out.push_back(P(s, v));
    return out;
}

TEST(LambdaProduct, CurrentAlgebraOfTheField) {
    auto A = cur1();
    auto e = CElement::generator(1, 0);
    EXPECT_EQ(lambda_product(A, e, e), PV({"1"}));
    EXPECT_EQ(lambda_product(A, e.derivative(), e), PV({"-lam"}));
    EXPECT_EQ(lambda_product(A, e, e.derivative()), PV({"lam + del"}));
}

TEST(Associativity, CurrentMatrixAlgebraPasses) { EXPECT_FALSE(check_associativity(cur_mat2()).has_value()); }

TEST(Associativity, DerivativeProductFails) {
    auto f = check_associativity(one_generator("del"));
    ASSERT_TRUE(f);
    const auto& t = triple_vars();
    EXPECT_EQ(f->lhs, PV({"-(lam + mu)*del"}, t));
    EXPECT_EQ(f->rhs, PV({"(lam + del)*del"}, t));
    EXPECT_EQ(f->residual, f->lhs - f->rhs);
}

TEST(Associativity, LambdaProductFails) {
    auto f = check_associativity(one_generator("lam"));
    ASSERT_TRUE(f);
    const auto& t = triple_vars();
    EXPECT_EQ(f->lhs, PV({"lam*(lam + mu)"}, t));
    EXPECT_EQ(f->rhs, PV({"mu*lam"}, t));
}

TEST(Associativity, ZeroAlgebraPasses) { EXPECT_FALSE(check_associativity(zero_algebra(3)).has_value()); }

TEST(Associativity, MatrixAlgebraBruteForce) {
    // Every (e_ij)_λ((e_kl)_μ e_pq) agrees with its left-nested form on all 64 triples.
    auto A = cur_mat2();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(is_zero(associator(A, i, j, k)));
}

TEST(AlgebraFile, Parses) {
    auto A = parse_algebra("generators: e\nproduct e e -> 1 * e\n");
    ASSERT_EQ(A.rank(), 1u);
    EXPECT_EQ(A.structure(0, 0, 0), P("1"));
    EXPECT_THROW(parse_algebra("generators: e\nproduct e f -> 1 * e\n"), ParseError);
    auto Z = parse_algebra("generators: a b\n");
    EXPECT_TRUE(Z.product().all_zero());
    EXPECT_FALSE(check_associativity(Z));
}

class ConformalProperties : public ::testing::TestWithParam<int> {};

TEST_P(ConformalProperties, CurrentAlgebraAssociativeIffUnderlyingIs) {
    FDAlgebra F = random_associative_fd();
    ASSERT_TRUE(is_associative(F));
    EXPECT_FALSE(check_associativity(current_algebra(F)).has_value());
    // A random perturbation of one structure constant.
    const std::size_t m = F.dimension();
    F.c(uniform(0, m - 1), uniform(0, m - 1), uniform(0, m - 1)) += Rational(uniform(1, 3));
    EXPECT_EQ(is_associative(F), !check_associativity(current_algebra(F)).has_value());
}

TEST_P(ConformalProperties, Sesquilinearity) {
    auto A = GetParam() % 2 ? twisted_cur1(2) : cur_mat2();
    const std::size_t n = A.rank();
    auto a = random_element(n, 2), b = random_element(n, 2);
    const auto& v = structure_vars();
    const Poly lam = Poly::variable(v, Var::lam()), del = Poly::variable(v, Var::del());
    auto ab = lambda_product(A, a, b);
    EXPECT_EQ(lambda_product(A, a.derivative(), b), (-lam) * ab);
    EXPECT_EQ(lambda_product(A, a, b.derivative()), (lam + del) * ab);
}

TEST_P(ConformalProperties, Bilinearity) {
    auto A = cur_mat2();
    auto a = random_element(4, 2), b = random_element(4, 2), c = random_element(4, 2);
    CElement bc;
    for (std::size_t i = 0; i < 4; ++i) bc.coords.push_back(b.coords[i] + c.coords[i]);
    EXPECT_EQ(lambda_product(A, a, bc), lambda_product(A, a, b) + lambda_product(A, a, c));
    EXPECT_EQ(lambda_product(A, bc, a), lambda_product(A, b, a) + lambda_product(A, c, a));
}

TEST_P(ConformalProperties, TwistedCurrentAlgebrasAreAssociative) {
    EXPECT_FALSE(check_associativity(twisted_cur1(3)).has_value());
}

INSTANTIATE_TEST_SUITE_P(Random, ConformalProperties, ::testing::Range(0, 20));

} // namespace
