#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace pseudo;
using namespace pseudo::testing;

namespace {

TEST(BruteForceOracle, Expectations) {
    auto mat = brute_force_derivations(matrix_algebra(2));
    EXPECT_EQ(mat.derivations, 3u);
    EXPECT_EQ(mat.inner, 3u);
    auto dual = brute_force_derivations(truncated_polynomial_algebra(2));
    EXPECT_EQ(dual.derivations, 1u);
    EXPECT_EQ(dual.inner, 0u);
    EXPECT_EQ(brute_force_center(matrix_algebra(2)), 1u);
}

TEST(Hochschild, Examples) {
    auto mat = matrix_algebra(2);
    auto reg = regular_fd_bimodule(mat);
    EXPECT_EQ(hochschild_dim(mat, reg, 0), 1u);
    EXPECT_EQ(hochschild_dim(mat, reg, 1), 0u);
    EXPECT_EQ(hochschild_dim(mat, reg, 2), 0u);
    auto dual = truncated_polynomial_algebra(2);
    EXPECT_EQ(hochschild_dim(dual, regular_fd_bimodule(dual), 1), 1u);
    auto q = field();
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(hochschild_dim(q, regular_fd_bimodule(q), n), 0u);
}

TEST(Center, Examples) {
    EXPECT_EQ(center_dim(matrix_algebra(2)), 1u);
    EXPECT_EQ(center_dim(truncated_polynomial_algebra(2)), 2u);
    EXPECT_EQ(center_dim(split_pair()), 2u);
}

TEST(Hochschild, RejectsBadInput) {
    auto mat = matrix_algebra(2);
    EXPECT_THROW(hochschild_dim(mat, regular_fd_bimodule(mat), 4), ShapeError);
    auto bad = mat;
    bad.c(0, 0, 1) = 1;
    EXPECT_THROW(hochschild_dim(bad, regular_fd_bimodule(bad), 1), AxiomError);
}

TEST(Hochschild, BarDifferentialSquaresToZero) {
    auto A = upper_triangular2();
    auto M = regular_fd_bimodule(A);
    for (int n = 0; n <= 2; ++n) {
        QMatrix d0 = bar_differential(A, M, n), d1 = bar_differential(A, M, n + 1);
        for (std::size_t j = 0; j < d0.cols(); ++j) EXPECT_TRUE(is_zero(d1 * d0.column(j)));
    }
}

TEST(CurrentAlgebra, Examples) {
    auto c = current_algebra(field());
    EXPECT_EQ(c.structure(0, 0, 0), Poly::constant(structure_vars(), 1));
    EXPECT_FALSE(check_associativity(current_algebra(matrix_algebra(2))));
    EXPECT_TRUE(current_algebra(FDAlgebra({"z"})).product().all_zero());
}

TEST(FdFiles, Parse) {
    auto A = parse_fd_algebra("generators: one x\nproduct one one -> 1 * one\nproduct one x -> x\n"
                              "product x one -> 1 * x\nunit -> 1 * one\n");
    EXPECT_TRUE(is_associative(A));
    EXPECT_EQ(hochschild_dim(A, regular_fd_bimodule(A), 1), 1u);
    EXPECT_THROW(parse_fd_algebra("generators: a\nproduct a a -> lam * a\n"), ParseError);
    auto M = parse_fd_bimodule("generators: u\nleft one u -> 1 * u\nright u one -> 1 * u\n", A);
    EXPECT_TRUE(is_bimodule(A, M));
}

class ClassicalProperties : public ::testing::TestWithParam<int> {};

TEST_P(ClassicalProperties, FirstCohomologyMatchesBruteForce) {
    FDAlgebra A = random_associative_fd();
    auto oracle = brute_force_derivations(A);
    EXPECT_EQ(hochschild_dim(A, regular_fd_bimodule(A), 1), oracle.derivations - oracle.inner);
    EXPECT_EQ(hochschild_dim(A, regular_fd_bimodule(A), 0), brute_force_center(A));
    EXPECT_EQ(center_dim(A), brute_force_center(A));
}

INSTANTIATE_TEST_SUITE_P(Random, ClassicalProperties, ::testing::Range(0, 12));

} // namespace
