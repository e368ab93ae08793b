#include <gtest/gtest.h>

#include "support.hpp"

using namespace pseudo;
using namespace pseudo::testing;

namespace {

QMatrix M(std::vector<std::vector<long>> rows) {
    std::vector<QVector> r;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (auto& row : rows) {
        QVector v;
        for (long x : row) v.push_back(Rational(x));
        r.push_back(v);
    }
    return QMatrix::from_rows(r, cols);
}

QVector V(std::vector<long> xs) {
    QVector v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

TEST(Rref, Examples) {
    auto r = rref(M({{2, 4}, {1, 2}}));
    EXPECT_EQ(r.rank(), 1u);
    EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
    EXPECT_EQ(r.matrix.row(0), V({1, 2}));
    auto id = rref(QMatrix::identity(3));
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_TRUE(rref(QMatrix(2, 3)).pivots.empty());
}

TEST(Kernel, Examples) {
    EXPECT_EQ(kernel_basis(M({{1, 1}})), SubspaceBasis::span(2, {V({1, -1})}));
    EXPECT_EQ(kernel_basis(QMatrix::identity(3)).dimension(), 0u);
    EXPECT_EQ(kernel_basis(QMatrix(2, 3)).dimension(), 3u);
}

TEST(Image, Examples) {
    EXPECT_EQ(image_basis(M({{1, 2}, {2, 4}})), SubspaceBasis::span(2, {V({1, 2})}));
    EXPECT_EQ(image_basis(QMatrix::identity(3)), SubspaceBasis::full(3));
    EXPECT_EQ(image_basis(QMatrix(3, 2)).dimension(), 0u);
}

TEST(Intersect, Examples) {
    auto e1 = V({1, 0, 0}), e2 = V({0, 1, 0}), e3 = V({0, 0, 1});
    EXPECT_EQ(intersect(SubspaceBasis::span(3, {e1, e2}), SubspaceBasis::span(3, {e2, e3})),
              SubspaceBasis::span(3, {e2}));
    auto V3 = SubspaceBasis::span(3, {e1, V({1, 1, 1})});
    EXPECT_EQ(intersect(V3, V3), V3);
    EXPECT_EQ(intersect(SubspaceBasis::span(3, {e1}), SubspaceBasis::span(3, {e2})).dimension(), 0u);
}

TEST(Quotient, Examples) {
    auto big = SubspaceBasis::full(5);
    auto small = SubspaceBasis::span(5, {V({1, 0, 0, 0, 0}), V({0, 1, 1, 0, 0})});
    EXPECT_EQ(quotient_dimension(big, small), 3u);
    EXPECT_EQ(quotient_dimension(small, small), 0u);
    EXPECT_EQ(quotient_dimension(small, SubspaceBasis(5)), 2u);
    EXPECT_THROW(quotient_dimension(small, SubspaceBasis::span(5, {V({0, 0, 0, 0, 1})})), InconsistencyError);
}

TEST(Solve, ConsistentAndInconsistent) {
    auto m = M({{1, 2}, {2, 4}});
    auto x = solve(m, V({3, 6}));
    ASSERT_TRUE(x);
    EXPECT_EQ(m * *x, V({3, 6}));
    EXPECT_FALSE(solve(m, V({1, 0})));
}

class LinearAlgebraProperties : public ::testing::TestWithParam<int> {};

TEST_P(LinearAlgebraProperties, RankNullity) {
    std::size_t rows = uniform(1, 7), cols = uniform(1, 7);
    std::size_t r = uniform(0, static_cast<int>(std::min(rows, cols)));
    QMatrix m = random_rank_matrix(rows, cols, r);
    auto K = kernel_basis(m);
    EXPECT_EQ(rank(m) + K.dimension(), cols);
    EXPECT_EQ(rank(m), rank(m.transposed()));
    for (const auto& v : K.vectors()) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(image_basis(m).dimension(), rank(m));
}

TEST_P(LinearAlgebraProperties, ImageCertificates) {
    QMatrix m = random_qmatrix(uniform(1, 6), uniform(1, 6));
    auto img = image_with_certificates(m);
    EXPECT_EQ(img.size(), rank(m));
    for (const auto& c : img) EXPECT_EQ(m * c.preimage, c.vector);
    EXPECT_EQ(SubspaceBasis::span(m.rows(), [&] {
                  std::vector<QVector> vs;
                  for (const auto& c : img) vs.push_back(c.vector);
                  return vs;
              }()),
              image_basis(m));
}

TEST_P(LinearAlgebraProperties, IntersectionLaws) {
    const std::size_t n = uniform(2, 6);
    auto A = image_basis(random_qmatrix(n, uniform(0, 4)));
    auto B = image_basis(random_qmatrix(n, uniform(0, 4)));
    auto AB = intersect(A, B);
    EXPECT_EQ(AB, intersect(B, A));
    EXPECT_EQ(intersect(A, A), A);
    EXPECT_TRUE(A.contains(AB));
    EXPECT_TRUE(B.contains(AB));
    // dim(A + B) + dim(A ∩ B) = dim A + dim B
    std::vector<QVector> all = A.vectors();
    all.insert(all.end(), B.vectors().begin(), B.vectors().end());
    EXPECT_EQ(SubspaceBasis::span(n, all).dimension() + AB.dimension(), A.dimension() + B.dimension());
}

TEST_P(LinearAlgebraProperties, SolveFindsPreimagesOfImageVectors) {
    QMatrix m = random_qmatrix(uniform(1, 6), uniform(1, 6));
    QVector x = random_qvector(m.cols());
    auto b = m * x;
    auto y = solve(m, b);
    ASSERT_TRUE(y);
    EXPECT_EQ(m * *y, b);
}

INSTANTIATE_TEST_SUITE_P(Random, LinearAlgebraProperties, ::testing::Range(0, 40));

} // namespace
