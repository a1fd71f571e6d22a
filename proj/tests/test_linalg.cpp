#include <gtest/gtest.h>

#include <random>

#include "orthoinv/forms.hpp"
#include "orthoinv/linalg.hpp"

using namespace orthoinv;

namespace {

Matrix<Rational> qm(const std::vector<std::vector<long>>& r) {
  std::vector<std::vector<Rational>> out;
  for (auto& row : r) {
    std::vector<Rational> v;
    for (long x : row) v.emplace_back(x);
    out.push_back(v);
  }
  return Matrix<Rational>::from_rows(out);
}

Matrix<Residue> fm(std::uint64_t p, const std::vector<std::vector<long>>& r) {
  std::vector<std::vector<Residue>> out;
  for (auto& row : r) {
    std::vector<Residue> v;
    for (long x : row) v.emplace_back(x, p);
    out.push_back(v);
  }
  return Matrix<Residue>::from_rows(out);
}

Matrix<Rational> random_q(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-4, 4);
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(d(rng), 1 + (d(rng) + 4) % 3);
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST(Matrix, Determinant) {
  EXPECT_EQ(det(qm({{2, 1}, {1, 3}})), Rational(5));
  EXPECT_EQ(det(qm({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})), Rational(-3));
  EXPECT_EQ(det(qm({{0, 1}, {1, 0}})), Rational(-1));
  EXPECT_EQ(det(qm({{1, 2}, {2, 4}})), Rational(0));
  EXPECT_EQ(det(fm(3, {{1, 1}, {1, 2}})).value(), 1u);
  EXPECT_EQ(det(fm(5, {{2, 3}, {1, 4}})).value(), 0u);
}

TEST(Matrix, InverseAndSingular) {
  auto m = qm({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  auto mi = inverse(m);
  EXPECT_EQ(m * mi, Matrix<Rational>::identity(3, Rational(1)));
  EXPECT_EQ(mi(0, 0), Rational(-2, 3));
  EXPECT_THROW(inverse(qm({{1, 2}, {2, 4}})), precondition_error);
  auto f = fm(7, {{3, 1}, {2, 5}});
  EXPECT_EQ(f * inverse(f), Matrix<Residue>::identity(2, Residue(1, 7)));
}

TEST(Matrix, RankAndBlocks) {
  EXPECT_EQ(rank(qm({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
  EXPECT_EQ(rank(fm(3, {{1, 1}, {2, 2}})), 1u);
  auto a = qm({{1, 2}, {3, 4}}), z = qm({{0, 0}, {0, 0}});
  auto b = blocks2(a, z, z, a);
  EXPECT_EQ(b, block_diag(a, a));
  EXPECT_EQ(sub_block(b, 2, 2, 2, 2), a);
  EXPECT_EQ(b.rows(), 4u);
}

TEST(Matrix, RandomProductRules) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    auto a = random_q(3, rng), b = random_q(3, rng);
    EXPECT_EQ(det(a * b), det(a) * det(b));
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
    if (!is_zero(det(a))) {
      EXPECT_EQ(inverse(a) * a, Matrix<Rational>::identity(3, Rational(1)));
    }
  }
}

TEST(Congruence, Diagonalize) {
  for (auto S : {qm({{0, 1}, {1, 0}}), qm({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}), qm({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})}) {
    auto [Q, D] = diagonalize_congruence(S);
    EXPECT_TRUE(D.is_diagonal());
    EXPECT_EQ(Q.transpose() * S * Q, D);
    EXPECT_FALSE(is_zero(det(Q)));
  }
  auto S3 = fm(3, {{0, 1}, {1, 0}});
  auto [Q, D] = diagonalize_congruence(S3);
  EXPECT_EQ(Q.transpose() * S3 * Q, D);
  EXPECT_THROW(diagonalize_congruence(qm({{0, 1}, {2, 0}})), precondition_error);
}

TEST(Eigen, OrderTwo) {
  auto A = qm({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  auto e = eig_basis_order2(A);
  EXPECT_EQ(e.minus_basis.size(), 1u);
  EXPECT_EQ(e.plus_basis.size(), 2u);
  EXPECT_THROW(eig_basis_order2(qm({{0, 1}, {-1, 0}})), precondition_error);
}
