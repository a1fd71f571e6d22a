#include <gtest/gtest.h>

#include <random>

#include "orthoinv/forms.hpp"
#include "orthoinv/worked_examples.hpp"

using namespace orthoinv;

TEST(Friendly, SumOfSquaresOverQ) {
  auto c = make_context(FieldDesc::rationals(), std::vector<Rational>{1, 1, 1});
  EXPECT_TRUE(c.friendly());
  auto s = friendly_solution(Rational(1));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->first * s->first + s->second * s->second, Rational(1));
  EXPECT_NE(s->second, Rational(0));
}

TEST(Friendly, WitnessesSubstitute) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-40, 40);
  for (int it = 0; it < 200; ++it) {
    long a = d(rng), b = d(rng);
    if (!a || !b) continue;
    Rational r(a, b);
    r.canonicalize();
    auto s = friendly_solution(r);
    if (!s) continue;
    EXPECT_EQ(s->first * s->first + r * s->second * s->second, Rational(1)) << r;
    EXPECT_FALSE(is_zero(s->second));
  }
  for (std::uint64_t p : {3u, 5u, 7u, 11u})
    for (std::uint64_t a = 1; a < p; ++a) {
      Residue r = Residue::raw(a, p);
      auto s = friendly_solution(r);
      if (!s) continue;
      EXPECT_EQ(s->first * s->first + r * s->second * s->second, one_like(r));
      EXPECT_FALSE(is_zero(s->second));
    }
}

// x^2 + 2y^2 = 1 over F_3 forces y = 0, so diag(1, 2) is not friendly
TEST(Friendly, UnfriendlyOverF3) {
  auto c = make_context(FieldDesc::finite(3), std::vector<Residue>{Residue(1, 3), Residue(2, 3)});
  EXPECT_FALSE(c.friendly());
  ASSERT_TRUE(c.friendliness.failing_pair.has_value());
  auto c5 = make_context(FieldDesc::finite(5), std::vector<Residue>{Residue(1, 5), Residue(2, 5)});
  EXPECT_TRUE(c5.friendly());
}

TEST(Context, FromGram) {
  Matrix<Rational> G = Matrix<Rational>::from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  auto c = make_context_from_gram(FieldDesc::rationals(), G);
  ASSERT_TRUE(c.transform.has_value());
  EXPECT_EQ(c.transform->transpose() * G * *c.transform, c.M());
  EXPECT_EQ(c.n, 2u);
  EXPECT_THROW(make_context(FieldDesc::rationals(), std::vector<Rational>{1, 0}), precondition_error);
  EXPECT_THROW(make_context(FieldDesc::rationals(), std::vector<Rational>{}), precondition_error);
}

TEST(Membership, Categories) {
  worked::F3Type2Pair ex;
  EXPECT_EQ(classify_membership(ex.Q, ex.ctx).category, Membership::O_minus_SO);
  auto I = Matrix<Residue>::identity(4, Residue(1, 3));
  EXPECT_EQ(classify_membership(I, ex.ctx).category, Membership::SO);
  auto flip = I;
  flip(0, 0) = Residue(2, 3);  // reflection in e_1
  EXPECT_EQ(classify_membership(flip, ex.ctx).category, Membership::O_minus_SO);
  EXPECT_EQ(classify_membership(I.scaled(Residue(2, 3)), ex.ctx).category, Membership::SO);  // det (-1)^4
  auto R = standard_context(FieldDesc::rationals(), 2, Rational(1));
  auto S = Matrix<Rational>::from_rows({{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}});
  auto v = classify_membership(S, R);
  EXPECT_EQ(v.category, Membership::GO_proper);
  EXPECT_EQ(*v.factor, Rational(2));
  auto N = Matrix<Rational>::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  EXPECT_EQ(classify_membership(N, R).category, Membership::none);
}

TEST(Beta, OrthogonalBasis) {
  Matrix<Rational> M = Matrix<Rational>::diagonal({Rational(1), Rational(2), Rational(3)});
  std::vector<Vec<Rational>> vs = {{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(1)}};
  auto b = beta_orthogonal_basis(vs, M);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(beta(b[0], M, b[1]), Rational(0));
  EXPECT_NE(beta(b[0], M, b[0]), Rational(0));
}
