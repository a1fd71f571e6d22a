#include <gtest/gtest.h>

#include "orthoinv/isomorphy.hpp"
#include "orthoinv/worked_examples.hpp"

using namespace orthoinv;

namespace {

std::vector<Rational> qv(std::vector<long> d) { return {d.begin(), d.end()}; }

Matrix<Rational> qdiag(std::vector<long> d) { return Matrix<Rational>::diagonal(qv(d)); }

}  // namespace

TEST(Congruence, OverQ) {
  auto Q = FieldDesc::rationals();
  EXPECT_TRUE(diag_congruent(qv({1, 1}), qv({2, 2}), Q).congruent);   // 2 = 1 + 1
  EXPECT_FALSE(diag_congruent(qv({1, 1}), qv({1, 2}), Q).congruent);  // determinants
  EXPECT_FALSE(diag_congruent(qv({1, 1}), qv({3, 3}), Q).congruent);  // 3 is not a sum of two squares
  EXPECT_TRUE(diag_congruent(qv({1, 1}), qv({5, 5}), Q).congruent);
  EXPECT_FALSE(diag_congruent(qv({1, -1}), qv({1, 1}), Q).congruent);  // signature
  EXPECT_TRUE(diag_congruent(qv({1, -1}), qv({3, -3}), Q).congruent);  // both hyperbolic
}

TEST(Congruence, OverRealsAndFinite) {
  EXPECT_TRUE(diag_congruent(qv({2, -3, 5}), qv({1, 1, -7}), FieldDesc::reals()).congruent);
  EXPECT_FALSE(diag_congruent(qv({2, 3, 5}), qv({1, 1, -7}), FieldDesc::reals()).congruent);
  auto F = FieldDesc::finite(5);
  std::vector<Residue> a = {Residue(1, 5), Residue(2, 5)}, b = {Residue(3, 5), Residue(1, 5)};
  std::vector<Residue> c = {Residue(1, 5), Residue(1, 5)};
  EXPECT_TRUE(diag_congruent(a, b, F).congruent);  // 2 and 3 are both nonsquares
  EXPECT_FALSE(diag_congruent(a, c, F).congruent);
}

TEST(Congruence, TransformOverFiniteField) {
  auto F = FieldDesc::finite(7);
  std::vector<Residue> a = {Residue(1, 7), Residue(1, 7), Residue(3, 7)}, b = {Residue(3, 7), Residue(5, 7), Residue(5, 7)};
  auto R = congruence_transform(a, b, F);
  ASSERT_TRUE(R.has_value());
  EXPECT_EQ(R->transpose() * Matrix<Residue>::diagonal(a) * *R, Matrix<Residue>::diagonal(b));
}

TEST(Isomorphic, F3PairOverO) {
  worked::F3Type2Pair ex;
  auto a = normalize_inner(ex.alpha, ex.A, ex.ctx), b = normalize_inner(ex.alpha, ex.B, ex.ctx);
  auto v = isomorphic(a, b, Group::O);
  EXPECT_TRUE(v.isomorphic);
  EXPECT_EQ(v.route, Route::type2_reduction);
}

TEST(Isomorphic, SOAboveType1Refused) {
  worked::F3Type2Pair ex;
  auto a = normalize_inner(ex.alpha, ex.A, ex.ctx), b = normalize_inner(ex.alpha, ex.B, ex.ctx);
  EXPECT_THROW(isomorphic(a, b, Group::SO), unsupported_error);
}

TEST(Isomorphic, TypeMismatch) {
  worked::RealType3 r;
  auto ctx = r.ctx;
  auto t3 = normalize_inner(r.A, ctx);
  auto t1 = normalize_inner(qdiag({1, -1, 1, 1}), ctx);
  auto v = isomorphic(t1, t3);
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.route, Route::type_mismatch);
}

TEST(Isomorphic, Type1OverReals) {
  auto ctx = standard_context(FieldDesc::reals(), 4, Rational(1));
  auto a = normalize_inner(qdiag({1, -1, -1, -1}), ctx), b = normalize_inner(qdiag({-1, -1, 1, -1}), ctx);
  auto c = normalize_inner(qdiag({1, 1, -1, -1}), ctx);
  for (Group g : {Group::O, Group::SO}) {
    auto v = isomorphic(a, b, g);
    EXPECT_TRUE(v.isomorphic);
    ASSERT_TRUE(v.witness.has_value());
    auto& Q = *v.witness;
    EXPECT_EQ(Q.transpose() * Q, Matrix<Rational>::identity(4, Rational(1)));
    EXPECT_EQ(inverse(Q) * a.B * Q, b.B.scaled(Rational(v.witness_sign)));
    if (g == Group::SO) {
      EXPECT_EQ(det(Q), Rational(1));
    }
    EXPECT_FALSE(isomorphic(a, c, g).isomorphic);
  }
}

// Over Q with M = diag(1,1,1,3): the -1 eigenspaces <1> and <3> are not congruent
TEST(Isomorphic, Type1OverQUsesHasse) {
  auto ctx = make_context(FieldDesc::rationals(), qv({1, 1, 1, 3}));
  auto a = normalize_inner(qdiag({-1, 1, 1, 1}), ctx), b = normalize_inner(qdiag({1, 1, 1, -1}), ctx);
  EXPECT_FALSE(isomorphic(a, b).isomorphic);
  auto c = normalize_inner(qdiag({1, -1, 1, 1}), ctx);
  EXPECT_TRUE(isomorphic(a, c).isomorphic);
}

TEST(Isomorphic, Type3AlwaysUnderO) {
  worked::RealType3 r;
  auto a = normalize_inner(r.A, r.ctx);
  auto P = Matrix<Rational>::from_rows({{Rational(0), Rational(0), Rational(1), Rational(0)},
                                        {Rational(1), Rational(0), Rational(0), Rational(0)},
                                        {Rational(0), Rational(0), Rational(0), Rational(1)},
                                        {Rational(0), Rational(1), Rational(0), Rational(0)}});
  auto b = normalize_inner(inverse(P) * r.A * P, r.ctx);
  auto v = isomorphic(a, b);
  EXPECT_TRUE(v.isomorphic);
}

TEST(Isomorphic, ContextMismatch) {
  auto c1 = standard_context(FieldDesc::rationals(), 2, Rational(1));
  auto c2 = make_context(FieldDesc::rationals(), qv({1, 2}));
  auto a = normalize_inner(qdiag({1, -1}), c1), b = normalize_inner(qdiag({1, -1}), c2);
  EXPECT_THROW(isomorphic(a, b), precondition_error);
}
