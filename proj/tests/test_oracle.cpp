#include <gtest/gtest.h>

#include <random>

#include "orthoinv/isomorphy.hpp"
#include "orthoinv/oracle.hpp"
#include "orthoinv/worked_examples.hpp"

using namespace orthoinv;
using namespace orthoinv::oracle;

namespace {

Space standard(std::size_t n, std::uint64_t p) { return Space(n, p, std::vector<std::uint8_t>(n, 1)); }

}  // namespace

// |O(2, F_3)| = 8 (dihedral), |O(3, F_3)| = 48, |O(4, F_3)| = 1152 for sum of squares
TEST(Oracle, GroupOrders) {
  EXPECT_EQ(generate_orthogonal_group(standard(2, 3)).order(), 8u);
  EXPECT_EQ(generate_orthogonal_group(standard(3, 3)).order(), 48u);
  EXPECT_EQ(generate_orthogonal_group(standard(4, 3)).order(), 1152u);
  EXPECT_EQ(generate_orthogonal_group(standard(2, 5)).order(), 8u);
  EXPECT_EQ(generate_orthogonal_group(standard(3, 5)).order(), 240u);
}

TEST(Oracle, DirectCountAndEstimateAgree) {
  for (std::uint64_t p : {3u, 5u, 7u})
    for (std::size_t n = 1; n <= 3; ++n) {
      auto S = standard(n, p);
      auto G = generate_orthogonal_group(S);
      EXPECT_EQ(G.order(), direct_order_count(S)) << n << " " << p;
      EXPECT_EQ(G.order(), estimate_order(n, p, form_det(S))) << n << " " << p;
    }
  Space tw(4, 3, {1, 1, 1, 2});
  EXPECT_EQ(generate_orthogonal_group(tw).order(), direct_order_count(tw));
}

TEST(Oracle, HalfOfGroupIsSpecial) {
  auto G = generate_orthogonal_group(standard(4, 3));
  std::size_t so = 0;
  for (auto d : G.det) so += d == 1;
  EXPECT_EQ(2 * so, G.order());
}

TEST(Oracle, SizeCap) {
  try {
    generate_orthogonal_group(standard(4, 3), 100);
    FAIL() << "no size_cap error";
  } catch (const precondition_error& e) {
    EXPECT_EQ(e.code(), "size_cap");
  }
}

TEST(Oracle, DomainLimits) {
  EXPECT_THROW(standard(5, 3), precondition_error);
  EXPECT_THROW(standard(3, 2), precondition_error);
  EXPECT_THROW(standard(3, 17), precondition_error);
  EXPECT_THROW(Space(2, 3, {1, 0}), precondition_error);
}

TEST(Oracle, EncodeRoundTrip) {
  auto S = standard(3, 5);
  std::mt19937_64 rng(5);
  auto G = generate_orthogonal_group(S);
  for (int i = 0; i < 50; ++i) {
    Small a = random_element(G, rng);
    EXPECT_TRUE(S.equal(S.decode(S.encode(a)), a));
    EXPECT_TRUE(S.equal(S.gram(a), S.form()));
    EXPECT_TRUE(S.equal(S.mul(a, S.orth_inverse(a)), S.identity()));
    EXPECT_TRUE(S.equal(S.from_matrix(S.to_matrix(a)), a));
  }
}

TEST(Oracle, Type1ClassCounts) {
  // 2 floor(n/2) classes for n = 3, 4 over F_3
  EXPECT_EQ(count_classes_bruteforce(generate_orthogonal_group(standard(3, 3)), 1).classes, 2u);
  EXPECT_EQ(count_classes_bruteforce(generate_orthogonal_group(standard(4, 3)), 1).classes, 4u);
  EXPECT_EQ(count_classes_bruteforce(generate_orthogonal_group(standard(3, 5)), 1).classes, 2u);
}

TEST(Oracle, Type234SingleClassAtN4) {
  auto G = generate_orthogonal_group(standard(4, 3));
  for (int t : {2, 3, 4}) {
    auto c = count_classes_bruteforce(G, t);
    EXPECT_EQ(c.classes, 1u) << "type " << t;
    EXPECT_GT(c.candidates, 0u);
  }
  EXPECT_EQ(count_classes_bruteforce(G, 2).candidates, 72u);
  EXPECT_EQ(count_classes_bruteforce(G, 3).candidates, 12u);
  EXPECT_EQ(count_classes_bruteforce(G, 4).candidates, 24u);
}

TEST(Oracle, F3PairSplitsUnderSO) {
  worked::F3Type2Pair ex;
  auto S = space_for(ex.ctx);
  auto G = generate_orthogonal_group(S);
  auto A = S.from_matrix(ex.A), B = S.from_matrix(ex.B);
  auto o = conjugacy_isomorphic(G, A, B, false);
  ASSERT_TRUE(o.has_value());
  EXPECT_FALSE(conjugacy_isomorphic(G, A, B, true).has_value());
  EXPECT_TRUE(S.equal(S.from_matrix(ex.Q), S.from_matrix(ex.Q)));
  EXPECT_TRUE(G.contains(S.from_matrix(ex.Q)));
}

// oracle versus library on every pair of Type 1 candidates for n = 3, p = 3
TEST(Oracle, AgreesWithLibraryType1) {
  auto ctx = standard_context(FieldDesc::finite(3), 3, Residue(1, 3));
  auto S = space_for(ctx);
  auto G = generate_orthogonal_group(S);
  auto cand = enumerate_type_candidates(G, 1);
  std::vector<NormalizedInvolution<Residue>> inv;
  for (auto& c : cand) inv.push_back(normalize_inner(S.to_matrix(c), ctx));
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = 0; j < cand.size(); ++j) {
      bool lib = isomorphic(inv[i], inv[j]).isomorphic;
      bool brute = conjugacy_isomorphic(G, cand[i], cand[j], false).has_value();
      ASSERT_EQ(lib, brute) << i << " " << j;
    }
}
