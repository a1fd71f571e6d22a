#include <gtest/gtest.h>

#include <random>

#include "orthoinv/isomorphy.hpp"
#include "orthoinv/oracle.hpp"
#include "orthoinv/selfcheck.hpp"

using namespace orthoinv;

// Conjugating by a random orthogonal element keeps the type and the class.
TEST(Properties, TypeStableUnderConjugation) {
  std::mt19937_64 rng(99);
  for (std::uint64_t p : {3u, 5u}) {
    auto ctx = standard_context(FieldDesc::finite(p), 4, Residue(1, p));
    auto S = oracle::space_for(ctx);
    auto G = oracle::generate_orthogonal_group(S);
    Residue delta = Residue::raw(least_nonsquare(p), p);
    for (int t = 1; t <= 4; ++t) {
      auto cand = oracle::enumerate_type_candidates(G, t);
      ASSERT_FALSE(cand.empty());
      for (int it = 0; it < 40; ++it) {
        auto c = cand[rng() % cand.size()];
        auto g = oracle::random_element(G, rng);
        auto d = S.mul(S.mul(S.orth_inverse(g), c), g);
        Residue al = (t == 2 || t == 4) ? delta : Residue::raw(1, p);
        auto a = normalize_inner(al, S.to_matrix(c), ctx);
        auto b = normalize_inner(al, S.to_matrix(d), ctx);
        EXPECT_EQ(a.type, t);
        EXPECT_EQ(b.type, t);
        EXPECT_TRUE(isomorphic(a, b).isomorphic);
      }
    }
  }
}

// Hasse invariant of P^T D P after re-diagonalization equals that of D.
TEST(Properties, HasseCongruenceInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> e(-6, 6);
  for (int it = 0; it < 200; ++it) {
    std::vector<Rational> d;
    for (int i = 0; i < 3; ++i) {
      long v = 0;
      while (!v) v = e(rng);
      d.emplace_back(v);
    }
    auto P = selfcheck::random_invertible(3, rng);
    auto S = P.transpose() * Matrix<Rational>::diagonal(d) * P;
    auto D2 = diagonalize_congruence(S).second;
    std::vector<Rational> d2 = {D2(0, 0), D2(1, 1), D2(2, 2)};
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(hasse_symbol(d, p), hasse_symbol(d2, p));
    EXPECT_TRUE(diag_congruent(d, d2, FieldDesc::rationals()).congruent);
  }
}

// The built-in suites used by the acceptance binary hold on their own.
TEST(Properties, SelfcheckPropertySuite) {
  auto checks = selfcheck::property_checks(20261014);
  for (auto& c : checks)
    if (!c.informational) {
      EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
    }
}

TEST(Properties, WorkedSuiteHasNoRegressions) {
  auto rep = selfcheck::run_worked_example_suite();
  for (auto& e : rep.entries) {
    EXPECT_NE(e.status, "regression") << e.check.id;
    EXPECT_NE(e.status, "stale_manifest") << e.check.id;
  }
  EXPECT_TRUE(rep.ok());
}
