#include <gtest/gtest.h>

#include <set>

#include "orthoinv/census.hpp"
#include "orthoinv/isomorphy.hpp"

using namespace orthoinv;

TEST(Tau, Tables) {
  EXPECT_EQ(tau1(FieldDesc::reals()), 1u);
  EXPECT_EQ(tau1(FieldDesc::closed()), 0u);
  EXPECT_EQ(tau1(FieldDesc::finite(7)), 1u);
  EXPECT_EQ(tau1(FieldDesc::padic(5)), 3u);
  EXPECT_EQ(tau1(FieldDesc::padic(2)), 7u);
  EXPECT_THROW(tau1(FieldDesc::rationals()), unsupported_error);
  EXPECT_EQ(tau2(4, FieldDesc::reals()), 5u);
  EXPECT_EQ(tau2(3, FieldDesc::finite(3)), 2u);
  EXPECT_EQ(tau2(1, FieldDesc::padic(3)), 4u);
  EXPECT_EQ(tau2(2, FieldDesc::padic(3)), 7u);
  for (std::uint64_t m = 3; m < 12; ++m) EXPECT_EQ(tau2(m, FieldDesc::padic(3)), 8u);
  for (std::uint64_t m = 7; m < 12; ++m) EXPECT_EQ(tau2(m, FieldDesc::padic(2)), 128u);
  EXPECT_EQ(tau2(6, FieldDesc::padic(2)), 127u);
}

TEST(Bounds, RealClosedFormsMatchSums) {
  for (std::uint64_t n = 3; n <= 50; ++n) {
    auto b = class_bounds(n, FieldDesc::reals());
    ASSERT_TRUE(b.real_c1_closed.has_value());
    EXPECT_EQ(*b.real_c1_closed, b.c1);
    if (n % 2 == 0) {
      EXPECT_EQ(*b.real_c2_closed, b.c2);
      EXPECT_EQ(b.c3, 1u);
    } else {
      EXPECT_EQ(b.c2, 0u);
    }
  }
  EXPECT_EQ(class_bounds(5, FieldDesc::reals()).c1, 22u);
  EXPECT_EQ(class_bounds(4, FieldDesc::reals()).c2, 6u);
}

TEST(Bounds, FiniteFieldSumVersusStated) {
  auto F = FieldDesc::finite(5);
  for (std::uint64_t n = 3; n <= 11; n += 2) {
    EXPECT_EQ(class_bounds(n, F).c1, 2 * n - 2);
    EXPECT_EQ(fq_printed_bounds(n, F).c1, 2 * n - 6);
  }
  for (std::uint64_t n = 4; n <= 12; n += 2) {
    EXPECT_EQ(class_bounds(n, F).c1, 2 * n - 1);
    EXPECT_EQ(fq_printed_bounds(n, F).c1, 2 * n - 1);
    EXPECT_EQ(class_bounds(n, F).c2, 3u);
  }
  EXPECT_THROW(fq_printed_bounds(4, FieldDesc::reals()), precondition_error);
}

TEST(Representatives, CountAndDistinct) {
  for (std::uint64_t q : {3u, 5u, 7u})
    for (std::size_t n = 3; n <= 6; ++n) {
      auto r = fq_type1_representatives(n, q, FqVariant::standard);
      EXPECT_EQ(r.reps.size(), fq_type1_class_count(n, FqVariant::standard));
      EXPECT_EQ(r.reps.size(), 2 * (n / 2));
      std::vector<NormalizedInvolution<Residue>> inv;
      for (auto& x : r.reps) inv.push_back(normalize_inner(x.A, r.ctx));
      for (auto& i : inv) EXPECT_EQ(i.type, 1);
      for (std::size_t i = 0; i < inv.size(); ++i)
        for (std::size_t j = i + 1; j < inv.size(); ++j)
          EXPECT_FALSE(isomorphic(inv[i], inv[j]).isomorphic) << "q=" << q << " n=" << n << " " << i << "," << j;
    }
}

TEST(Representatives, StatedCount) {
  EXPECT_EQ(fq_type1_stated_count(3), 4u);
  EXPECT_EQ(fq_type1_stated_count(4), 6u);
  EXPECT_EQ(fq_type1_stated_count(5), 6u);
}

TEST(Representatives, DeltaVariant) {
  EXPECT_THROW(fq_type1_representatives(4, 3, FqVariant::delta_twisted), precondition_error);
  auto r = fq_type1_representatives(5, 5, FqVariant::delta_twisted);
  EXPECT_EQ(r.reps.size(), 4u);
  EXPECT_THROW(fq_type1_representatives(4, 9, FqVariant::standard), unsupported_error);
  EXPECT_EQ(parse_variant("delta"), FqVariant::delta_twisted);
}

TEST(QpTable, RowCountsAndRecomputation) {
  EXPECT_EQ(qp_type1_invariant_table(5).size(), 12u);
  EXPECT_EQ(qp_type1_invariant_table(3).size(), 8u);
  for (std::uint64_t p : {3u, 5u, 7u, 13u}) {
    auto F = FieldDesc::padic(p);
    for (auto& r : qp_type1_invariant_table(p)) {
      Rational d1(1), d2(1);
      for (auto& x : r.X1) d1 *= x;
      for (auto& x : r.X2) d2 *= x;
      EXPECT_EQ(square_class(d1, F), r.det_class);
      EXPECT_EQ(square_class(d2, F), r.det_class);
      EXPECT_EQ(hasse_symbol(r.X1, p), r.c1);
      EXPECT_EQ(hasse_symbol(r.X2, p), r.c2);
      EXPECT_TRUE(r.realizable == "exists" || r.realizable == "excluded");
    }
  }
  EXPECT_THROW(qp_type1_invariant_table(2), precondition_error);
}

TEST(QpTable, Q2CoversAllCells) {
  auto cells = q2_cells();
  EXPECT_EQ(cells.size(), 16u);
  std::set<std::pair<Rational, int>> seen;
  for (auto& c : cells) {
    EXPECT_EQ(square_class([&] {
                Rational d(1);
                for (auto& x : c.diag) d *= x;
                return d;
              }(), FieldDesc::padic(2)),
              c.det_class);
    EXPECT_EQ(hasse_symbol(c.diag, 2), c.c);
    seen.insert({c.det_class, c.c});
  }
  EXPECT_EQ(seen.size(), 16u);
}
