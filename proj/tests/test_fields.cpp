#include <gtest/gtest.h>

#include <random>
#include <set>

#include "orthoinv/fields.hpp"

using namespace orthoinv;

namespace {

Rational q(const char* s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

// every prime dividing 2ab, for the product formula
std::set<std::uint64_t> bad_primes(long a, long b) {
  std::set<std::uint64_t> out = {2};
  for (long v : {a, b}) {
    long w = v < 0 ? -v : v;
    for (long d = 2; d <= w; ++d)
      while (w % d == 0) out.insert(d), w /= d;
  }
  return out;
}

}  // namespace

TEST(Residue, Arithmetic) {
  Residue a(2, 3), b(-1, 3);
  EXPECT_EQ((a * a).value(), 1u);
  EXPECT_EQ(b.value(), 2u);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ(a.inverse().value(), 2u);
  EXPECT_EQ(Residue::from_rational(q("1/2"), 7).value(), 4u);
  EXPECT_THROW(Residue::from_rational(q("1/3"), 3), precondition_error);
  EXPECT_THROW(Residue(0, 5).inverse(), precondition_error);
}

TEST(Residue, MixedModuliRejected) {
  EXPECT_ANY_THROW(Residue(1, 3) + Residue(1, 5));
}

TEST(NumberTheory, LegendreAndNonsquares) {
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(3, 7), -1);
  EXPECT_EQ(legendre(0, 7), 0);
  EXPECT_EQ(least_nonsquare(3), 2u);
  EXPECT_EQ(least_nonsquare(5), 2u);
  EXPECT_EQ(least_nonsquare(7), 3u);
  EXPECT_EQ(least_nonsquare(17), 3u);
  EXPECT_TRUE(is_prime(13));
  EXPECT_FALSE(is_prime(9));
}

TEST(NumberTheory, EulerCriterionMatchesLegendre) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint64_t a = 1; a < p; ++a) {
      int euler = Residue::raw(a, p).pow((p - 1) / 2).value() == 1 ? 1 : -1;
      EXPECT_EQ(legendre(to_mpz(a), p), euler) << a << " mod " << p;
    }
}

TEST(SquareClass, Rationals) {
  auto Q = FieldDesc::rationals();
  EXPECT_EQ(square_class(q("12"), Q), q("3"));
  EXPECT_EQ(square_class(q("-8"), Q), q("-2"));
  EXPECT_EQ(square_class(q("3/4"), Q), q("3"));
  EXPECT_EQ(square_class(q("2/3"), Q), q("6"));
  EXPECT_EQ(square_class(q("9/4"), Q), q("1"));
  EXPECT_THROW(square_class(q("0"), Q), precondition_error);
}

TEST(SquareClass, RealsAndClosed) {
  EXPECT_EQ(square_class(q("-2/7"), FieldDesc::reals()), q("-1"));
  EXPECT_EQ(square_class(q("5"), FieldDesc::reals()), q("1"));
  EXPECT_EQ(square_class(q("-5"), FieldDesc::closed()), q("1"));
}

TEST(SquareClass, Padic) {
  auto Q5 = FieldDesc::padic(5), Q2 = FieldDesc::padic(2), Q3 = FieldDesc::padic(3);
  EXPECT_EQ(square_class(q("20"), Q5), q("5"));
  EXPECT_EQ(square_class(q("2"), Q5), q("2"));
  EXPECT_EQ(square_class(q("-1"), Q5), q("1"));  // -1 = 2^2 mod 5
  EXPECT_EQ(square_class(q("-1"), Q3), q("2"));
  EXPECT_EQ(square_class(q("17"), Q2), q("1"));
  EXPECT_EQ(square_class(q("7"), Q2), q("-1"));
  EXPECT_EQ(square_class(q("12"), Q2), q("3"));
  EXPECT_EQ(square_class(q("-10"), Q2), q("6"));  // -10 = 2 * (-5), -5 = 3 mod 8
  // eight classes over Q_2, four over Q_p
  std::set<Rational> c2, c3;
  for (long v = 1; v < 200; ++v) {
    c2.insert(square_class(Rational(v), Q2));
    c2.insert(square_class(Rational(-v), Q2));
    c3.insert(square_class(Rational(v), Q3));
    c3.insert(square_class(Rational(-v), Q3));
  }
  EXPECT_EQ(c2.size(), 8u);
  EXPECT_EQ(c3.size(), 4u);
}

TEST(SquareClass, FiniteField) {
  auto F7 = FieldDesc::finite(7);
  EXPECT_EQ(square_class(Residue(2, 7), F7).value(), 1u);
  EXPECT_EQ(square_class(Residue(5, 7), F7).value(), 3u);
  EXPECT_TRUE(is_square(Residue(4, 7), F7));
  EXPECT_FALSE(is_square(Residue(6, 7), F7));
  EXPECT_THROW(square_class(Residue(1, 5), F7), precondition_error);
}

TEST(ExactSqrt, Values) {
  EXPECT_EQ(*exact_sqrt(q("9/4")), q("3/2"));
  EXPECT_FALSE(exact_sqrt(q("2")).has_value());
  EXPECT_FALSE(exact_sqrt(q("-4")).has_value());
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint64_t a = 1; a < p; ++a) {
      auto r = exact_sqrt(Residue::raw(a, p));
      EXPECT_EQ(r.has_value(), legendre(to_mpz(a), p) == 1);
      if (r) {
        EXPECT_EQ((*r * *r).value(), a);
      }
    }
}

TEST(ExactSqrt, TwoSquaresForNonsquare) {
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    Residue d = Residue::raw(least_nonsquare(p), p);
    auto [a, b] = find_two_square_rep(d);
    EXPECT_EQ(a * a + b * b, d);
  }
}

TEST(Quad, Arithmetic) {
  using E = Quad<Rational>;
  E x(q("1"), q("1"), q("3")), y(q("1"), q("-1"), q("3"));
  EXPECT_EQ(x * y, E(q("-2"), q("0"), q("3")));
  EXPECT_EQ(x * x.inverse(), E(q("1"), q("0"), q("3")));
  EXPECT_EQ(x.norm(), q("-2"));
  EXPECT_EQ(x.conj(), y);
  E r(q("0"), q("1"), q("2"));
  EXPECT_EQ(r * r, E(q("2"), q("0"), q("2")));
}

TEST(Quad, ZeroDivisorWhenAlphaSquare) {
  using E = Quad<Rational>;
  // with alpha = 4, 2 +- sqrt(alpha) has norm 0
  EXPECT_THROW(E(q("2"), q("1"), q("4")).inverse(), precondition_error);
  EXPECT_THROW(E(q("2"), q("-1"), q("4")).inverse(), precondition_error);
  EXPECT_NO_THROW(E(q("3"), q("1"), q("4")).inverse());
}

TEST(FieldDesc, Parse) {
  EXPECT_EQ(FieldDesc::parse("Fp:7"), FieldDesc::finite(7));
  EXPECT_EQ(FieldDesc::parse("Qp:5"), FieldDesc::padic(5));
  EXPECT_EQ(FieldDesc::parse("Q"), FieldDesc::rationals());
  EXPECT_EQ(FieldDesc::parse("R"), FieldDesc::reals());
  EXPECT_EQ(FieldDesc::parse("closed"), FieldDesc::closed());
  auto F9 = FieldDesc::parse("Fq:9");
  EXPECT_EQ(F9.p, 3u);
  EXPECT_EQ(F9.q, 9u);
  EXPECT_FALSE(F9.arithmetic());
  EXPECT_EQ(F9.name(), "Fq:9");
  EXPECT_THROW(FieldDesc::parse("Fp:9"), precondition_error);
  EXPECT_THROW(FieldDesc::parse("Fq:12"), precondition_error);
  EXPECT_THROW(FieldDesc::parse("C"), precondition_error);
  EXPECT_THROW(FieldDesc::parse("Fp:2"), precondition_error);
}

TEST(Hilbert, KnownValues) {
  EXPECT_EQ(hilbert_symbol(q("-1"), q("-1"), 2), -1);
  EXPECT_EQ(hilbert_symbol(q("-1"), q("-1"), 3), 1);
  EXPECT_EQ(hilbert_symbol(q("2"), q("5"), 5), -1);
  EXPECT_EQ(hilbert_symbol(q("5"), q("5"), 5), 1);
  EXPECT_EQ(hilbert_symbol(q("3"), q("3"), 3), -1);
  EXPECT_EQ(hilbert_symbol(q("2"), q("3"), 3), -1);
  EXPECT_EQ(hilbert_symbol(q("2"), q("2"), 2), 1);
  EXPECT_EQ(hilbert_symbol(q("2"), q("3"), 2), -1);
  EXPECT_EQ(hilbert_symbol(q("-1"), q("3"), 2), -1);
  EXPECT_EQ(hilbert_symbol(q("-1"), q("5"), 2), 1);
}

// Symmetry, bimultiplicativity, (a, -a) = 1, (a, 1 - a) = 1 and the product
// formula together pin the symbol down.
TEST(Hilbert, StructuralIdentities) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-30, 30);
  auto pick = [&] {
    long v = 0;
    while (v == 0) v = d(rng);
    return v;
  };
  for (int it = 0; it < 400; ++it) {
    long a = pick(), b = pick(), c = pick();
    std::set<std::uint64_t> ps = bad_primes(a * c, b);
    ps.insert(3), ps.insert(5), ps.insert(7);
    for (auto p : ps) {
      Rational A(a), B(b), C(c);
      EXPECT_EQ(hilbert_symbol(A, B, p), hilbert_symbol(B, A, p));
      EXPECT_EQ(hilbert_symbol(A * C, B, p), hilbert_symbol(A, B, p) * hilbert_symbol(C, B, p));
      EXPECT_EQ(hilbert_symbol(A, -A, p), 1);
      if (a != 1) {
        EXPECT_EQ(hilbert_symbol(A, Rational(1) - A, p), 1);
      }
      EXPECT_EQ(hilbert_symbol(A * Rational(4), B * Rational(9), p), hilbert_symbol(A, B, p));
    }
    int prod = (a < 0 && b < 0) ? -1 : 1;
    for (auto p : bad_primes(a, b)) prod *= hilbert_symbol(Rational(a), Rational(b), p);
    EXPECT_EQ(prod, 1) << "(" << a << ", " << b << ")";
  }
}

TEST(Hasse, Conventions) {
  std::vector<Rational> d = {q("1"), q("3"), q("3")};
  // inclusive adds (d_i, d_i) = (d_i, -1) factors
  EXPECT_EQ(hasse_symbol(d, 3, HasseConvention::strict), hilbert_symbol(q("3"), q("3"), 3));
  EXPECT_EQ(hasse_symbol(d, 3, HasseConvention::inclusive),
            hasse_symbol(d, 3, HasseConvention::strict) * hilbert_symbol(q("3"), q("-1"), 3) *
                hilbert_symbol(q("3"), q("-1"), 3));
  EXPECT_EQ(hasse_symbol(d, 2, HasseConvention::jones),
            -hasse_symbol(d, 2, HasseConvention::inclusive));
  EXPECT_EQ(hasse_symbol({}, 5), 1);
}
