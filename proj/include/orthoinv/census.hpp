// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Class-count bounds from square classes (tau_1) and congruence classes
// (tau_2), explicit Type 1 representatives over F_p, and the Q_p / Q_2
// invariant tables for Type 1 blocks.

#ifndef ORTHOINV_CENSUS_HPP
#define ORTHOINV_CENSUS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "orthoinv/fields.hpp"
#include "orthoinv/forms.hpp"
#include "orthoinv/involutions.hpp"
#include "orthoinv/isomorphy.hpp"
#include "orthoinv/linalg.hpp"

namespace orthoinv {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// |k*/(k*)^2| - 1
inline std::uint64_t tau1(const FieldDesc& F) {
  switch (F.kind) {
    case FieldKind::closed: return 0;
    case FieldKind::real: return 1;
    case FieldKind::finite: return 1;
    case FieldKind::padic: return F.p == 2 ? 7 : 3;
    case FieldKind::rational: break;
  }
  throw unsupported_error("tau_1 is infinite over Q");
}

/// Congruence classes of invertible symmetric m x m matrices.
inline std::uint64_t tau2(std::uint64_t m, const FieldDesc& F) {
  if (m == 0) fail("domain", "tau_2 needs m >= 1");
  switch (F.kind) {
    case FieldKind::closed: return 1;
    case FieldKind::real: return m + 1;
    case FieldKind::finite: return 2;
    case FieldKind::padic: {
      std::uint64_t t = F.p == 2 ? 7 : 3, s = 0;
      for (std::uint64_t j = 0; j <= std::min(m, t); ++j) s += binomial(t, j);
      return s;
    }
    case FieldKind::rational: break;
  }
  throw unsupported_error("tau_2 is not tabulated over Q");
}

struct ClassBounds {
  std::uint64_t n = 0;
  FieldDesc field;
  std::uint64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0;
  // closed forms over R, checked against the sums
  std::optional<std::uint64_t> real_c1_closed, real_c2_closed;
};

inline ClassBounds class_bounds(std::uint64_t n, const FieldDesc& F) {
  if (n < 3) fail("domain", "class bounds need n >= 3");
  ClassBounds b;
  b.n = n;
  b.field = F;
  auto t2 = [&](std::uint64_t m) { return tau2(m, F); };
  if (n % 2) {
    for (std::uint64_t m = 1; m <= (n - 1) / 2; ++m) b.c1 += t2(n - m) * t2(m);
  } else {
    for (std::uint64_t m = 1; m + 1 <= n / 2; ++m) b.c1 += t2(n - m) * t2(m);
    std::uint64_t t = t2(n / 2);
    b.c1 += t * (t + 1) / 2;
    b.c2 = tau1(F) * (t * (t + 1) / 2);
    b.c3 = 1;
    b.c4 = tau1(F);
  }
  if (F.kind == FieldKind::real) {
    b.real_c1_closed = n % 2 ? (n * n * n + 6 * n * n - n - 6) / 12 : (n * n * n + 6 * n * n + 2 * n) / 12;
    ensure(*b.real_c1_closed == b.c1, "real closed form for C1 disagrees with the sum");
    if (n % 2 == 0) {
      b.real_c2_closed = (n * n + 6 * n + 8) / 8;
      ensure(*b.real_c2_closed == b.c2, "real closed form for C2 disagrees with the sum");
    }
  }
  return b;
}

/// Upper bounds as stated for F_q (odd q); the odd-n C1 value differs from
/// class_bounds, which yields 2n - 2.
inline ClassBounds fq_printed_bounds(std::uint64_t n, const FieldDesc& F) {
  if (F.kind != FieldKind::finite) fail("domain", "stated bounds are for finite fields");
  ClassBounds b;
  b.n = n;
  b.field = F;
  if (n % 2) {
    b.c1 = 2 * n - 6;
  } else {
    b.c1 = 2 * n - 1;
    b.c2 = 3;
    b.c3 = 1;
    b.c4 = 1;
  }
  return b;
}

// ---------------------------------------------------------------------------
// F_p Type 1 representatives

enum class FqVariant { standard, delta_twisted };

inline std::string to_string(FqVariant v) { return v == FqVariant::standard ? "standard" : "delta_twisted"; }
inline FqVariant parse_variant(const std::string& s) {
  if (s == "standard") return FqVariant::standard;
  if (s == "delta" || s == "delta_twisted") return FqVariant::delta_twisted;
  fail("parse", "variant must be standard or delta, got '" + s + "'");
}

struct FqRepresentative {
  std::string family;  // "I_{n-m,m}", "twisted", "delta_tail"
  std::size_t m = 0;
  Matrix<Residue> A;
};

struct FqRepresentatives {
  FormContext<Residue> ctx;
  std::vector<FqRepresentative> reps;
  std::optional<std::pair<Residue, Residue>> two_squares;  // a^2 + b^2 = delta
};

/// diag(I_{n-m}, -I_m)
inline Matrix<Residue> signed_identity(std::size_t n, std::size_t m, std::uint64_t p) {
  Matrix<Residue> A = Matrix<Residue>::identity(n, Residue::raw(1, p));
  for (std::size_t i = n - m; i < n; ++i) A(i, i) = Residue(-1, p);
  return A;
}

/// Emits one matrix per genuine class: m runs over 1..floor(n/2) (m = 0 gives
/// A = I). The delta variant merges its two families at m = n/2.
inline FqRepresentatives fq_type1_representatives(std::size_t n, std::uint64_t q, FqVariant variant) {
  if (n < 3) fail("domain", "representatives need n >= 3");
  if (!is_prime(q) || q == 2) throw unsupported_error("matrices need an odd prime q; use census for prime powers");
  std::uint64_t p = q;
  FieldDesc F = FieldDesc::finite(p);
  Residue one = Residue::raw(1, p);
  Residue delta = Residue::raw(least_nonsquare(p), p);
  FqRepresentatives out;
  std::vector<Residue> diag(n, one);
  if (variant == FqVariant::delta_twisted) diag[n - 1] = delta;
  out.ctx = make_context(F, diag);
  if (!out.ctx.friendly())
    fail("unsupported_context", "the form diag(I, delta) over F_" + std::to_string(p) + " is not friendly");
  if (variant == FqVariant::standard) {
    auto [a, b] = find_two_square_rep(delta);
    out.two_squares = std::make_pair(a, b);
    for (std::size_t m = 1; m <= n / 2; ++m) out.reps.push_back({"I_{n-m,m}", m, signed_identity(n, m, p)});
    for (std::size_t m = 1; m <= n / 2; ++m) {
      // columns m-1 and n-1 of X carry (a, -b) and (b, a); minus block is the first m columns
      Matrix<Residue> X = Matrix<Residue>::identity(n, one);
      X(m - 1, m - 1) = a;
      X(n - 1, m - 1) = -b;
      X(m - 1, n - 1) = b;
      X(n - 1, n - 1) = a;
      Matrix<Residue> D = Matrix<Residue>::identity(n, one);
      for (std::size_t i = 0; i < m; ++i) D(i, i) = -one;
      out.reps.push_back({"twisted", m, X * D * inverse(X)});
    }
  } else {
    for (std::size_t m = 1; m <= n / 2; ++m) out.reps.push_back({"I_{n-m,m}", m, signed_identity(n, m, p)});
    for (std::size_t m = 1; 2 * m < n; ++m) {
      // diag(-I_{n-m-1}, I_m, -1)
      Matrix<Residue> A = Matrix<Residue>::identity(n, one);
      for (std::size_t i = 0; i + m + 1 < n; ++i) A(i, i) = -one;
      A(n - 1, n - 1) = -one;
      out.reps.push_back({"delta_tail", m, A});
    }
  }
  for (auto& r : out.reps) {
    Matrix<Residue> M = out.ctx.M();
    ensure(r.A.transpose() * M * r.A == M, "representative is not orthogonal");
  }
  return out;
}

/// Number of genuine Type 1 classes for M = I (standard) or diag(I, delta).
inline std::size_t fq_type1_class_count(std::size_t n, FqVariant v) {
  return v == FqVariant::standard ? 2 * (n / 2) : n - 1;
}

/// The stated counts: n + 1 (odd n), n + 2 (even n).
inline std::size_t fq_type1_stated_count(std::size_t n) { return n % 2 ? n + 1 : n + 2; }

// ---------------------------------------------------------------------------
// Q_p tables

struct QpTableRow {
  std::vector<Rational> X1, X2;
  Rational det_class;
  int c1 = 1, c2 = 1;
  std::string realizable;  // "exists" or "excluded": diag(X1, X2) ~ I_2n over Q_p
};

struct Q2Cell {
  Rational det_class;
  int c = 1;
  std::vector<Rational> diag;
};

namespace detail {
inline std::vector<Rational> with_tail(std::size_t n, const std::vector<Rational>& tail) {
  if (tail.size() > n) fail("domain", "tail longer than the block");
  std::vector<Rational> d(n - tail.size(), Rational(1));
  d.insert(d.end(), tail.begin(), tail.end());
  return d;
}

inline std::string realizability(const std::vector<Rational>& x1, const std::vector<Rational>& x2, std::uint64_t p,
                                 HasseConvention conv) {
  std::vector<Rational> all = x1;
  all.insert(all.end(), x2.begin(), x2.end());
  std::vector<Rational> ones(all.size(), Rational(1));
  Rational prod(1);
  for (auto& x : all) prod *= x;
  bool same = square_class(prod, FieldDesc::padic(p)) == 1 && hasse_symbol(all, p, conv) == hasse_symbol(ones, p, conv);
  return same ? "exists" : "excluded";
}
}  // namespace detail

/// Blocks diag(I, tail) with tail a subset of {p, N_p, p N_p}, paired within
/// a determinant class; one row per distinct (det, c_p(X1), c_p(X2)) triple
/// with c_p(X1) >= c_p(X2). Sorted by (det class, c1, c2) descending signs.
inline std::vector<QpTableRow> qp_type1_invariant_table(std::uint64_t p, std::size_t n = 3,
                                                        HasseConvention conv = HasseConvention::inclusive) {
  if (!is_prime(p) || p == 2) fail("domain", "qp-table needs an odd prime; use q2_cells for p = 2");
  if (n < 3) fail("domain", "blocks need n >= 3 to carry three-entry tails");
  FieldDesc F = FieldDesc::padic(p);
  Rational P(to_mpz(p)), N(static_cast<long>(least_nonsquare(p)));
  std::vector<Rational> gens = {P, N, P * N};
  struct Cell {
    std::vector<Rational> d;
    Rational cls;
    int c;
  };
  std::vector<Cell> cells;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<Rational> tail;
    for (unsigned i = 0; i < 3; ++i)
      if (mask & (1u << i)) tail.push_back(gens[i]);
    auto d = detail::with_tail(n, tail);
    Rational prod(1);
    for (auto& x : d) prod *= x;
    cells.push_back({d, square_class(prod, F), hasse_symbol(d, p, conv)});
  }
  // subsets ordered by size then index, so shorter tails win ties
  std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.d.size() < b.d.size(); });
  std::map<std::tuple<Rational, int, int>, QpTableRow> rows;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i; j < cells.size(); ++j) {
      if (cells[i].cls != cells[j].cls) continue;
      const Cell* a = &cells[i];
      const Cell* b = &cells[j];
      if (a->c < b->c) std::swap(a, b);
      auto key = std::make_tuple(a->cls, -a->c, -b->c);
      if (rows.count(key)) continue;
      QpTableRow r{a->d, b->d, a->cls, a->c, b->c, detail::realizability(a->d, b->d, p, conv)};
      rows.emplace(key, r);
    }
  std::vector<QpTableRow> out;
  for (auto& [k, r] : rows) out.push_back(r);
  return out;
}

/// Hasse symbol of a Q_2 diagonal form of size n for each of the 16
/// (det class, c) cells; tails of length <= 3 over {-1, +-2, +-3, +-6}.
inline std::vector<Q2Cell> q2_cells(std::size_t n = 3, HasseConvention conv = HasseConvention::inclusive) {
  if (n < 3) fail("domain", "Q_2 cells need n >= 3");
  FieldDesc F = FieldDesc::padic(2);
  const std::vector<long> alphabet = {-1, 2, -2, 3, -3, 6, -6};
  const std::vector<long> classes = {1, -1, 2, -2, 3, -3, 6, -6};
  std::map<std::pair<long, int>, std::vector<Rational>> found;
  std::vector<std::vector<long>> tails = {{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::vector<long>> next;
    for (auto& t : tails)
      if (t.size() == len - 1)
        for (long a : alphabet) {
          auto u = t;
          u.push_back(a);
          next.push_back(u);
        }
    tails.insert(tails.end(), next.begin(), next.end());
  }
  for (auto& t : tails) {
    std::vector<Rational> tail;
    for (long a : t) tail.push_back(Rational(a));
    auto d = detail::with_tail(n, tail);
    Rational prod(1);
    for (auto& x : d) prod *= x;
    long cls = square_class(prod, F).get_num().get_si();
    int c = hasse_symbol(d, 2, conv);
    found.emplace(std::make_pair(cls, c), d);
  }
  std::vector<Q2Cell> out;
  for (long cls : classes)
    for (int c : {1, -1}) {
      auto it = found.find({cls, c});
      ensure(it != found.end(), "Q_2 cell not covered by short tails");
      out.push_back({Rational(cls), c, it->second});
    }
  return out;
}

}  // namespace orthoinv

#endif
