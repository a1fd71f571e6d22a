// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Isomorphy of two inner involutions over O(n,k,beta): field-specific
// congruence invariants of the diagonal Gram blocks, plus witnesses Q with
// Q^-1 A Q = +-B where the congruence can be built explicitly.

#ifndef ORTHOINV_ISOMORPHY_HPP
#define ORTHOINV_ISOMORPHY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "orthoinv/fields.hpp"
#include "orthoinv/forms.hpp"
#include "orthoinv/involutions.hpp"
#include "orthoinv/linalg.hpp"

namespace orthoinv {

struct CongruenceInvariant {
  std::size_t dim = 0;
  std::string det_class;
  std::optional<std::pair<std::size_t, std::size_t>> signature;  // (pos, neg)
  std::map<std::uint64_t, int> hasse;

  bool operator==(const CongruenceInvariant& o) const {
    return dim == o.dim && det_class == o.det_class && signature == o.signature && hasse == o.hasse;
  }
  bool operator!=(const CongruenceInvariant& o) const { return !(*this == o); }
};

inline std::string to_string(const CongruenceInvariant& c) {
  std::string s = "dim=" + std::to_string(c.dim) + " det=" + c.det_class;
  if (c.signature) s += " sig=(" + std::to_string(c.signature->first) + "," + std::to_string(c.signature->second) + ")";
  for (auto& [p, h] : c.hasse) s += " c_" + std::to_string(p) + "=" + std::to_string(h);
  return s;
}

namespace detail {

/// Sign of a + b sqrt(alpha), alpha > 0.
inline int real_sign(const Quad<Rational>& x) {
  int sa = sgn(x.a()), sb = sgn(x.b());
  if (sb == 0 || x.alpha() == 0) return sa;
  if (sgn(x.alpha()) < 0) throw unsupported_error("real sign of a non-real quadratic element");
  if (sa == 0 || sa == sb) return sb;
  Rational aa = x.a() * x.a(), bb = x.alpha() * x.b() * x.b();
  return aa > bb ? sa : sb;
}

inline void add_primes(const Rational& x, std::set<std::uint64_t>& out) {
  for (auto* z : {&x.get_num(), &x.get_den()}) {
    if (*z == 0 || *z == 1 || *z == -1) continue;
    for (auto& [q, e] : factorize(*z)) {
      (void)e;
      if (!q.fits_ulong_p()) throw unsupported_error("prime too large for the Hasse table: " + q.get_str());
      out.insert(q.get_ui());
    }
  }
}

inline std::pair<std::size_t, std::size_t> real_signature(const std::vector<int>& signs) {
  std::size_t pos = 0, neg = 0;
  for (int s : signs) (s > 0 ? pos : neg)++;
  return {pos, neg};
}

}  // namespace detail

/// Invariants deciding congruence of a diagonal form over F. Over Q the Hasse
/// symbols are taken at `primes`; over Qp at p only.
inline CongruenceInvariant congruence_invariant(const std::vector<Rational>& d, const FieldDesc& F,
                                                const std::set<std::uint64_t>& primes = {}) {
  CongruenceInvariant c;
  c.dim = d.size();
  for (auto& x : d)
    if (is_zero(x)) fail("domain", "zero diagonal entry");
  Rational prod(1);
  for (auto& x : d) prod *= x;
  switch (F.kind) {
    case FieldKind::closed:
      c.det_class = "1";
      break;
    case FieldKind::real: {
      std::vector<int> s;
      for (auto& x : d) s.push_back(sgn(x));
      c.signature = detail::real_signature(s);
      c.det_class = c.signature->second % 2 ? "-1" : "1";
      break;
    }
    case FieldKind::finite:
      fail("domain", "rational data over a finite field");
    case FieldKind::padic:
      c.det_class = d.empty() ? "1" : to_string(square_class(prod, F));
      c.hasse[F.p] = hasse_symbol(d, F.p);
      break;
    case FieldKind::rational: {
      std::vector<int> s;
      for (auto& x : d) s.push_back(sgn(x));
      c.signature = detail::real_signature(s);
      c.det_class = d.empty() ? "1" : to_string(square_class(prod, F));
      for (auto p : primes) c.hasse[p] = hasse_symbol(d, p);
      break;
    }
  }
  return c;
}

inline CongruenceInvariant congruence_invariant(const std::vector<Residue>& d, const FieldDesc& F) {
  CongruenceInvariant c;
  c.dim = d.size();
  if (d.empty()) {
    c.det_class = "1";
    return c;
  }
  Residue prod = one_like(d[0]);
  for (auto& x : d) prod = prod * x;
  c.det_class = to_string(square_class(prod, F));
  return c;
}

/// Quadratic-extension entries. over_extension: classify in k[sqrt(alpha)]
/// itself (F_p^2 via the norm) rather than in F.
template <class K>
CongruenceInvariant congruence_invariant(const std::vector<Quad<K>>& d, const FieldDesc& F,
                                         bool over_extension = false,
                                         const std::set<std::uint64_t>& primes = {}) {
  bool base = std::all_of(d.begin(), d.end(), [](const Quad<K>& x) { return x.in_base(); });
  if (over_extension) {
    if constexpr (std::is_same_v<K, Residue>) {
      CongruenceInvariant c;
      c.dim = d.size();
      if (d.empty()) {
        c.det_class = "1";
        return c;
      }
      Quad<K> prod = one_like(d[0]);
      for (auto& x : d) prod = prod * x;
      K nm = prod.norm();
      c.det_class = is_square(nm, F) ? "1" : "nonsquare";
      return c;
    } else {
      if (F.kind == FieldKind::real || F.kind == FieldKind::closed) {
        CongruenceInvariant c;
        c.dim = d.size();
        c.det_class = "1";
        return c;
      }
      throw unsupported_error("congruence over a quadratic extension of " + F.name());
    }
  }
  if (base) {
    std::vector<K> b;
    for (auto& x : d) b.push_back(x.a());
    if constexpr (std::is_same_v<K, Rational>)
      return congruence_invariant(b, F, primes);
    else
      return congruence_invariant(b, F);
  }
  if constexpr (std::is_same_v<K, Rational>) {
    CongruenceInvariant c;
    c.dim = d.size();
    if (F.kind == FieldKind::closed) {
      c.det_class = "1";
      return c;
    }
    if (F.kind == FieldKind::real) {
      std::vector<int> s;
      for (auto& x : d) s.push_back(detail::real_sign(x));
      c.signature = detail::real_signature(s);
      c.det_class = c.signature->second % 2 ? "-1" : "1";
      return c;
    }
  }
  throw unsupported_error("congruence of entries outside the base field over " + F.name());
}

template <class T>
struct CongruenceVerdict {
  bool congruent = false;
  CongruenceInvariant first, second;
};

namespace detail {
template <class T>
void collect_primes(const std::vector<T>& d, std::set<std::uint64_t>& out) {
  for (auto& x : d) {
    if constexpr (std::is_same_v<T, Rational>)
      add_primes(x, out);
    else if constexpr (std::is_same_v<T, Quad<Rational>>)
      add_primes(x.a(), out);
  }
}
}  // namespace detail

/// Over Q: Hasse-Minkowski, with c_p at 2 and every prime in the entries.
template <class T>
CongruenceVerdict<T> diag_congruent(const std::vector<T>& d1, const std::vector<T>& d2, const FieldDesc& F,
                                    bool over_extension = false) {
  if (d1.size() != d2.size()) fail("domain", "diagonal lists of different length");
  for (auto* d : {&d1, &d2})
    for (auto& x : *d)
      if (is_zero(x)) fail("domain", "zero diagonal entry");
  std::set<std::uint64_t> primes;
  if (F.kind == FieldKind::rational) {
    primes.insert(2);
    detail::collect_primes(d1, primes);
    detail::collect_primes(d2, primes);
  }
  CongruenceVerdict<T> v;
  if constexpr (std::is_same_v<T, Rational>) {
    v.first = congruence_invariant(d1, F, primes);
    v.second = congruence_invariant(d2, F, primes);
  } else if constexpr (std::is_same_v<T, Residue>) {
    v.first = congruence_invariant(d1, F);
    v.second = congruence_invariant(d2, F);
  } else {
    v.first = congruence_invariant(d1, F, over_extension, primes);
    v.second = congruence_invariant(d2, F, over_extension, primes);
  }
  v.congruent = v.first == v.second;
  return v;
}

// ---------------------------------------------------------------------------
// constructive diagonal congruence over F_p and, with exact roots, over R

namespace detail {

/// T with T^T diag(d) T = canonical diagonal: ones, then the nonsquare
/// representative (at most once over F_p; -1's over R).
template <class K>
std::optional<std::pair<Matrix<K>, std::vector<K>>> canonical_transform(const std::vector<K>& d, const FieldDesc& F) {
  std::size_t m = d.size();
  K one = one_like(d.at(0)), z = zero_like(d.at(0));
  K c;
  if (F.kind == FieldKind::finite) {
    if constexpr (std::is_same_v<K, Residue>)
      c = Residue::raw(least_nonsquare(F.p), F.p);
    else
      return std::nullopt;
  } else if (F.kind == FieldKind::real) {
    c = -one;
  } else {
    return std::nullopt;
  }
  Matrix<K> T = Matrix<K>::identity(m, one);
  std::vector<K> reps(m);
  for (std::size_t i = 0; i < m; ++i) {
    K r = is_square(d[i], F) ? one : c;
    auto s = exact_sqrt(K(d[i] / r));
    if (!s) return std::nullopt;
    T(i, i) = inverse(*s);
    reps[i] = r;
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m; ++i)
    if (reps[i] == one) order.push_back(i);
  for (std::size_t i = 0; i < m; ++i)
    if (reps[i] != one) order.push_back(i);
  Matrix<K> P(m, m, z);
  std::vector<K> canon(m);
  for (std::size_t j = 0; j < m; ++j) {
    P(order[j], j) = one;
    canon[j] = reps[order[j]];
  }
  T = T * P;
  if (F.kind == FieldKind::finite) {
    if constexpr (std::is_same_v<K, Residue>) {
      auto [a, b] = find_two_square_rep(c);
      K ic = inverse(c);
      std::size_t first = 0;
      while (first < m && canon[first] == one) ++first;
      // pair (c, c) -> (1, 1) from the front of the c-run; an odd c stays last
      for (std::size_t j = first; j + 1 < m; j += 2) {
        Matrix<K> R0 = Matrix<K>::identity(m, one);
        R0(j, j) = a * ic;
        R0(j, j + 1) = -(b * ic);
        R0(j + 1, j) = b * ic;
        R0(j + 1, j + 1) = a * ic;
        T = T * R0;
        canon[j] = canon[j + 1] = one;
      }
    }
  }
  ensure(T.transpose() * Matrix<K>::diagonal(d) * T == Matrix<K>::diagonal(canon), "canonical congruence");
  return std::make_pair(T, canon);
}

}  // namespace detail

/// R with R^T diag(d1) R = diag(d2).
template <class K>
std::optional<Matrix<K>> congruence_transform(const std::vector<K>& d1, const std::vector<K>& d2, const FieldDesc& F) {
  auto t1 = detail::canonical_transform(d1, F), t2 = detail::canonical_transform(d2, F);
  if (!t1 || !t2 || t1->second != t2->second) return std::nullopt;
  return t1->first * inverse(t2->first);
}


// ---------------------------------------------------------------------------

enum class Route { reflexive, type1_blocks, type1_swap, type2_reduction, type3_always, type4_alpha_class, type_mismatch };
enum class Group { O, SO };

inline std::string to_string(Route r) {
  switch (r) {
    case Route::reflexive: return "reflexive";
    case Route::type1_blocks: return "type1_blocks";
    case Route::type1_swap: return "type1_swap";
    case Route::type2_reduction: return "type2_reduction";
    case Route::type3_always: return "type3_always";
    case Route::type4_alpha_class: return "type4_alpha_class";
    case Route::type_mismatch: return "type_mismatch";
  }
  return "?";
}
inline std::string to_string(Group g) { return g == Group::O ? "O" : "SO"; }
inline Group parse_group(const std::string& s) {
  if (s == "O") return Group::O;
  if (s == "SO") return Group::SO;
  fail("parse", "group must be O or SO, got '" + s + "'");
}

struct Certificate {
  std::string label;
  CongruenceInvariant first, second;
};

template <class K>
struct IsomorphyVerdict {
  bool isomorphic = false;
  Route route = Route::type_mismatch;
  Group group = Group::O;
  std::vector<Certificate> certificates;
  std::optional<Matrix<K>> witness;
  int witness_sign = 1;  // Q^-1 A Q = witness_sign * B
  std::string note;
};

namespace detail {

template <class K>
Matrix<K> base_of(const Matrix<Quad<K>>& m) {
  return base_part(m);
}

/// Q = X R Y^-1 for Type 1 data, returned when it checks out.
template <class K>
std::optional<std::pair<Matrix<K>, int>> type1_witness(const NormalizedInvolution<K>& a, const Type1Data<K>& dx,
                                                       const NormalizedInvolution<K>& b, Type1Data<K> dy, bool swap,
                                                       Group g) {
  if (a.has_root() || b.has_root()) return std::nullopt;
  const FieldDesc& F = a.ctx.field;
  if (F.kind != FieldKind::finite && F.kind != FieldKind::real) return std::nullopt;
  std::vector<K> x1, x2, y1, y2;
  for (auto& e : dx.X1) x1.push_back(e.a());
  for (auto& e : dx.X2) x2.push_back(e.a());
  for (auto& e : dy.X1) y1.push_back(e.a());
  for (auto& e : dy.X2) y2.push_back(e.a());
  std::size_t s = dx.s, t = dx.t, n = s + t;
  K z = zero_like(a.alpha);
  Matrix<K> R(n, n, z);
  if (!swap) {
    auto r1 = congruence_transform(x1, y1, F);
    auto r2 = congruence_transform(x2, y2, F);
    if (!r1 || !r2) return std::nullopt;
    R = block_diag(*r1, *r2);
  } else {
    auto r12 = congruence_transform(x1, y2, F);  // R12^T X1 R12 = Y2
    auto r21 = congruence_transform(x2, y1, F);  // R21^T X2 R21 = Y1
    if (!r12 || !r21) return std::nullopt;
    Matrix<K> Z(s, s, z);
    R = blocks2(Z, *r12, *r21, Z);
  }
  Matrix<K> X = base_of(dx.X), Y = base_of(dy.X);
  Matrix<K> Q = X * R * inverse(Y);
  if (g == Group::SO && det(Q) != one_like(z)) {
    for (std::size_t i = 0; i < n; ++i) Y(i, 0) = -Y(i, 0);
    Q = X * R * inverse(Y);
  }
  Matrix<K> M = a.ctx.M();
  ensure(Q.transpose() * M * Q == M, "type 1 witness is not orthogonal");
  Matrix<K> C = inverse(Q) * a.B * Q;
  int sign = C == b.B ? 1 : (C == -b.B ? -1 : 0);
  ensure(sign != 0, "type 1 witness does not conjugate A to +-B");
  return std::make_pair(Q, sign);
}

template <class K>
std::vector<Quad<K>> derived_block(const Type2Data<K>& d, bool plus) {
  std::vector<Quad<K>> out;
  K z = zero_like(d.alpha), half = inverse(from_int(d.alpha, 2));
  for (std::size_t j = 0; j < d.X1.size(); ++j) {
    K b = half * d.X2[j];
    out.emplace_back(half * d.X1[j], plus ? b : K(-b), d.alpha);
  }
  (void)z;
  return out;
}

}  // namespace detail

/// Decides isomorphy of Inn_A and Inn_B over O(n,k,beta). Over SO only Type 1
/// is decided here (it coincides with O); Types 2-4 over SO are refused.
template <class K>
IsomorphyVerdict<K> isomorphic(const NormalizedInvolution<K>& a, const NormalizedInvolution<K>& b,
                               Group g = Group::O) {
  if (a.ctx != b.ctx) fail("context_mismatch", "involutions live on different forms");
  const FieldDesc& F = a.ctx.field;
  IsomorphyVerdict<K> v;
  v.group = g;
  if (a.type != b.type) {
    v.route = Route::type_mismatch;
    v.note = "types " + std::to_string(a.type) + " and " + std::to_string(b.type);
    return v;
  }
  if (g == Group::SO && a.type != 1)
    throw unsupported_error("isomorphy over SO for type " + std::to_string(a.type) +
                            " is undecided beyond O-level; use the oracle");
  if (a.alpha == b.alpha && a.B == b.B) {
    v.isomorphic = true;
    v.route = Route::reflexive;
    v.witness = Matrix<K>::identity(a.ctx.n, a.ctx.one());
    return v;
  }
  switch (a.type) {
    case 1: {
      auto dx = decompose_type1(a);
      auto dy = decompose_type1(b);
      v.route = Route::type1_blocks;
      if (dx.s != dy.s) {
        CongruenceInvariant ia, ib;
        ia.dim = dx.s;
        ib.dim = dy.s;
        v.certificates.push_back({"minus_block_dim", ia, ib});
        return v;
      }
      bool over = false;
      auto c1 = diag_congruent(dx.X1, dy.X1, F, over);
      auto c2 = diag_congruent(dx.X2, dy.X2, F, over);
      v.certificates.push_back({"X1~Y1", c1.first, c1.second});
      v.certificates.push_back({"X2~Y2", c2.first, c2.second});
      bool swap = false;
      if (c1.congruent && c2.congruent) {
        v.isomorphic = true;
      } else if (dx.s == dx.t) {
        auto s1 = diag_congruent(dx.X1, dy.X2, F, over);
        auto s2 = diag_congruent(dx.X2, dy.X1, F, over);
        v.certificates.push_back({"X1~Y2", s1.first, s1.second});
        v.certificates.push_back({"X2~Y1", s2.first, s2.second});
        if (s1.congruent && s2.congruent) {
          v.isomorphic = true;
          v.route = Route::type1_swap;
          swap = true;
        }
      }
      if (v.isomorphic) {
        if (auto w = detail::type1_witness(a, dx, b, dy, swap, g)) {
          v.witness = w->first;
          v.witness_sign = w->second;
        }
      }
      return v;
    }
    case 2: {
      v.route = Route::type2_reduction;
      CongruenceInvariant ia, ib;
      ia.dim = ib.dim = 1;
      ia.det_class = to_string(square_class(a.alpha, F));
      ib.det_class = to_string(square_class(b.alpha, F));
      v.certificates.push_back({"alpha_class", ia, ib});
      if (ia.det_class != ib.det_class) return v;
      if (F.kind == FieldKind::real || F.kind == FieldKind::closed) {
        v.isomorphic = true;
        v.note = "type 1 over the algebraic closure";
        return v;
      }
      if (F.kind != FieldKind::finite)
        throw unsupported_error("type 2 isomorphy over " + F.name() + " needs congruence over k[sqrt(alpha)]");
      auto dx = decompose_type2(a);
      auto dy = decompose_type2(b);
      auto x1 = detail::derived_block(dx, true), x2 = detail::derived_block(dx, false);
      auto y1 = detail::derived_block(dy, true), y2 = detail::derived_block(dy, false);
      auto c1 = diag_congruent(x1, y1, F, true), c2 = diag_congruent(x2, y2, F, true);
      v.certificates.push_back({"X1'~Y1'", c1.first, c1.second});
      v.certificates.push_back({"X2'~Y2'", c2.first, c2.second});
      if (c1.congruent && c2.congruent) {
        v.isomorphic = true;
        return v;
      }
      auto s1 = diag_congruent(x1, y2, F, true), s2 = diag_congruent(x2, y1, F, true);
      v.certificates.push_back({"X1'~Y2'", s1.first, s1.second});
      v.certificates.push_back({"X2'~Y1'", s2.first, s2.second});
      v.isomorphic = s1.congruent && s2.congruent;
      return v;
    }
    case 3:
      v.route = Route::type3_always;
      v.isomorphic = true;
      return v;
    case 4: {
      v.route = Route::type4_alpha_class;
      CongruenceInvariant ia, ib;
      ia.dim = ib.dim = 1;
      ia.det_class = to_string(square_class(a.alpha, F));
      ib.det_class = to_string(square_class(b.alpha, F));
      v.certificates.push_back({"alpha_class", ia, ib});
      v.isomorphic = ia.det_class == ib.det_class;
      return v;
    }
  }
  ensure(false, "unknown type");
  return v;
}

}  // namespace orthoinv

#endif
