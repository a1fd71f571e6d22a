// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Symmetric bilinear form context: congruence diagonalization, orthogonal /
// similitude membership, friendliness, beta-orthogonal bases.

#ifndef ORTHOINV_FORMS_HPP
#define ORTHOINV_FORMS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "orthoinv/fields.hpp"
#include "orthoinv/linalg.hpp"

namespace orthoinv {

// ---------------------------------------------------------------------------
// scalar conversion between K and Quad<K>

template <class K>
K convert(const K& x, const K&) {
  return x;
}
template <class K>
Quad<K> convert(const K& x, const Quad<K>& like) {
  return Quad<K>(x, zero_like(x), like.alpha());
}

template <class K>
Matrix<Quad<K>> lift(const Matrix<K>& m, const K& alpha) {
  Matrix<Quad<K>> out(m.rows(), m.cols(), Quad<K>(m.zero(), m.zero(), alpha));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Quad<K>(m(i, j), m.zero(), alpha);
  return out;
}
template <class K>
Matrix<Quad<K>> lift(const Matrix<K>& m) {
  return lift(m, m.zero());
}

/// Base parts of a matrix whose entries all lie in k.
template <class K>
Matrix<K> base_part(const Matrix<Quad<K>>& m) {
  Matrix<K> out(m.rows(), m.cols(), m(0, 0).a() - m(0, 0).a());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).in_base()) fail("structure", "entry outside the base field");
      out(i, j) = m(i, j).a();
    }
  return out;
}

template <class K>
Vec<Quad<K>> lift(const Vec<K>& v, const K& alpha) {
  Vec<Quad<K>> out;
  for (auto& x : v) out.emplace_back(x, zero_like(x), alpha);
  return out;
}

// ---------------------------------------------------------------------------

/// Q^T S Q = D diagonal. Pivots on a nonzero diagonal entry when one is
/// available, otherwise on e_k + e_j.
template <class T>
std::pair<Matrix<T>, Matrix<T>> diagonalize_congruence(const Matrix<T>& S) {
  if (!S.is_symmetric()) fail("domain", "matrix is not symmetric");
  std::size_t n = S.rows();
  Matrix<T> D = S, Q = Matrix<T>::identity(n, S.one());
  auto add_col = [&](std::size_t dst, std::size_t src, const T& c) {
    // D <- E^T D E with E = I + c e_src e_dst^T
    for (std::size_t i = 0; i < n; ++i) D(i, dst) += c * D(i, src);
    for (std::size_t j = 0; j < n; ++j) D(dst, j) += c * D(src, j);
    for (std::size_t i = 0; i < n; ++i) Q(i, dst) += c * Q(i, src);
  };
  auto swap_idx = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t j = 0; j < n; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(Q(i, a), Q(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(D(k, k))) {
      std::size_t j = k + 1;
      while (j < n && is_zero(D(j, j))) ++j;
      if (j < n) {
        swap_idx(k, j);
      } else {
        j = k + 1;
        while (j < n && is_zero(D(k, j))) ++j;
        if (j == n) fail("domain", "matrix is singular");
        add_col(k, j, S.one());
      }
    }
    T inv = inverse(D(k, k));
    for (std::size_t j = k + 1; j < n; ++j) {
      if (is_zero(D(k, j))) continue;
      add_col(j, k, -(D(k, j) * inv));
    }
  }
  ensure((Q.transpose() * S * Q) == D && D.is_diagonal(), "congruence diagonalization failed");
  return {Q, D};
}

template <class K>
struct FriendlyWitness {
  std::size_t s = 0, t = 0;
  K ratio;
  bool found = false;
  K x, y;
};

template <class K>
struct FriendlyReport {
  bool friendly = true;
  std::vector<FriendlyWitness<K>> witnesses;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/// (x,y), y != 0, with x^2 + r y^2 = 1.
template <class K>
std::optional<std::pair<K, K>> friendly_solution(const K& r) {
  K one = one_like(r), two = from_int(r, 2);
  if (r + one != zero_like(r)) {
    K d = inverse(r + one);
    return std::make_pair(K((r - one) * d), K(two * d));
  }
  if constexpr (std::is_same_v<K, Residue>) {
    if (r.modulus() == 3) {
      std::uint64_t p = r.modulus();
      for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 1; y < p; ++y) {
          K X = Residue::raw(x, p), Y = Residue::raw(y, p);
          if (X * X + r * Y * Y == one) return std::make_pair(X, Y);
        }
      return std::nullopt;
    }
  }
  K three = from_int(r, 3);
  return std::make_pair(K(from_int(r, 5) / three), K(from_int(r, 4) / three));
}

template <class K>
FriendlyReport<K> is_friendly(const std::vector<K>& diag) {
  FriendlyReport<K> rep;
  for (std::size_t s = 0; s < diag.size(); ++s)
    for (std::size_t t = 0; t < diag.size(); ++t) {
      if (s == t) continue;
      FriendlyWitness<K> w;
      w.s = s;
      w.t = t;
      w.ratio = K(diag[s] / diag[t]);
      auto sol = friendly_solution(w.ratio);
      w.x = w.y = zero_like(w.ratio);
      if (sol) {
        w.found = true;
        w.x = sol->first;
        w.y = sol->second;
      } else if (rep.friendly) {
        rep.friendly = false;
        rep.failing_pair = std::make_pair(s, t);
      }
      rep.witnesses.push_back(w);
    }
  return rep;
}

template <class K>
struct FormContext {
  std::size_t n = 0;
  std::vector<K> diag;
  FieldDesc field;
  std::optional<Matrix<K>> gram;       // as given, when not diagonal
  std::optional<Matrix<K>> transform;  // P with P^T gram P = diag
  FriendlyReport<K> friendliness;

  bool friendly() const { return friendliness.friendly; }
  Matrix<K> M() const { return Matrix<K>::diagonal(diag); }
  K one() const { return one_like(diag.at(0)); }
  bool operator==(const FormContext& o) const { return diag == o.diag && field == o.field; }
  bool operator!=(const FormContext& o) const { return !(*this == o); }
};

namespace detail {
inline void check_field(const Rational&, const FieldDesc& F) {
  if (F.kind == FieldKind::finite) fail("domain", "rational data over a finite field");
}
inline void check_field(const Residue& x, const FieldDesc& F) {
  if (F.kind != FieldKind::finite || F.p != x.modulus())
    fail("domain", "residue data needs the matching prime field");
}
}  // namespace detail

template <class K>
FormContext<K> make_context(const FieldDesc& F, const std::vector<K>& diag) {
  if (diag.empty()) fail("domain", "empty form");
  for (auto& d : diag) {
    detail::check_field(d, F);
    if (is_zero(d)) fail("domain", "degenerate form (zero diagonal entry)");
  }
  FormContext<K> c;
  c.n = diag.size();
  c.diag = diag;
  c.field = F;
  c.friendliness = is_friendly(diag);
  return c;
}

template <class K>
FormContext<K> standard_context(const FieldDesc& F, std::size_t n, const K& one) {
  return make_context(F, std::vector<K>(n, one));
}

/// Non-diagonal Gram matrices are diagonalized on ingestion.
template <class K>
FormContext<K> make_context_from_gram(const FieldDesc& F, const Matrix<K>& G) {
  if (G.is_diagonal()) return make_context(F, G.diag());
  auto [Q, D] = diagonalize_congruence(G);
  FormContext<K> c = make_context(F, D.diag());
  c.gram = G;
  c.transform = Q;
  return c;
}

template <class T, class K>
Matrix<T> gram_as(const FormContext<K>& ctx, const T& like) {
  Matrix<T> m(ctx.n, ctx.n, zero_like(like));
  for (std::size_t i = 0; i < ctx.n; ++i) m(i, i) = convert(ctx.diag[i], like);
  return m;
}

enum class Membership { SO, O_minus_SO, GO_proper, none };

inline std::string to_string(Membership m) {
  switch (m) {
    case Membership::SO: return "SO";
    case Membership::O_minus_SO: return "O_minus_SO";
    case Membership::GO_proper: return "GO_proper";
    case Membership::none: return "none";
  }
  return "?";
}

template <class T>
struct MembershipVerdict {
  Membership category = Membership::none;
  std::optional<T> factor;  // similitude factor when in GO
};

template <class T, class K>
MembershipVerdict<T> classify_membership(const Matrix<T>& A, const FormContext<K>& ctx) {
  if (A.rows() != ctx.n || !A.square()) fail("domain", "matrix size does not match the form");
  Matrix<T> M = gram_as(ctx, A(0, 0));
  Matrix<T> G = A.transpose() * M * A;
  MembershipVerdict<T> v;
  if (G == M) {
    v.factor = A.one();
    v.category = det(A) == A.one() ? Membership::SO : Membership::O_minus_SO;
    return v;
  }
  Matrix<T> N = inverse(M) * G;
  if (N.is_scalar() && !is_zero(N(0, 0))) {
    v.category = Membership::GO_proper;
    v.factor = N(0, 0);
  }
  return v;
}

template <class T>
T beta(const Vec<T>& x, const Matrix<T>& M, const Vec<T>& y) {
  return dot(x, M * y);
}

/// Same span, pairwise beta-orthogonal.
template <class T>
std::vector<Vec<T>> beta_orthogonal_basis(const std::vector<Vec<T>>& vectors, const Matrix<T>& M) {
  if (vectors.empty()) return {};
  Matrix<T> V = Matrix<T>::from_columns(vectors);
  Matrix<T> G = V.transpose() * M * V;
  std::pair<Matrix<T>, Matrix<T>> qd;
  try {
    qd = diagonalize_congruence(G);
  } catch (const precondition_error&) {
    // find a radical vector to report
    std::size_t m = G.rows();
    Matrix<T> R = G;
    std::vector<std::size_t> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < m; ++c) {
      std::size_t p = row;
      while (p < m && is_zero(R(p, c))) ++p;
      if (p == m) continue;
      for (std::size_t j = 0; j < m; ++j) std::swap(R(row, j), R(p, j));
      T s = inverse(R(row, c));
      for (std::size_t j = 0; j < m; ++j) R(row, j) = s * R(row, j);
      for (std::size_t i = 0; i < m; ++i) {
        if (i == row || is_zero(R(i, c))) continue;
        T f = R(i, c);
        for (std::size_t j = 0; j < m; ++j) R(i, j) -= f * R(row, j);
      }
      pivcol.push_back(c);
      ++row;
    }
    std::size_t free = 0;
    while (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) ++free;
    Vec<T> coef(m, G.zero());
    coef[free] = G.one();
    for (std::size_t r = 0; r < pivcol.size(); ++r) coef[pivcol[r]] = -R(r, free);
    Vec<T> rad = V * coef;
    std::string s;
    for (auto& x : rad) s += (s.empty() ? "" : ",") + to_string(x);
    fail("degenerate", "form is degenerate on the span; radical vector (" + s + ")");
  }
  Matrix<T> W = V * qd.first;
  std::vector<Vec<T>> out;
  for (std::size_t j = 0; j < W.cols(); ++j) out.push_back(W.column(j));
  return out;
}

}  // namespace orthoinv

#endif
