// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Normal form (B, alpha) of an inner automorphism Inn_A, its type, and the
// canonical bases of each type.

#ifndef ORTHOINV_INVOLUTIONS_HPP
#define ORTHOINV_INVOLUTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "orthoinv/fields.hpp"
#include "orthoinv/forms.hpp"
#include "orthoinv/linalg.hpp"

namespace orthoinv {

/// A = sqrt(alpha) B, or A = B when alpha == 1. folded marks alpha != 1 that
/// is nevertheless a square of the classification field (so the type is 1 or 3).
template <class K>
struct NormalizedInvolution {
  using E = Quad<K>;
  FormContext<K> ctx;
  Matrix<K> B;
  K alpha;
  K scale;  // similitude factor of the k-part of the raw input
  bool folded = false;
  int epsilon = 1;
  int type = 1;

  bool has_root() const { return alpha != one_like(alpha); }
  bool alpha_trivial() const { return !has_root() || folded; }
  K tag() const { return has_root() ? alpha : zero_like(alpha); }

  Matrix<E> A() const {
    K z = zero_like(alpha);
    Matrix<E> m(B.rows(), B.cols(), E(z, z, tag()));
    for (std::size_t i = 0; i < B.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j)
        m(i, j) = has_root() ? E(z, B(i, j), alpha) : E(B(i, j), z, z);
    return m;
  }
};

template <class K>
NormalizedInvolution<K> normalize_inner(const Matrix<Quad<K>>& A_raw, const FormContext<K>& ctx) {
  using E = Quad<K>;
  if (!A_raw.square() || A_raw.rows() != ctx.n) fail("domain", "matrix size does not match the form");
  if (!ctx.friendly()) {
    auto [s, t] = *ctx.friendliness.failing_pair;
    fail("unsupported_context", "orthogonal group is not friendly: x^2 + (m_" + std::to_string(s + 1) + "/m_" +
                                    std::to_string(t + 1) + ") y^2 = 1 has no solution with y != 0");
  }
  std::size_t n = ctx.n;
  const E* e0 = nullptr;
  for (auto& e : A_raw.data())
    if (!is_zero(e)) {
      e0 = &e;
      break;
    }
  if (!e0) fail("singular", "zero matrix");
  Matrix<E> R = A_raw.scaled(e0->inverse());
  Matrix<K> C(n, n, ctx.diag[0] - ctx.diag[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!R(i, j).in_base())
        fail("structure", "entries are not k-multiples of a single sqrt(alpha)");
      C(i, j) = R(i, j).a();
    }
  if (is_zero(det(C))) fail("singular", "matrix is singular");
  Matrix<K> M = ctx.M();
  Matrix<K> N = inverse(M) * C.transpose() * M * C;
  if (!N.is_scalar())
    fail("not_normalizing", "A is not a similitude of the form, so Inn_A does not preserve SO");
  K mu = N(0, 0);
  K r = square_class(mu, arithmetic_field(mu));
  auto t = exact_sqrt(K(mu / r));
  ensure(t.has_value(), "square class representative does not divide out");
  K one = one_like(mu);
  NormalizedInvolution<K> inv;
  inv.ctx = ctx;
  inv.scale = mu;
  inv.alpha = r;
  K denom = r == one ? *t : K(*t * r);
  inv.B = C.scaled(inverse(denom));
  if (n % 2 == 1) {
    ensure(r == one, "odd dimension with nontrivial similitude class");
    if (det(inv.B) != one) inv.B = -inv.B;
  }
  Matrix<K> I = Matrix<K>::identity(n, one);
  Matrix<K> sq = (inv.B * inv.B).scaled(r);
  if (sq == I)
    inv.epsilon = 1;
  else if (sq == -I)
    inv.epsilon = -1;
  else
    fail("not_involution", "A^2 is not +-I, so Inn_A is not an involution");
  if (inv.B.is_scalar()) fail("identity", "identity automorphism (A = alpha I)");
  inv.folded = r != one && is_square(r, ctx.field);
  bool triv = inv.alpha_trivial();
  inv.type = inv.epsilon == 1 ? (triv ? 1 : 2) : (triv ? 3 : 4);
  ensure(n % 2 == 0 || inv.type == 1, "types 2-4 need even dimension");
  return inv;
}

template <class K>
NormalizedInvolution<K> normalize_inner(const Matrix<K>& A, const FormContext<K>& ctx) {
  return normalize_inner(lift(A), ctx);
}

/// Inn of sqrt(alpha) * C.
template <class K>
NormalizedInvolution<K> normalize_inner(const K& alpha, const Matrix<K>& C, const FormContext<K>& ctx) {
  if (alpha == one_like(alpha)) return normalize_inner(lift(C), ctx);
  K z = zero_like(alpha);
  Matrix<Quad<K>> A(C.rows(), C.cols(), Quad<K>(z, z, alpha));
  for (std::size_t i = 0; i < C.rows(); ++i)
    for (std::size_t j = 0; j < C.cols(); ++j) A(i, j) = Quad<K>(z, C(i, j), alpha);
  return normalize_inner(A, ctx);
}

template <class K>
void require_type(const NormalizedInvolution<K>& inv, int t) {
  if (inv.type != t)
    fail("type_mismatch", "expected type " + std::to_string(t) + ", got " + std::to_string(inv.type));
}

// ---------------------------------------------------------------------------

template <class K>
struct Type1Data {
  using E = Quad<K>;
  Matrix<E> X;
  std::size_t s = 0, t = 0;
  Vec<E> X1, X2;
  bool flipped = false;  // data describes -A
};

template <class T>
Matrix<T> diag_signs(std::size_t s, std::size_t t, const T& one) {
  Matrix<T> D = Matrix<T>::identity(s + t, one);
  for (std::size_t i = 0; i < s; ++i) D(i, i) = -one;
  return D;
}

template <class K>
Type1Data<K> decompose_type1(const NormalizedInvolution<K>& inv) {
  using E = Quad<K>;
  require_type(inv, 1);
  Matrix<E> A = inv.A();
  Matrix<E> M = gram_as(inv.ctx, A(0, 0));
  auto eig = eig_basis_order2(A);
  Type1Data<K> d;
  if (eig.minus_basis.size() > eig.plus_basis.size()) {
    A = -A;
    std::swap(eig.minus_basis, eig.plus_basis);
    d.flipped = true;
  }
  auto minus = beta_orthogonal_basis(eig.minus_basis, M);
  auto plus = beta_orthogonal_basis(eig.plus_basis, M);
  d.s = minus.size();
  d.t = plus.size();
  std::vector<Vec<E>> cols = minus;
  cols.insert(cols.end(), plus.begin(), plus.end());
  d.X = Matrix<E>::from_columns(cols);
  Matrix<E> G = d.X.transpose() * M * d.X;
  ensure(G.is_diagonal(), "type 1 Gram matrix is not diagonal");
  for (std::size_t i = 0; i < d.s; ++i) d.X1.push_back(G(i, i));
  for (std::size_t i = d.s; i < d.s + d.t; ++i) d.X2.push_back(G(i, i));
  ensure(d.X * diag_signs(d.s, d.t, A.one()) * inverse(d.X) == A, "type 1 reconstruction failed");
  return d;
}

template <class K>
struct Type2Data {
  using E = Quad<K>;
  Matrix<E> X;  // base-field entries
  K alpha;
  Vec<K> X1, X2;
};

/// -(sqrt(alpha)/alpha) [[0, I], [alpha I, 0]]
template <class K>
Matrix<Quad<K>> type2_model(std::size_t m, const K& alpha) {
  using E = Quad<K>;
  K z = zero_like(alpha), one = one_like(alpha);
  E c(z, K(-(one / alpha)), alpha);
  Matrix<E> Z(m, m, E(z, z, alpha)), I = Matrix<E>::identity(m, E(one, z, alpha));
  return blocks2(Z, I, I.scaled(E(alpha, z, alpha)), Z).scaled(c);
}

template <class K>
Type2Data<K> decompose_type2(const NormalizedInvolution<K>& inv) {
  using E = Quad<K>;
  require_type(inv, 2);
  std::size_t n = inv.ctx.n, m = n / 2;
  Matrix<E> A = inv.A();
  Matrix<E> M = gram_as(inv.ctx, A(0, 0));
  auto eig = eig_basis_order2(A);
  ensure(eig.minus_basis.size() == m, "type 2 eigenspace is not half-dimensional");
  auto v = beta_orthogonal_basis(eig.minus_basis, M);
  K z = zero_like(inv.alpha);
  std::vector<Vec<E>> cols(n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      cols[j].push_back(E(v[j][i].a(), z, inv.alpha));
      cols[m + j].push_back(E(v[j][i].b(), z, inv.alpha));
    }
  Type2Data<K> d;
  d.alpha = inv.alpha;
  d.X = Matrix<E>::from_columns(cols);
  Matrix<E> G = d.X.transpose() * M * d.X;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool on = i == j || i + m == j || j + m == i;
      ensure(on || is_zero(G(i, j)), "type 2 Gram blocks are not diagonal");
    }
  for (std::size_t j = 0; j < m; ++j) {
    d.X1.push_back(G(j, j).a());
    d.X2.push_back(G(j, m + j).a());
    ensure(G(m + j, j) == G(j, m + j), "type 2 Gram matrix is not symmetric");
    ensure(G(m + j, m + j).a() == G(j, j).a() / inv.alpha, "type 2 lower block is not X1/alpha");
  }
  ensure(d.X * type2_model(m, inv.alpha) * inverse(d.X) == A, "type 2 reconstruction failed");
  return d;
}

// ---------------------------------------------------------------------------
// order 4

namespace detail {

/// Pairs (a, C a) with beta(a_j, a_l) = 0 for j != l; seeds e_i, then e_i + e_j,
/// projected onto the orthogonal complement of the pairs chosen so far.
template <class T>
std::vector<Vec<T>> conjugate_pair_seeds(const Matrix<T>& C, const Matrix<T>& M) {
  std::size_t n = C.rows(), m = n / 2;
  std::vector<Vec<T>> as, bs;
  std::vector<T> na, nb;
  T one = C.one();
  auto project = [&](Vec<T> x) {
    for (std::size_t j = 0; j < as.size(); ++j) {
      x = axpy(x, -(beta(x, M, as[j]) / na[j]), as[j]);
      x = axpy(x, -(beta(x, M, bs[j]) / nb[j]), bs[j]);
    }
    return x;
  };
  auto try_seed = [&](const Vec<T>& seed) {
    Vec<T> x = project(seed);
    T q = beta(x, M, x);
    if (is_zero(q)) return false;
    Vec<T> y = C * x;
    T qy = beta(y, M, y);
    ensure(!is_zero(qy), "partner vector is isotropic");
    as.push_back(x);
    bs.push_back(y);
    na.push_back(q);
    nb.push_back(qy);
    return true;
  };
  while (as.size() < m) {
    bool got = false;
    for (std::size_t i = 0; i < n && !got; ++i) got = try_seed(unit_vector(n, i, one));
    for (std::size_t i = 0; i < n && !got; ++i)
      for (std::size_t j = i + 1; j < n && !got; ++j) {
        Vec<T> s = unit_vector(n, i, one);
        s[j] = one;
        got = try_seed(s);
      }
    ensure(got, "no nonisotropic seed in a nondegenerate complement");
  }
  return as;
}

/// Recursive hyperbolic pairing between two isotropic subspaces spanned by
/// the columns of P (a side) and Q (b side).
template <class T>
Matrix<T> hyperbolic_pairs(const Matrix<T>& P, const Matrix<T>& Q, const Matrix<T>& M) {
  std::size_t n = P.rows(), m = n / 2;
  std::vector<Vec<T>> la = independent_columns(P), lb = independent_columns(Q);
  ensure(la.size() == m && lb.size() == m, "isotropic eigenspaces are not half-dimensional");
  std::vector<Vec<T>> as, bs;
  while (as.size() < m) {
    std::size_t ia = 0;
    while (ia < la.size() && is_zero_vec(la[ia])) ++ia;
    ensure(ia < la.size(), "ran out of a-vectors");
    Vec<T> a = la[ia];
    std::size_t ib = 0;
    while (ib < lb.size() && is_zero(beta(a, M, lb[ib]))) ++ib;
    ensure(ib < lb.size(), "no partner for a hyperbolic pair");
    Vec<T> b = lb[ib];
    T ab = beta(a, M, b);
    for (auto& v : la) v = axpy(v, -(beta(v, M, b) / ab), a);
    for (auto& w : lb) w = axpy(w, -(beta(a, M, w) / ab), b);
    as.push_back(a);
    bs.push_back(b);
  }
  std::vector<Vec<T>> cols = as;
  cols.insert(cols.end(), bs.begin(), bs.end());
  return Matrix<T>::from_columns(cols);
}

}  // namespace detail

enum class Type3Case { i_in_k, i_not_in_k };
enum class Type4Case { sqrt_minus_alpha_in_k, not_in_k };

inline std::string to_string(Type3Case c) { return c == Type3Case::i_in_k ? "i_in_k" : "i_not_in_k"; }
inline std::string to_string(Type4Case c) {
  return c == Type4Case::sqrt_minus_alpha_in_k ? "sqrt_minus_alpha_in_k" : "not_in_k";
}

/// The conjugate-pair basis U is built in every case. The hyperbolic basis X
/// is built when the needed root lies in the arithmetic field itself.
template <class K>
struct Type3Data {
  using E = Quad<K>;
  Type3Case kase = Type3Case::i_not_in_k;
  Matrix<E> U;
  Vec<E> U1;
  std::optional<Matrix<E>> X;
  Vec<E> X1;
  std::optional<K> omega;  // omega^2 = -1, a-vectors span E(A, -omega)
};

template <class K>
Type3Data<K> decompose_type3(const NormalizedInvolution<K>& inv) {
  using E = Quad<K>;
  require_type(inv, 3);
  std::size_t n = inv.ctx.n, m = n / 2;
  Matrix<E> A = inv.A();
  Matrix<E> M = gram_as(inv.ctx, A(0, 0));
  K one = one_like(inv.alpha);
  Type3Data<K> d;
  d.kase = is_square(K(-one), inv.ctx.field) ? Type3Case::i_in_k : Type3Case::i_not_in_k;
  auto as = detail::conjugate_pair_seeds(A, M);
  std::vector<Vec<E>> cols = as;
  for (auto& a : as) cols.push_back(A * a);
  d.U = Matrix<E>::from_columns(cols);
  Matrix<E> G = d.U.transpose() * M * d.U;
  for (std::size_t j = 0; j < m; ++j) d.U1.push_back(G(j, j));
  Matrix<E> U1 = Matrix<E>::diagonal(d.U1);
  ensure(G == block_diag(U1, U1), "type 3 Gram matrix is not diag(U1, U1)");
  Matrix<E> Z(m, m, A.zero()), I = Matrix<E>::identity(m, A.one());
  ensure(d.U * blocks2(Z, -I, I, Z) * inverse(d.U) == A, "type 3 reconstruction failed");
  if (d.kase == Type3Case::i_in_k && !inv.has_root()) {
    if (auto w = exact_sqrt(K(-one))) {
      d.omega = *w;
      E W = convert(*w, A(0, 0));
      Matrix<E> In = Matrix<E>::identity(n, A.one());
      Matrix<E> X = detail::hyperbolic_pairs(A - In.scaled(W), A + In.scaled(W), M);
      Matrix<E> H = X.transpose() * M * X;
      for (std::size_t j = 0; j < m; ++j) d.X1.push_back(H(j, m + j));
      Matrix<E> X1 = Matrix<E>::diagonal(d.X1);
      ensure(H == blocks2(Z, X1, X1, Z), "type 3 hyperbolic Gram shape");
      Matrix<E> Dg = block_diag(I.scaled(-W), I.scaled(W));
      ensure(X * Dg * inverse(X) == A, "type 3 hyperbolic reconstruction failed");
      d.X = X;
    }
  }
  return d;
}

template <class K>
struct Type4Data {
  using E = Quad<K>;
  Type4Case kase = Type4Case::not_in_k;
  K alpha;
  Matrix<E> U;  // base-field entries
  Vec<E> U1;
  std::optional<Matrix<E>> X;
  Vec<E> X1;
  std::optional<K> lambda;  // lambda^2 = -1/alpha; A a = -sqrt(alpha) lambda a on the a-block
};

/// -(sqrt(alpha)/alpha) [[0, I], [-alpha I, 0]]
template <class K>
Matrix<Quad<K>> type4_model(std::size_t m, const K& alpha) {
  using E = Quad<K>;
  K z = zero_like(alpha), one = one_like(alpha);
  E c(z, K(-(one / alpha)), alpha);
  Matrix<E> Z(m, m, E(z, z, alpha)), I = Matrix<E>::identity(m, E(one, z, alpha));
  return blocks2(Z, I, I.scaled(E(-alpha, z, alpha)), Z).scaled(c);
}

template <class K>
Type4Data<K> decompose_type4(const NormalizedInvolution<K>& inv) {
  using E = Quad<K>;
  require_type(inv, 4);
  std::size_t n = inv.ctx.n, m = n / 2;
  Matrix<E> A = inv.A();
  K one = one_like(inv.alpha);
  Matrix<E> Bq = lift(inv.B, inv.alpha);
  Matrix<E> M = gram_as(inv.ctx, A(0, 0));
  Type4Data<K> d;
  d.alpha = inv.alpha;
  d.kase = is_square(K(-inv.alpha), inv.ctx.field) ? Type4Case::sqrt_minus_alpha_in_k : Type4Case::not_in_k;
  auto as = detail::conjugate_pair_seeds(Bq, M);
  std::vector<Vec<E>> cols = as;
  for (auto& a : as) cols.push_back(Bq * a);
  d.U = Matrix<E>::from_columns(cols);
  Matrix<E> G = d.U.transpose() * M * d.U;
  for (std::size_t j = 0; j < m; ++j) d.U1.push_back(G(j, j));
  Matrix<E> U1 = Matrix<E>::diagonal(d.U1);
  E ia = convert(K(one / inv.alpha), A(0, 0));
  ensure(G == block_diag(U1, U1.scaled(ia)), "type 4 Gram matrix is not diag(U1, U1/alpha)");
  ensure(d.U * type4_model(m, inv.alpha) * inverse(d.U) == A, "type 4 reconstruction failed");
  if (d.kase == Type4Case::sqrt_minus_alpha_in_k) {
    if (auto l = exact_sqrt(K(-(one / inv.alpha)))) {
      d.lambda = *l;
      E L = convert(*l, A(0, 0));
      Matrix<E> In = Matrix<E>::identity(n, A.one());
      Matrix<E> X = detail::hyperbolic_pairs(Bq - In.scaled(L), Bq + In.scaled(L), M);
      Matrix<E> H = X.transpose() * M * X;
      for (std::size_t j = 0; j < m; ++j) d.X1.push_back(H(j, m + j));
      Matrix<E> X1 = Matrix<E>::diagonal(d.X1), Z(m, m, A.zero()), I = Matrix<E>::identity(m, A.one());
      ensure(H == blocks2(Z, X1, X1, Z), "type 4 hyperbolic Gram shape");
      E i(zero_like(one), *l, inv.alpha);  // i = sqrt(alpha) * lambda, i^2 = -1
      Matrix<E> Dg = block_diag(I.scaled(-i), I.scaled(i));
      ensure(X * Dg * inverse(X) == A, "type 4 hyperbolic reconstruction failed");
      d.X = X;
    }
  }
  return d;
}

}  // namespace orthoinv

#endif
