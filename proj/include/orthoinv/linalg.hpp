// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense exact matrices and the projector-based eigenbasis constructions for
// matrices with A^2 = +-I.

#ifndef ORTHOINV_LINALG_HPP
#define ORTHOINV_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthoinv/errors.hpp"
#include "orthoinv/fields.hpp"

namespace orthoinv {

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill) : r_(r), c_(c), e_(r * c, fill) {}

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n, zero_like(one));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix diagonal(const Vec<T>& d) {
    if (d.empty()) fail("domain", "empty diagonal");
    Matrix m(d.size(), d.size(), zero_like(d[0]));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<T>>& rows) {
    if (rows.empty()) fail("domain", "empty matrix");
    Matrix m(rows.size(), rows[0].size(), zero_like(rows[0][0]));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) fail("domain", "ragged rows");
      for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<T>>& cols) {
    if (cols.empty()) fail("domain", "empty matrix");
    Matrix m(cols[0].size(), cols.size(), zero_like(cols[0][0]));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.r_) fail("domain", "ragged columns");
      for (std::size_t i = 0; i < m.r_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  const std::vector<T>& data() const { return e_; }

  T zero() const { return zero_like(e_.at(0)); }
  T one() const { return one_like(e_.at(0)); }

  Vec<T> column(std::size_t j) const {
    Vec<T> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  Vec<T> diag() const {
    Vec<T> v;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) v.push_back((*this)(i, i));
    return v;
  }

  Matrix transpose() const {
    Matrix t(c_, r_, zero());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    shape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
    return m;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) fail("domain", "dimension mismatch in product");
    Matrix m(r_, o.c_, zero());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }
  Vec<T> operator*(const Vec<T>& v) const {
    if (c_ != v.size()) fail("domain", "dimension mismatch in product");
    Vec<T> out(r_, zero());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) out[i] += (*this)(i, k) * v[k];
    return out;
  }
  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.e_) x = s * x;
    return m;
  }
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (i != j && !is_zero((*this)(i, j))) return false;
    return true;
  }
  bool is_scalar() const {
    if (!square() || !is_diagonal()) return false;
    for (std::size_t i = 1; i < r_; ++i)
      if ((*this)(i, i) != (*this)(0, 0)) return false;
    return true;
  }
  bool is_symmetric() const { return square() && *this == transpose(); }

 private:
  void shape(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail("domain", "dimension mismatch");
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> e_;
};

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

/// [[a, b], [c, d]] from four equal square blocks.
template <class T>
Matrix<T> blocks2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
  std::size_t h = a.rows();
  Matrix<T> m(2 * h, 2 * h, a.zero());
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      m(i, j) = a(i, j);
      m(i, h + j) = b(i, j);
      m(h + i, j) = c(i, j);
      m(h + i, h + j) = d(i, j);
    }
  return m;
}

template <class T>
Matrix<T> sub_block(const Matrix<T>& m, std::size_t r0, std::size_t c0, std::size_t r, std::size_t c) {
  Matrix<T> s(r, c, m.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) s(i, j) = m(r0 + i, c0 + j);
  return s;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s = zero_like(a.at(0));
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<T> axpy(const Vec<T>& x, const T& c, const Vec<T>& y) {
  Vec<T> r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * y[i];
  return r;
}

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class T>
Vec<T> unit_vector(std::size_t n, std::size_t i, const T& one) {
  Vec<T> v(n, zero_like(one));
  v[i] = one;
  return v;
}

/// Determinant by Gaussian elimination.
template <class T>
T det(Matrix<T> a) {
  if (!a.square()) fail("domain", "determinant of non-square matrix");
  std::size_t n = a.rows();
  T d = a.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(a(piv, k))) ++piv;
    if (piv == n) return a.zero();
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      d = -d;
    }
    d *= a(k, k);
    T inv = inverse(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      T f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

/// Gauss-Jordan inverse; throws on singular input.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.square()) fail("domain", "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix<T> a = m, inv = Matrix<T>::identity(n, m.one());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(a(piv, k))) ++piv;
    if (piv == n) fail("singular", "matrix is singular");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    T s = inverse(a(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = s * a(k, j);
      inv(k, j) = s * inv(k, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      T f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Incremental rank tracker: reduced copies of accepted vectors with their
/// pivot positions. accept() keeps v iff it is independent of those so far.
template <class T>
class IndependentSet {
 public:
  bool independent(const Vec<T>& v) const { return !is_zero_vec(reduce(v)); }
  bool accept(const Vec<T>& v) {
    Vec<T> r = reduce(v);
    std::size_t piv = 0;
    while (piv < r.size() && is_zero(r[piv])) ++piv;
    if (piv == r.size()) return false;
    rows_.push_back(r);
    pivots_.push_back(piv);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  Vec<T> reduce(Vec<T> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const T& c = v[pivots_[k]];
      if (is_zero(c)) continue;
      T f = c / rows_[k][pivots_[k]];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * rows_[k][i];
    }
    return v;
  }
  std::vector<Vec<T>> rows_;
  std::vector<std::size_t> pivots_;
};

template <class T>
std::size_t rank(const Matrix<T>& m) {
  IndependentSet<T> s;
  for (std::size_t j = 0; j < m.cols(); ++j) s.accept(m.column(j));
  return s.size();
}

/// Leftmost maximal independent subset of the columns.
template <class T>
std::vector<Vec<T>> independent_columns(const Matrix<T>& m) {
  IndependentSet<T> s;
  std::vector<Vec<T>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vec<T> c = m.column(j);
    if (s.accept(c)) out.push_back(c);
  }
  return out;
}

/// Bases of E(A,-1) and E(A,+1).
template <class T>
struct EigenBasisPair {
  std::vector<Vec<T>> minus_basis, plus_basis;
  std::string lambda = "+-1";
};

/// A^2 = I, A != +-I. Columns of A - I span E(A,-1), of A + I span E(A,1).
template <class T>
EigenBasisPair<T> eig_basis_order2(const Matrix<T>& A) {
  std::size_t n = A.rows();
  Matrix<T> I = Matrix<T>::identity(n, A.one());
  if (A * A != I) fail("precondition", "A^2 != I");
  if (A.is_scalar()) fail("degenerate", "A is scalar");
  EigenBasisPair<T> out;
  out.minus_basis = independent_columns(A - I);
  out.plus_basis = independent_columns(A + I);
  ensure(out.minus_basis.size() + out.plus_basis.size() == n, "eigenspace dimensions do not add up");
  return out;
}

enum class Order4Mode { i_in_field, i_adjoined, sqrt_minus_alpha };

/// n/2 pairs (x_j, y_j) with x_j + w y_j in E(A,-i) and x_j - w y_j in E(A,i).
/// Modes i_in_field / i_adjoined: C = A with A^2 = -I, w = i; pairs are (z, Az).
/// Mode sqrt_minus_alpha: C = B where A = sqrt(alpha) B, A^2 = -I, w = sqrt(-alpha);
/// (sqrt(alpha) A - w) z = alpha B z - w z gives pairs (alpha B z, -z).
/// omega is required exactly when w lies in the base (i_in_field, or
/// sqrt_minus_alpha with -alpha a square).
template <class T>
struct Order4Basis {
  Order4Mode mode;
  std::vector<std::pair<Vec<T>, Vec<T>>> pairs;
};

template <class T>
Order4Basis<T> eig_basis_order4(const Matrix<T>& C, Order4Mode mode, const std::optional<T>& omega,
                                const std::optional<T>& alpha = std::nullopt) {
  std::size_t n = C.rows();
  if (n % 2) fail("precondition", "odd dimension admits no A with A^2 = -I");
  Matrix<T> I = Matrix<T>::identity(n, C.one());
  T scale = C.one();
  if (mode == Order4Mode::sqrt_minus_alpha) {
    if (!alpha) fail("precondition", "alpha required");
    scale = *alpha;
  }
  if ((C * C).scaled(scale) != -I) fail("precondition", "A^2 != -I");
  bool in_base = mode == Order4Mode::i_in_field || (mode == Order4Mode::sqrt_minus_alpha && omega);
  if (in_base && !omega) fail("precondition", "root required");
  Order4Basis<T> out{mode, {}};
  IndependentSet<T> span;
  for (std::size_t j = 0; j < n && out.pairs.size() < n / 2; ++j) {
    Vec<T> z = unit_vector(n, j, C.one());
    Vec<T> x, y;
    if (mode == Order4Mode::sqrt_minus_alpha) {
      x = (C * z);
      for (auto& e : x) e = scale * e;
      y = z;
      for (auto& e : y) e = -e;
    } else {
      x = z;
      y = C * z;
    }
    if (in_base) {
      if (span.accept(axpy(x, *omega, y))) out.pairs.emplace_back(x, y);
    } else {
      if (span.independent(x)) {
        IndependentSet<T> trial = span;
        trial.accept(x);
        if (trial.independent(y)) {
          span.accept(x);
          span.accept(y);
          out.pairs.emplace_back(x, y);
        }
      }
    }
  }
  ensure(out.pairs.size() == n / 2, "could not assemble n/2 eigenvector pairs");
  return out;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace orthoinv

#endif
