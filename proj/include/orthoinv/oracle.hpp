// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force cross-check over small prime fields: O(n, F_p) for a diagonal
// form by reflection closure, exhaustive involution candidates, conjugacy
// classes by orbit search. Only meant for n <= 4, p <= 13.

#ifndef ORTHOINV_ORACLE_HPP
#define ORTHOINV_ORACLE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orthoinv/fields.hpp"
#include "orthoinv/forms.hpp"
#include "orthoinv/involutions.hpp"
#include "orthoinv/linalg.hpp"

namespace orthoinv::oracle {

inline constexpr std::size_t max_n = 4;
inline constexpr std::uint64_t max_p = 13;

using Code = std::uint64_t;

struct Small {
  std::array<std::uint8_t, 16> e{};
};

/// Matrices over F_p in a flat layout, encoded base p into 64 bits.
class Space {
 public:
  Space(std::size_t n, std::uint64_t p, std::vector<std::uint8_t> diag) : n_(n), p_(p), m_(std::move(diag)) {
    if (n < 1 || n > max_n) fail("domain", "oracle supports 1 <= n <= 4");
    if (!is_prime(p) || p == 2 || p > max_p) fail("domain", "oracle supports odd primes p <= 13");
    if (m_.size() != n) fail("domain", "form size mismatch");
    for (auto d : m_)
      if (d % p == 0) fail("domain", "degenerate form");
    for (auto d : m_) minv_.push_back(static_cast<std::uint8_t>(Residue::raw(d, p).inverse().value()));
  }

  std::size_t n() const { return n_; }
  std::uint64_t p() const { return p_; }
  const std::vector<std::uint8_t>& diag() const { return m_; }

  std::uint8_t& at(Small& a, std::size_t i, std::size_t j) const { return a.e[i * n_ + j]; }
  std::uint8_t at(const Small& a, std::size_t i, std::size_t j) const { return a.e[i * n_ + j]; }

  Code encode(const Small& a) const {
    Code c = 0;
    for (std::size_t k = 0; k < n_ * n_; ++k) c = c * p_ + a.e[k];
    return c;
  }
  Small decode(Code c) const {
    Small a;
    for (std::size_t k = n_ * n_; k-- > 0;) {
      a.e[k] = static_cast<std::uint8_t>(c % p_);
      c /= p_;
    }
    return a;
  }

  Small identity() const { return scalar(1); }
  Small scalar(std::uint64_t s) const {
    Small a;
    for (std::size_t i = 0; i < n_; ++i) at(a, i, i) = static_cast<std::uint8_t>(s % p_);
    return a;
  }
  Small mul(const Small& a, const Small& b) const {
    Small c;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n_; ++k) s += std::uint64_t(at(a, i, k)) * at(b, k, j);
        at(c, i, j) = static_cast<std::uint8_t>(s % p_);
      }
    return c;
  }
  Small neg(const Small& a) const {
    Small c;
    for (std::size_t k = 0; k < n_ * n_; ++k) c.e[k] = static_cast<std::uint8_t>((p_ - a.e[k]) % p_);
    return c;
  }
  Small scaled(const Small& a, std::uint64_t s) const {
    Small c;
    for (std::size_t k = 0; k < n_ * n_; ++k) c.e[k] = static_cast<std::uint8_t>((a.e[k] * s) % p_);
    return c;
  }
  /// M^{-1} Q^T M, the inverse of an orthogonal Q
  Small orth_inverse(const Small& q) const {
    Small c;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) at(c, i, j) = static_cast<std::uint8_t>((std::uint64_t(minv_[i]) * at(q, j, i) * m_[j]) % p_);
    return c;
  }
  /// Q^T M Q
  Small gram(const Small& q) const {
    Small c;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n_; ++k) s += std::uint64_t(at(q, k, i)) * m_[k] * at(q, k, j);
        at(c, i, j) = static_cast<std::uint8_t>(s % p_);
      }
    return c;
  }
  bool is_scalar(const Small& a) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && at(a, i, j)) return false;
        if (i == j && at(a, i, i) != at(a, 0, 0)) return false;
      }
    return true;
  }
  bool equal(const Small& a, const Small& b) const {
    for (std::size_t k = 0; k < n_ * n_; ++k)
      if (a.e[k] != b.e[k]) return false;
    return true;
  }
  Small form() const {
    Small a;
    for (std::size_t i = 0; i < n_; ++i) at(a, i, i) = m_[i];
    return a;
  }

  Matrix<Residue> to_matrix(const Small& a) const {
    Matrix<Residue> m(n_, n_, Residue::raw(0, p_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = Residue::raw(at(a, i, j), p_);
    return m;
  }
  Small from_matrix(const Matrix<Residue>& m) const {
    if (m.rows() != n_ || m.cols() != n_) fail("domain", "matrix size does not match the oracle");
    Small a;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (m(i, j).modulus() != p_) fail("domain", "modulus mismatch");
        at(a, i, j) = static_cast<std::uint8_t>(m(i, j).value());
      }
    return a;
  }

 private:
  std::size_t n_;
  std::uint64_t p_;
  std::vector<std::uint8_t> m_, minv_;
};

inline Space space_for(const FormContext<Residue>& ctx) {
  std::vector<std::uint8_t> d;
  for (auto& x : ctx.diag) d.push_back(static_cast<std::uint8_t>(x.value()));
  return Space(ctx.n, ctx.field.p, d);
}

/// |O(n, F_q)| for a nondegenerate form with determinant `det`.
inline std::uint64_t estimate_order(std::size_t n, std::uint64_t q, std::uint64_t det) {
  auto pw = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
  };
  if (n == 1) return 2;
  std::uint64_t m = n / 2;
  if (n % 2) {
    std::uint64_t r = 2 * pw(q, m * m);
    for (std::uint64_t i = 1; i <= m; ++i) r *= pw(q, 2 * i) - 1;
    return r;
  }
  // plus type when (-1)^m det is a square
  Residue d = Residue::raw(det % q, q);
  if (m % 2) d = -d;
  bool plus = d.pow((q - 1) / 2).value() == 1;
  std::uint64_t r = 2 * pw(q, m * (m - 1));
  r = plus ? r * (pw(q, m) - 1) : r * (pw(q, m) + 1);
  for (std::uint64_t i = 1; i + 1 <= m; ++i) r *= pw(q, 2 * i) - 1;
  return r;
}

inline std::uint64_t form_det(const Space& S) {
  std::uint64_t d = 1;
  for (auto x : S.diag()) d = d * x % S.p();
  return d;
}

using Progress = std::function<void(const std::string&)>;

struct Group {
  Space space;
  std::vector<Code> elements;  // BFS order from I
  std::vector<std::int8_t> det;
  std::unordered_map<Code, std::uint32_t> index;
  std::vector<Small> generators;  // reflections

  explicit Group(Space s) : space(std::move(s)) {}
  std::size_t order() const { return elements.size(); }
  Small element(std::size_t i) const { return space.decode(elements[i]); }
  bool contains(const Small& a) const { return index.count(space.encode(a)) != 0; }
};

inline Small reflection(const Space& S, const std::vector<std::uint8_t>& v) {
  std::uint64_t p = S.p(), q = 0;
  for (std::size_t i = 0; i < S.n(); ++i) q = (q + std::uint64_t(v[i]) * v[i] * S.diag()[i]) % p;
  if (q == 0) fail("domain", "isotropic vector");
  std::uint64_t c = Residue::raw(2 * Residue::raw(q, p).inverse().value() % p, p).value();
  Small r = S.identity();
  for (std::size_t i = 0; i < S.n(); ++i)
    for (std::size_t j = 0; j < S.n(); ++j) {
      std::uint64_t t = c * v[i] % p * v[j] % p * S.diag()[j] % p;
      S.at(r, i, j) = static_cast<std::uint8_t>((S.at(r, i, j) + p - t) % p);
    }
  return r;
}

/// Closure of reflections, adding a reflection as generator only when it is
/// not already generated.
inline Group generate_orthogonal_group(const Space& S, std::size_t max_elements = 2000000, const Progress& progress = {}) {
  std::uint64_t est = estimate_order(S.n(), S.p(), form_det(S));
  if (est > max_elements)
    fail("size_cap", "estimated |O| = " + std::to_string(est) + " exceeds max_elements = " + std::to_string(max_elements));
  Group G(S);
  G.elements.reserve(est);
  G.index.reserve(est * 2);
  auto add = [&](const Small& a, std::int8_t d, std::vector<std::uint32_t>& fresh) {
    Code c = S.encode(a);
    if (G.index.count(c)) return;
    if (G.elements.size() >= max_elements) fail("size_cap", "group exceeds max_elements");
    G.index.emplace(c, static_cast<std::uint32_t>(G.elements.size()));
    fresh.push_back(static_cast<std::uint32_t>(G.elements.size()));
    G.elements.push_back(c);
    G.det.push_back(d);
  };
  std::vector<std::uint32_t> fresh;
  add(S.identity(), 1, fresh);
  std::size_t n = S.n();
  std::uint64_t p = S.p(), total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 1; code < total && G.order() < est; ++code) {
    std::vector<std::uint8_t> v(n);
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<std::uint8_t>(c % p);
      c /= p;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    std::uint64_t q = 0;
    for (std::size_t i = 0; i < n; ++i) q += std::uint64_t(v[i]) * v[i] * S.diag()[i];
    if (q % p == 0) continue;
    Small r = reflection(S, v);
    if (G.contains(r)) continue;
    G.generators.push_back(r);
    fresh.clear();
    std::size_t old = G.order();
    for (std::size_t i = 0; i < old; ++i) add(S.mul(G.element(i), r), static_cast<std::int8_t>(-G.det[i]), fresh);
    std::size_t head = 0;
    while (head < fresh.size()) {
      std::uint32_t idx = fresh[head++];
      Small x = G.element(idx);
      std::int8_t dx = G.det[idx];
      for (auto& g : G.generators) add(S.mul(x, g), static_cast<std::int8_t>(-dx), fresh);
    }
    if (progress) progress("generators=" + std::to_string(G.generators.size()) + " |G|=" + std::to_string(G.order()));
  }
  ensure(G.order() == est, "closure order " + std::to_string(G.order()) + " differs from " + std::to_string(est));
  return G;
}

/// Visits every Q with Q^T M Q = lambda M, column by column.
inline void enumerate_similitudes(const Space& S, std::uint64_t lambda, const std::function<void(const Small&)>& visit) {
  std::size_t n = S.n();
  std::uint64_t p = S.p(), total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<std::vector<std::uint8_t>> vecs;
  std::vector<std::uint64_t> norms;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint8_t> v(n);
    std::uint64_t c = code, q = 0;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<std::uint8_t>(c % p);
      c /= p;
    }
    for (std::size_t i = 0; i < n; ++i) q += std::uint64_t(v[i]) * v[i] * S.diag()[i];
    vecs.push_back(v);
    norms.push_back(q % p);
  }
  std::vector<std::size_t> cols(n);
  Small cur;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == n) {
      visit(cur);
      return;
    }
    std::uint64_t want = lambda % p * S.diag()[j] % p;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      if (norms[k] != want) continue;
      const auto& v = vecs[k];
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        const auto& u = vecs[cols[i]];
        std::uint64_t s = 0;
        for (std::size_t r = 0; r < n; ++r) s += std::uint64_t(u[r]) * v[r] * S.diag()[r];
        ok = s % p == 0;
      }
      if (!ok) continue;
      cols[j] = k;
      for (std::size_t r = 0; r < n; ++r) S.at(cur, r, j) = v[r];
      rec(j + 1);
    }
  };
  rec(0);
}

/// Independent count of |O| by column backtracking.
inline std::uint64_t direct_order_count(const Space& S) {
  std::uint64_t c = 0;
  enumerate_similitudes(S, 1, [&](const Small&) { ++c; });
  return c;
}

/// Coefficient matrices B of normalized involutions of the given type:
/// types 1/3 are A in O with A^2 = +-I; types 2/4 are B with
/// B^T M B = M / delta and delta B^2 = +-I (A = sqrt(delta) B).
inline std::vector<Small> enumerate_type_candidates(const Group& G, int type) {
  const Space& S = G.space;
  std::uint64_t p = S.p();
  std::vector<Small> out;
  Small I = S.identity(), mI = S.neg(I);
  if (type == 1 || type == 3) {
    const Small& want = type == 1 ? I : mI;
    for (std::size_t i = 0; i < G.order(); ++i) {
      Small a = G.element(i);
      if (S.is_scalar(a)) continue;
      if (S.equal(S.mul(a, a), want)) out.push_back(a);
    }
  } else if (type == 2 || type == 4) {
    std::uint64_t delta = least_nonsquare(p);
    std::uint64_t lambda = Residue::raw(delta, p).inverse().value();
    Small want = type == 2 ? I : mI;
    enumerate_similitudes(S, lambda, [&](const Small& b) {
      if (S.equal(S.scaled(S.mul(b, b), delta), want)) out.push_back(b);
    });
  } else {
    fail("domain", "type must be 1..4");
  }
  return out;
}

struct ClassCount {
  int type = 0;
  std::size_t candidates = 0;
  std::size_t classes = 0;
  std::vector<Small> representatives;  // smallest code in each orbit
  std::vector<std::size_t> orbit_sizes;
};

/// Orbits of the candidate set under conjugation by O and B -> -B.
inline ClassCount count_classes_bruteforce(const Group& G, int type) {
  const Space& S = G.space;
  std::vector<Small> cand = enumerate_type_candidates(G, type);
  std::unordered_set<Code> pool;
  for (auto& c : cand) pool.insert(S.encode(c));
  std::vector<std::pair<Small, Small>> gens;
  for (auto& g : G.generators) gens.emplace_back(g, S.orth_inverse(g));
  ClassCount out;
  out.type = type;
  out.candidates = cand.size();
  std::unordered_set<Code> seen;
  for (auto& c : cand) {
    Code c0 = S.encode(c);
    if (seen.count(c0)) continue;
    std::vector<Small> queue = {c};
    seen.insert(c0);
    Code best = c0;
    std::size_t head = 0;
    while (head < queue.size()) {
      Small x = queue[head++];
      std::vector<Small> nb = {S.neg(x)};
      for (auto& [g, gi] : gens) nb.push_back(S.mul(S.mul(gi, x), g));
      for (auto& y : nb) {
        Code cy = S.encode(y);
        ensure(pool.count(cy) != 0, "candidate set not closed under conjugation");
        if (seen.insert(cy).second) {
          queue.push_back(y);
          best = std::min(best, cy);
        }
      }
    }
    out.representatives.push_back(S.decode(best));
    out.orbit_sizes.push_back(queue.size());
  }
  out.classes = out.representatives.size();
  return out;
}

/// First Q (in group order) with Q^{-1} A Q = B, or = -B when allowed.
inline std::optional<Small> conjugacy_isomorphic(const Group& G, const Small& A, const Small& B, bool special_only,
                                                bool allow_negation = true) {
  const Space& S = G.space;
  Small nB = S.neg(B);
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (special_only && G.det[i] != 1) continue;
    Small q = G.element(i);
    Small c = S.mul(S.mul(S.orth_inverse(q), A), q);
    if (S.equal(c, B) || (allow_negation && S.equal(c, nB))) return q;
  }
  return std::nullopt;
}

inline Small random_element(const Group& G, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, G.order() - 1);
  return G.element(d(rng));
}

}  // namespace orthoinv::oracle

#endif
