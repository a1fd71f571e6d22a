// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact scalars (rationals, residues mod p, one quadratic extension layer)
// and square-class / Hilbert / Hasse predicates for the five field kinds.

#ifndef ORTHOINV_FIELDS_HPP
#define ORTHOINV_FIELDS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthoinv/errors.hpp"

namespace orthoinv {

using Rational = mpq_class;

// ---------------------------------------------------------------------------
// integer helpers

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class z(std::to_string(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

inline mpz_class to_mpz(std::uint64_t v) { return mpz_class(std::to_string(v)); }

/// Strips all factors p from n, returns how many.
inline unsigned strip(mpz_class& n, std::uint64_t p) {
  if (n == 0) fail("domain", "valuation of zero");
  unsigned v = 0;
  mpz_class P = to_mpz(p);
  while (mpz_divisible_p(n.get_mpz_t(), P.get_mpz_t())) {
    n /= P;
    ++v;
  }
  return v;
}

/// Legendre symbol (a/p), p odd prime; 0 when p | a.
inline int legendre(const mpz_class& a, std::uint64_t p) {
  mpz_class P = to_mpz(p);
  mpz_class r = a % P;
  if (r < 0) r += P;
  return mpz_legendre(r.get_mpz_t(), P.get_mpz_t());
}

/// Least positive nonsquare mod an odd prime p.
inline std::uint64_t least_nonsquare(std::uint64_t p) {
  for (std::uint64_t d = 2; d < p; ++d)
    if (legendre(to_mpz(d), p) == -1) return d;
  fail("domain", "no nonsquare mod " + std::to_string(p));
}

/// Prime factorization of |n| (n != 0). Trial division to 10^6, then a
/// primality test on the cofactor. Large composite cofactors are refused.
inline std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
  if (n == 0) fail("domain", "factorization of zero");
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, unsigned>> out;
  for (unsigned long d = 2; d <= 1000000UL; d += (d == 2 ? 1 : 2)) {
    mpz_class D(d);
    if (D * D > n) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= D;
      ++e;
    }
    if (e) out.emplace_back(D, e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
      out.emplace_back(n, 1);
    } else if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      if (mpz_probab_prime_p(r.get_mpz_t(), 30) == 0)
        throw unsupported_error("integer too large to factor: " + n.get_str());
      out.emplace_back(r, 2);
    } else {
      throw unsupported_error("integer too large to factor: " + n.get_str());
    }
  }
  return out;
}

/// Signed squarefree part of a nonzero integer.
inline mpz_class squarefree_part(const mpz_class& n) {
  mpz_class out = n < 0 ? -1 : 1;
  for (auto& [q, e] : factorize(n))
    if (e % 2) out *= q;
  return out;
}

// ---------------------------------------------------------------------------
// residues mod p

class Residue {
 public:
  Residue() = default;
  Residue(std::int64_t v, std::uint64_t p) : p_(p) {
    if (p < 2) fail("domain", "modulus must be >= 2");
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    v_ = static_cast<std::uint64_t>(r);
  }
  static Residue raw(std::uint64_t v, std::uint64_t p) {
    Residue r;
    r.v_ = v % p;
    r.p_ = p;
    return r;
  }
  static Residue from_rational(const Rational& x, std::uint64_t p) {
    mpz_class P = to_mpz(p);
    mpz_class n = x.get_num() % P, d = x.get_den() % P;
    if (n < 0) n += P;
    if (d == 0) fail("domain", "denominator divisible by " + std::to_string(p));
    Residue num = raw(n.get_ui(), p), den = raw(d.get_ui(), p);
    return num / den;
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Residue operator+(const Residue& o) const {
    same(o);
    return raw((v_ + o.v_) % p_, p_);
  }
  Residue operator-(const Residue& o) const {
    same(o);
    return raw((v_ + p_ - o.v_) % p_, p_);
  }
  Residue operator-() const { return raw((p_ - v_) % p_, p_); }
  Residue operator*(const Residue& o) const {
    same(o);
    unsigned __int128 t = static_cast<unsigned __int128>(v_) * o.v_;
    return raw(static_cast<std::uint64_t>(t % p_), p_);
  }
  Residue pow(std::uint64_t e) const {
    Residue r = raw(1, p_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }
  Residue inverse() const {
    if (v_ == 0) fail("domain", "inverse of zero residue");
    return pow(p_ - 2);
  }
  Residue operator/(const Residue& o) const { return *this * o.inverse(); }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }
  bool operator==(const Residue& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Residue& o) const { return !(*this == o); }

 private:
  void same(const Residue& o) const {
    if (p_ != o.p_) fail("domain", "residues with different moduli");
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

// ---------------------------------------------------------------------------
// uniform scalar helpers used by the generic code

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int(const Rational&, long v) { return Rational(v); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x) {
  if (is_zero(x)) fail("domain", "inverse of zero");
  return Rational(1) / x;
}
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Residue zero_like(const Residue& x) { return Residue::raw(0, x.modulus()); }
inline Residue one_like(const Residue& x) { return Residue::raw(1, x.modulus()); }
inline Residue from_int(const Residue& x, long v) { return Residue(v, x.modulus()); }
inline bool is_zero(const Residue& x) { return x.value() == 0; }
inline Residue inverse(const Residue& x) { return x.inverse(); }
inline std::string to_string(const Residue& x) { return std::to_string(x.value()); }

inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den().get_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den().get_mpz_t());
  return Rational(n, d);
}

/// Tonelli-Shanks; returns the smaller of the two roots.
inline std::optional<Residue> exact_sqrt(const Residue& x) {
  std::uint64_t p = x.modulus();
  if (x.value() == 0) return x;
  if (x.pow((p - 1) / 2).value() != 1) return std::nullopt;
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Residue z = Residue::raw(least_nonsquare(p), p);
  Residue c = z.pow(q), t = x.pow(q), r = x.pow((q + 1) / 2);
  std::uint64_t m = s;
  while (t.value() != 1) {
    std::uint64_t i = 0;
    Residue tt = t;
    while (tt.value() != 1) {
      tt = tt * tt;
      ++i;
    }
    Residue b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  if (p - r.value() < r.value()) r = -r;
  return r;
}

/// (a, b) with a^2 + b^2 = delta mod p, smallest a first. Exhaustive.
inline std::pair<Residue, Residue> find_two_square_rep(const Residue& delta) {
  std::uint64_t p = delta.modulus();
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b) {
      Residue A = Residue::raw(a, p), B = Residue::raw(b, p);
      if (A * A + B * B == delta) return {A, B};
    }
  fail("domain", "no two-square representation of " + std::to_string(delta.value()));
}

// ---------------------------------------------------------------------------
// a + b*sqrt(alpha)

/// Element of k[sqrt(alpha)]. alpha == 0 means "not yet tagged"; it is adopted
/// from the other operand. Products of two irrational parts need a tag.
template <class K>
class Quad {
 public:
  Quad() = default;
  Quad(K a, K b, K alpha) : a_(std::move(a)), b_(std::move(b)), alpha_(std::move(alpha)) {}
  static Quad embed(const K& a) { return Quad(a, zero_like(a), zero_like(a)); }
  static Quad embed(const K& a, const K& alpha) { return Quad(a, zero_like(a), alpha); }

  const K& a() const { return a_; }
  const K& b() const { return b_; }
  const K& alpha() const { return alpha_; }
  bool tagged() const { return !is_zero(alpha_); }
  bool in_base() const { return is_zero(b_); }

  Quad conj() const { return Quad(a_, -b_, alpha_); }
  K norm() const { return a_ * a_ - alpha_ * b_ * b_; }

  Quad operator+(const Quad& o) const { return Quad(a_ + o.a_, b_ + o.b_, join(o)); }
  Quad operator-(const Quad& o) const { return Quad(a_ - o.a_, b_ - o.b_, join(o)); }
  Quad operator-() const { return Quad(-a_, -b_, alpha_); }
  Quad operator*(const Quad& o) const {
    K al = join(o);
    K bb = b_ * o.b_;
    if (!is_zero(bb) && is_zero(al)) fail("domain", "product of untagged irrational parts");
    return Quad(a_ * o.a_ + al * bb, a_ * o.b_ + b_ * o.a_, al);
  }
  Quad inverse() const {
    if (in_base()) {
      if (is_zero(a_)) fail("domain", "inverse of zero");
      return Quad(orthoinv::inverse(a_), b_, alpha_);
    }
    K n = norm();
    if (is_zero(n)) fail("domain", "zero divisor (alpha is a square)");
    K ni = orthoinv::inverse(n);
    return Quad(a_ * ni, -b_ * ni, alpha_);
  }
  Quad operator/(const Quad& o) const { return *this * o.inverse(); }
  Quad& operator+=(const Quad& o) { return *this = *this + o; }
  Quad& operator-=(const Quad& o) { return *this = *this - o; }
  Quad& operator*=(const Quad& o) { return *this = *this * o; }
  bool operator==(const Quad& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const Quad& o) const { return !(*this == o); }

 private:
  K join(const Quad& o) const {
    if (tagged() && o.tagged() && alpha_ != o.alpha_) fail("domain", "mixed quadratic extensions");
    return tagged() ? alpha_ : o.alpha_;
  }
  K a_{}, b_{}, alpha_{};
};

template <class K>
Quad<K> zero_like(const Quad<K>& x) {
  return Quad<K>(zero_like(x.a()), zero_like(x.a()), x.alpha());
}
template <class K>
Quad<K> one_like(const Quad<K>& x) {
  return Quad<K>(one_like(x.a()), zero_like(x.a()), x.alpha());
}
template <class K>
Quad<K> from_int(const Quad<K>& x, long v) {
  return Quad<K>(from_int(x.a(), v), zero_like(x.a()), x.alpha());
}
template <class K>
bool is_zero(const Quad<K>& x) {
  return is_zero(x.a()) && is_zero(x.b());
}
template <class K>
Quad<K> inverse(const Quad<K>& x) {
  return x.inverse();
}
template <class K>
Quad<K> ext_conjugate(const Quad<K>& z) {
  return z.conj();
}
template <class K>
std::string to_string(const Quad<K>& x) {
  if (x.in_base()) return to_string(x.a());
  return to_string(x.a()) + "+" + to_string(x.b()) + "*sqrt(" + to_string(x.alpha()) + ")";
}

// ---------------------------------------------------------------------------
// field descriptors

enum class FieldKind { rational, real, finite, padic, closed };

struct FieldDesc {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;  // finite / padic prime
  std::uint64_t q = 0;  // finite: prime power order (census only when q != p)

  static FieldDesc rationals() { return {FieldKind::rational, 0, 0}; }
  static FieldDesc reals() { return {FieldKind::real, 0, 0}; }
  static FieldDesc closed() { return {FieldKind::closed, 0, 0}; }
  static FieldDesc finite(std::uint64_t p, std::uint64_t q = 0) {
    if (!is_prime(p) || p == 2) fail("domain", "finite field needs an odd prime, got " + std::to_string(p));
    if (q == 0) q = p;
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1) fail("domain", std::to_string(q) + " is not a power of " + std::to_string(p));
    return {FieldKind::finite, p, q};
  }
  static FieldDesc padic(std::uint64_t p) {
    if (!is_prime(p)) fail("domain", "p-adic field needs a prime, got " + std::to_string(p));
    return {FieldKind::padic, p, 0};
  }

  bool arithmetic() const { return kind != FieldKind::finite || q == p; }

  std::string name() const {
    switch (kind) {
      case FieldKind::rational: return "Q";
      case FieldKind::real: return "R";
      case FieldKind::closed: return "closed";
      case FieldKind::padic: return "Qp:" + std::to_string(p);
      case FieldKind::finite:
        return q == p ? "Fp:" + std::to_string(p) : "Fq:" + std::to_string(q);
    }
    return "?";
  }

  /// Accepts Q, R, closed, Fp:<p>, Fq:<q>, Qp:<p>.
  static FieldDesc parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "R") return reals();
    if (s == "closed") return closed();
    auto num = [&](std::size_t at) -> std::uint64_t {
      std::string t = s.substr(at);
      if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
        fail("parse", "bad field '" + s + "'");
      return std::stoull(t);
    };
    if (s.rfind("Fp:", 0) == 0) return finite(num(3));
    if (s.rfind("Qp:", 0) == 0) return padic(num(3));
    if (s.rfind("Fq:", 0) == 0) {
      std::uint64_t q = num(3), p = 0;
      for (std::uint64_t d = 2; d <= q; ++d)
        if (q % d == 0) {
          p = d;
          break;
        }
      return finite(p, q);
    }
    fail("parse", "bad field '" + s + "'");
  }

  bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p && q == o.q; }
  bool operator!=(const FieldDesc& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// square classes

namespace detail {

/// x = p^v * (U / square) with U an integer prime to p. Returns (v, U).
inline std::pair<long, mpz_class> split_unit(const Rational& x, std::uint64_t p) {
  mpz_class n = x.get_num(), d = x.get_den();
  long v = static_cast<long>(strip(n, p)) - static_cast<long>(strip(d, p));
  return {v, n * d};
}

inline long mod8(const mpz_class& u) {
  mpz_class r = u % 8;
  if (r < 0) r += 8;
  return r.get_si();
}

}  // namespace detail

/// Canonical representative of x modulo squares of F.
inline Rational square_class(const Rational& x, const FieldDesc& F) {
  if (is_zero(x)) fail("domain", "square class of zero");
  switch (F.kind) {
    case FieldKind::rational:
      return Rational(squarefree_part(x.get_num() * x.get_den()));
    case FieldKind::real:
      return Rational(sgn(x) > 0 ? 1 : -1);
    case FieldKind::closed:
      return Rational(1);
    case FieldKind::finite: {
      if (!F.arithmetic()) throw unsupported_error("square classes over F_q with q not prime");
      Residue r = Residue::from_rational(x, F.p);
      if (is_zero(r)) fail("domain", "square class of zero");
      return Rational(legendre(to_mpz(r.value()), F.p) == 1 ? 1 : static_cast<long>(least_nonsquare(F.p)));
    }
    case FieldKind::padic: {
      auto [v, u] = detail::split_unit(x, F.p);
      bool odd = (v % 2) != 0;
      if (F.p == 2) {
        static const long unit[8] = {0, 1, 0, 3, 0, -3, 0, -1};
        long c = unit[detail::mod8(u)];
        return Rational(odd ? 2 * c : c);
      }
      long base = legendre(u, F.p) == 1 ? 1 : static_cast<long>(least_nonsquare(F.p));
      Rational rep(base);
      if (odd) rep *= Rational(to_mpz(F.p));
      return rep;
    }
  }
  fail("domain", "unknown field kind");
}

inline Residue square_class(const Residue& x, const FieldDesc& F) {
  if (F.kind != FieldKind::finite || F.p != x.modulus())
    fail("domain", "residue classified outside its prime field");
  if (is_zero(x)) fail("domain", "square class of zero");
  if (x.pow((x.modulus() - 1) / 2).value() == 1) return one_like(x);
  return Residue::raw(least_nonsquare(x.modulus()), x.modulus());
}

template <class K>
bool is_square(const K& x, const FieldDesc& F) {
  return square_class(x, F) == one_like(x);
}

/// Field in which the scalar type itself does arithmetic.
inline FieldDesc arithmetic_field(const Rational&) { return FieldDesc::rationals(); }
inline FieldDesc arithmetic_field(const Residue& x) { return FieldDesc::finite(x.modulus()); }

// ---------------------------------------------------------------------------
// Hilbert and Hasse symbols over Q_p

inline int hilbert_symbol(const Rational& a, const Rational& b, std::uint64_t p) {
  if (is_zero(a) || is_zero(b)) fail("domain", "hilbert symbol of zero");
  if (!is_prime(p)) fail("domain", std::to_string(p) + " is not prime");
  auto [al, u] = detail::split_unit(a, p);
  auto [be, v] = detail::split_unit(b, p);
  long A = ((al % 2) + 2) % 2, B = ((be % 2) + 2) % 2;
  if (p == 2) {
    long u8 = detail::mod8(u), v8 = detail::mod8(v);
    auto eps = [](long w) { return (w % 4 == 3) ? 1L : 0L; };
    auto omg = [](long w) { return (w == 3 || w == 5) ? 1L : 0L; };
    long e = eps(u8) * eps(v8) + A * omg(v8) + B * omg(u8);
    return (e % 2) ? -1 : 1;
  }
  int s = 1;
  if (A && B && ((p - 1) / 2) % 2 == 1) s = -s;
  if (B) s *= legendre(u, p);
  if (A) s *= legendre(v, p);
  return s;
}

/// inclusive: prod_{i<=j} (d_i,d_j); strict: prod_{i<j}; jones: (-1,-1)_p * inclusive.
/// The three differ only by a factor depending on (det, n, p) and decide
/// congruence identically.
enum class HasseConvention { inclusive, strict, jones };

inline int hasse_symbol(const std::vector<Rational>& d, std::uint64_t p,
                        HasseConvention conv = HasseConvention::inclusive) {
  int s = 1;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = (conv == HasseConvention::strict ? i + 1 : i); j < d.size(); ++j)
      s *= hilbert_symbol(d[i], d[j], p);
  if (conv == HasseConvention::jones) s *= hilbert_symbol(Rational(-1), Rational(-1), p);
  return s;
}

inline std::string convention_name(HasseConvention c) {
  switch (c) {
    case HasseConvention::inclusive: return "inclusive";
    case HasseConvention::strict: return "strict";
    case HasseConvention::jones: return "jones";
  }
  return "?";
}

}  // namespace orthoinv

#endif
