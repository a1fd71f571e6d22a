// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON reading and writing. Scalars are strings ("3", "-1/2"; residues in
// decimal); extension scalars are {"a": .., "b": ..} meaning a + b sqrt(alpha)
// with alpha given once per matrix. Needs nlohmann/json on the include path.

#ifndef ORTHOINV_IO_HPP
#define ORTHOINV_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"
#include "orthoinv/census.hpp"
#include "orthoinv/fields.hpp"
#include "orthoinv/forms.hpp"
#include "orthoinv/involutions.hpp"
#include "orthoinv/isomorphy.hpp"
#include "orthoinv/linalg.hpp"

namespace orthoinv::io {

using json = nlohmann::json;

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("io", "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail("parse", path + ": " + e.what());
  }
}

// --- scalars ---------------------------------------------------------------

inline Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail("parse", "scalar must be a string or an integer, got " + j.dump());
  std::string s = j.get<std::string>();
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) fail("parse", "bad rational '" + s + "'");
  if (r.get_den() == 0) fail("parse", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Residue parse_residue(const json& j, std::uint64_t p) {
  Rational r = parse_rational(j);
  return Residue::from_rational(r, p);
}

template <class K>
K parse_scalar(const json& j, const FieldDesc& F) {
  if constexpr (std::is_same_v<K, Residue>) {
    if (F.kind != FieldKind::finite) fail("domain", "residue scalar outside a finite field");
    return parse_residue(j, F.p);
  } else {
    return parse_rational(j);
  }
}

inline json to_json(const Rational& x) { return x.get_str(); }
inline json to_json(const Residue& x) { return std::to_string(x.value()); }

template <class K>
json to_json(const Quad<K>& x) {
  if (x.in_base()) return to_json(x.a());
  return json{{"a", to_json(x.a())}, {"b", to_json(x.b())}};
}

template <class T>
json to_json(const Vec<T>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(to_json(x));
  return a;
}

template <class T>
json entries_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

template <class K>
json to_json(const Matrix<K>& m) {
  return json{{"n", m.rows()}, {"alpha", nullptr}, {"entries", entries_json(m)}};
}

template <class K>
json to_json(const Matrix<Quad<K>>& m) {
  json alpha = nullptr;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).in_base()) alpha = to_json(m(i, j).alpha());
  return json{{"n", m.rows()}, {"alpha", alpha}, {"entries", entries_json(m)}};
}

// --- matrices ----------------------------------------------------------------

/// Accepts nested rows or a flat row-major list of n*n entries.
inline std::vector<std::vector<json>> entry_rows(const json& entries, std::size_t n) {
  if (!entries.is_array()) fail("parse", "entries must be an array");
  std::vector<std::vector<json>> rows;
  if (!entries.empty() && entries[0].is_array()) {
    for (auto& r : entries) {
      if (!r.is_array()) fail("parse", "ragged entries");
      rows.emplace_back(r.begin(), r.end());
    }
  } else {
    if (n == 0 || entries.size() != n * n) fail("parse", "flat entries need n*n values");
    for (std::size_t i = 0; i < n; ++i) rows.emplace_back(entries.begin() + i * n, entries.begin() + (i + 1) * n);
  }
  if (n == 0) n = rows.size();
  if (rows.size() != n) fail("parse", "entries have " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  for (auto& r : rows)
    if (r.size() != n) fail("parse", "matrix is not square");
  return rows;
}

template <class K>
Matrix<K> parse_matrix(const json& entries, const FieldDesc& F, std::size_t n = 0) {
  auto rows = entry_rows(entries, n);
  std::vector<std::vector<K>> out;
  for (auto& r : rows) {
    std::vector<K> v;
    for (auto& x : r) v.push_back(parse_scalar<K>(x, F));
    out.push_back(v);
  }
  return Matrix<K>::from_rows(out);
}

/// {"n", "alpha", "entries"}; entries may be {"a","b"} objects when alpha is set.
template <class K>
Matrix<Quad<K>> parse_quad_matrix(const json& j, const FieldDesc& F) {
  std::size_t n = j.value("n", std::size_t(0));
  const K one = parse_scalar<K>(json("1"), F);
  K zero = zero_like(one);
  K alpha = j.contains("alpha") && !j["alpha"].is_null() ? parse_scalar<K>(j["alpha"], F) : zero;
  auto rows = entry_rows(j.at("entries"), n);
  std::vector<std::vector<Quad<K>>> out;
  for (auto& r : rows) {
    std::vector<Quad<K>> v;
    for (auto& x : r) {
      if (x.is_object()) {
        if (is_zero(alpha)) fail("parse", "extension entry without alpha");
        v.emplace_back(parse_scalar<K>(x.at("a"), F), parse_scalar<K>(x.at("b"), F), alpha);
      } else {
        v.emplace_back(parse_scalar<K>(x, F), zero, alpha);
      }
    }
    out.push_back(v);
  }
  return Matrix<Quad<K>>::from_rows(out);
}

// --- contexts ------------------------------------------------------------------

inline bool field_is_finite(const json& ctx) {
  return FieldDesc::parse(ctx.at("field").get<std::string>()).kind == FieldKind::finite;
}

/// {"n", "field", "diag", ["gram"]}
template <class K>
FormContext<K> parse_context(const json& j) {
  FieldDesc F = FieldDesc::parse(j.at("field").get<std::string>());
  if (!F.arithmetic()) throw unsupported_error("matrices over F_q with q not prime");
  if (j.contains("gram") && !j["gram"].is_null()) {
    auto G = parse_matrix<K>(j["gram"], F, j.value("n", std::size_t(0)));
    return make_context_from_gram(F, G);
  }
  std::vector<K> d;
  for (auto& x : j.at("diag")) d.push_back(parse_scalar<K>(x, F));
  if (j.contains("n") && j["n"].get<std::size_t>() != d.size()) fail("parse", "n does not match diag length");
  return make_context(F, d);
}

template <class K>
json to_json(const FormContext<K>& c) {
  json j{{"n", c.n}, {"field", c.field.name()}, {"diag", to_json(c.diag)}, {"friendly", c.friendly()}};
  if (c.gram) j["gram"] = entries_json(*c.gram);
  if (c.transform) j["transform"] = entries_json(*c.transform);
  if (c.friendliness.failing_pair)
    j["unfriendly_pair"] = {c.friendliness.failing_pair->first, c.friendliness.failing_pair->second};
  return j;
}

/// "standard" or "diag:1,1,2"
template <class K>
FormContext<K> context_from_flags(const FieldDesc& F, const std::string& form, std::size_t n) {
  K one = parse_scalar<K>(json("1"), F);
  if (form == "standard") {
    if (n == 0) fail("parse", "--form standard needs --n");
    return standard_context(F, n, one);
  }
  if (form.rfind("diag:", 0) != 0) fail("parse", "--form must be standard or diag:<csv>");
  std::vector<K> d;
  std::stringstream ss(form.substr(5));
  std::string item;
  while (std::getline(ss, item, ',')) d.push_back(parse_scalar<K>(json(item), F));
  if (n && d.size() != n) fail("parse", "--n does not match the diag length");
  return make_context(F, d);
}

// --- involutions -------------------------------------------------------------

/// {"ctx", "alpha", "coeff"}: A = sqrt(alpha) coeff; alpha null or "1" means
/// A = coeff. {"ctx", "matrix": {...}} gives A directly.
template <class K>
NormalizedInvolution<K> parse_involution(const json& j, const FormContext<K>& ctx) {
  const FieldDesc& F = ctx.field;
  if (j.contains("matrix")) return normalize_inner(parse_quad_matrix<K>(j["matrix"], F), ctx);
  auto C = parse_matrix<K>(j.at("coeff"), F, ctx.n);
  if (!j.contains("alpha") || j["alpha"].is_null()) return normalize_inner(C, ctx);
  return normalize_inner(parse_scalar<K>(j["alpha"], F), C, ctx);
}

template <class K>
json to_json(const NormalizedInvolution<K>& inv) {
  json j{{"type", inv.type},
         {"epsilon", inv.epsilon},
         {"alpha", inv.has_root() ? to_json(inv.alpha) : json(nullptr)},
         {"folded", inv.folded},
         {"scale", to_json(inv.scale)},
         {"coeff", entries_json(inv.B)},
         {"ctx", to_json(inv.ctx)}};
  if (inv.has_root()) j["alpha_class"] = to_json(square_class(inv.alpha, inv.ctx.field));
  return j;
}

template <class K>
json type_data_json(const NormalizedInvolution<K>& inv) {
  switch (inv.type) {
    case 1: {
      auto d = decompose_type1(inv);
      return {{"X", to_json(d.X)}, {"s", d.s}, {"t", d.t}, {"X1", to_json(d.X1)}, {"X2", to_json(d.X2)},
              {"flipped", d.flipped}};
    }
    case 2: {
      auto d = decompose_type2(inv);
      return {{"X", to_json(d.X)}, {"alpha", to_json(d.alpha)}, {"X1", to_json(d.X1)}, {"X2", to_json(d.X2)}};
    }
    case 3: {
      auto d = decompose_type3(inv);
      json j{{"case", to_string(d.kase)}, {"U", to_json(d.U)}, {"U1", to_json(d.U1)}};
      if (d.X) j["X"] = to_json(*d.X), j["X1"] = to_json(d.X1);
      if (d.omega) j["omega"] = to_json(*d.omega);
      return j;
    }
    case 4: {
      auto d = decompose_type4(inv);
      json j{{"case", to_string(d.kase)}, {"alpha", to_json(d.alpha)}, {"U", to_json(d.U)}, {"U1", to_json(d.U1)}};
      if (d.X) j["X"] = to_json(*d.X), j["X1"] = to_json(d.X1);
      if (d.lambda) j["lambda"] = to_json(*d.lambda);
      return j;
    }
  }
  fail("structure", "unknown type");
}

inline json to_json(const CongruenceInvariant& c) {
  json j{{"dim", c.dim}, {"det_class", c.det_class}};
  if (c.signature) j["signature"] = {c.signature->first, c.signature->second};
  json h = json::object();
  for (auto& [p, v] : c.hasse) h[std::to_string(p)] = v;
  if (!c.hasse.empty()) j["hasse"] = h;
  return j;
}

template <class K>
json to_json(const IsomorphyVerdict<K>& v) {
  json inv = json::array();
  for (auto& c : v.certificates) inv.push_back({{"label", c.label}, {"first", to_json(c.first)}, {"second", to_json(c.second)}});
  json j{{"isomorphic", v.isomorphic}, {"route", to_string(v.route)}, {"group", to_string(v.group)}, {"invariants", inv}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  if (v.witness) j["witness_sign"] = v.witness_sign;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

// --- census ------------------------------------------------------------------

inline json to_json(const ClassBounds& b) {
  json j{{"n", b.n}, {"field", b.field.name()}, {"C1", b.c1}, {"C2", b.c2}, {"C3", b.c3}, {"C4", b.c4}};
  if (b.real_c1_closed) j["C1_closed_form"] = *b.real_c1_closed;
  if (b.real_c2_closed) j["C2_closed_form"] = *b.real_c2_closed;
  return j;
}

inline json to_json(const QpTableRow& r) {
  return {{"X1", to_json(r.X1)}, {"X2", to_json(r.X2)}, {"det_class", to_json(r.det_class)},
          {"c1", r.c1}, {"c2", r.c2}, {"realizable", r.realizable}};
}

inline json to_json(const Q2Cell& c) { return {{"det_class", to_json(c.det_class)}, {"c", c.c}, {"diag", to_json(c.diag)}}; }

}  // namespace orthoinv::io

#endif
