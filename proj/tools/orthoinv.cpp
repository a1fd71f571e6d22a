// Copyright 2026 The orthoinv Authors
// SPDX-License-Identifier: Apache-2.0
//
// orthoinv: command-line front end. Reports are JSON on stdout (or --out),
// keys sorted, two-space indent. Exit codes: 0 ok, 1 parse/IO, 2 precondition
// or unsupported, 3 internal invariant.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orthoinv/census.hpp"
#include "orthoinv/io.hpp"
#include "orthoinv/isomorphy.hpp"
#include "orthoinv/oracle.hpp"
#include "orthoinv/selfcheck.hpp"

using json = nlohmann::json;
using namespace orthoinv;

namespace {

struct Flags {
  std::string field, form = "standard", group = "O", out, hasse = "inclusive", variant = "standard";
  std::size_t n = 0;
  int type = 0;
  std::uint64_t p = 0;
  bool count_classes = false;
  std::size_t max_elements = 2000000;
  std::vector<std::string> files;
};

void emit(const json& j, const Flags& f) {
  std::string s = j.dump(2) + "\n";
  if (f.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream o(f.out, std::ios::binary);
  if (!o) fail("io", "cannot write '" + f.out + "'");
  o << s;
}

HasseConvention parse_hasse(const std::string& s) {
  if (s == "inclusive") return HasseConvention::inclusive;
  if (s == "strict") return HasseConvention::strict;
  if (s == "jones") return HasseConvention::jones;
  fail("parse", "--hasse must be inclusive, strict or jones");
}

// An involution file may carry its own "ctx"; otherwise --field/--form/--n apply.
struct Input {
  json doc;
  FieldDesc field;
};

Input load(const std::string& path, const Flags& f) {
  Input in{io::read_file(path), FieldDesc::rationals()};
  if (in.doc.contains("ctx"))
    in.field = FieldDesc::parse(in.doc["ctx"].at("field").get<std::string>());
  else if (!f.field.empty())
    in.field = FieldDesc::parse(f.field);
  else
    fail("parse", path + ": no \"ctx\" and no --field");
  return in;
}

template <class K>
FormContext<K> context_of(const Input& in, const Flags& f) {
  if (in.doc.contains("ctx")) return io::parse_context<K>(in.doc["ctx"]);
  std::size_t n = f.n;
  if (!n && in.doc.contains("coeff")) n = in.doc["coeff"].size();
  return io::context_from_flags<K>(in.field, f.form, n);
}

template <class F>
auto dispatch(const FieldDesc& field, F&& body) {
  if (field.kind == FieldKind::finite) {
    if (!field.arithmetic()) throw unsupported_error("matrices over F_q with q not prime");
    return body(Residue(0, field.p));
  }
  return body(Rational(0));
}

int cmd_classify(const Flags& f) {
  Input in = load(f.files.at(0), f);
  json out = dispatch(in.field, [&](auto tag) {
    using K = decltype(tag);
    auto ctx = context_of<K>(in, f);
    auto inv = io::parse_involution<K>(in.doc, ctx);
    return json{{"involution", io::to_json(inv)}, {"type", inv.type}, {"type_data", io::type_data_json(inv)}};
  });
  emit(out, f);
  return 0;
}

// Brute-force SO (or O) conjugacy for the coefficient matrices.
json oracle_verdict(const NormalizedInvolution<Residue>& a, const NormalizedInvolution<Residue>& b, Group g,
                    const json& o_level) {
  auto S = oracle::space_for(a.ctx);
  auto G = oracle::generate_orthogonal_group(S);
  auto w = oracle::conjugacy_isomorphic(G, S.from_matrix(a.B), S.from_matrix(b.B), g == Group::SO);
  json j{{"isomorphic", w.has_value()}, {"route", "oracle"}, {"group", to_string(g)},
         {"invariants", o_level.at("invariants")}, {"o_level", o_level.at("isomorphic")},
         {"group_order", G.order()}};
  j["witness"] = w ? io::to_json(S.to_matrix(*w)) : json(nullptr);
  if (w) {
    auto Q = S.to_matrix(*w);
    j["witness_sign"] = inverse(Q) * a.B * Q == b.B ? 1 : -1;
  }
  return j;
}

int cmd_isomorphic(const Flags& f) {
  if (f.files.size() != 2) fail("parse", "isomorphic needs two files");
  Input ia = load(f.files[0], f), ib = load(f.files[1], f);
  Group g = parse_group(f.group);
  json out = dispatch(ia.field, [&](auto tag) {
    using K = decltype(tag);
    auto a = io::parse_involution<K>(ia.doc, context_of<K>(ia, f));
    auto b = io::parse_involution<K>(ib.doc, context_of<K>(ib, f));
    if (g == Group::O || a.type == 1 || a.type != b.type) return io::to_json(isomorphic(a, b, g));
    if constexpr (std::is_same_v<K, Residue>) {
      auto o = io::to_json(isomorphic(a, b, Group::O));
      if (a.ctx.n <= oracle::max_n) return oracle_verdict(a, b, g, o);
    }
    return io::to_json(isomorphic(a, b, g));  // throws unsupported
  });
  emit(out, f);
  return 0;
}

int cmd_census(const Flags& f) {
  if (f.field.empty() || !f.n) fail("parse", "census needs --field and --n");
  FieldDesc F = FieldDesc::parse(f.field);
  json j{{"bounds", io::to_json(class_bounds(f.n, F))}};
  json tau2 = json::array();
  for (std::uint64_t m = 1; m <= f.n; ++m) tau2.push_back({{"m", m}, {"tau2", orthoinv::tau2(m, F)}});
  j["tau1"] = tau1(F);
  j["tau2"] = tau2;
  if (F.kind == FieldKind::finite) j["printed_bounds"] = io::to_json(fq_printed_bounds(f.n, F));
  emit(j, f);
  return 0;
}

int cmd_representatives(const Flags& f) {
  if (f.field.empty() || !f.n) fail("parse", "representatives needs --field Fp:<p> and --n");
  FieldDesc F = FieldDesc::parse(f.field);
  if (F.kind != FieldKind::finite) fail("domain", "representatives are generated over F_q only");
  auto reps = fq_type1_representatives(f.n, F.q, parse_variant(f.variant));
  json list = json::array();
  for (auto& r : reps.reps) list.push_back({{"family", r.family}, {"m", r.m}, {"A", io::to_json(r.A)}});
  json j{{"ctx", io::to_json(reps.ctx)}, {"variant", f.variant}, {"count", reps.reps.size()},
         {"stated_count", fq_type1_stated_count(f.n)}, {"representatives", list}};
  if (reps.two_squares)
    j["two_squares"] = {io::to_json(reps.two_squares->first), io::to_json(reps.two_squares->second)};
  emit(j, f);
  return 0;
}

int cmd_qp_table(const Flags& f) {
  std::uint64_t p = f.p;
  if (!p && !f.field.empty()) p = FieldDesc::parse(f.field).p;
  if (!p) fail("parse", "qp-table needs --p or --field Qp:<p>");
  std::size_t n = f.n ? f.n : 3;
  auto conv = parse_hasse(f.hasse);
  json rows = json::array();
  if (p == 2)
    for (auto& c : q2_cells(n, conv)) rows.push_back(io::to_json(c));
  else
    for (auto& r : qp_type1_invariant_table(p, n, conv)) rows.push_back(io::to_json(r));
  emit(json{{"p", p}, {"n", n}, {"hasse", convention_name(conv)}, {"rows", rows}}, f);
  return 0;
}

int cmd_oracle(const Flags& f) {
  if (!f.n || !f.p) fail("parse", "oracle needs --n and --p");
  auto ctx = io::context_from_flags<Residue>(FieldDesc::finite(f.p), f.form, f.n);
  auto S = oracle::space_for(ctx);
  auto G = oracle::generate_orthogonal_group(S, f.max_elements, [](const std::string& m) { std::cerr << m << "\n"; });
  std::size_t so = 0;
  for (auto d : G.det) so += d == 1;
  json j{{"n", f.n}, {"p", f.p}, {"diag", io::to_json(ctx.diag)}, {"order", G.order()}, {"so_order", so},
         {"estimate", oracle::estimate_order(f.n, f.p, oracle::form_det(S))},
         {"direct_count", oracle::direct_order_count(S)}};
  if (f.count_classes || f.type) {
    json counts = json::array();
    std::vector<int> types = f.type ? std::vector<int>{f.type} : std::vector<int>{1, 2, 3, 4};
    for (int t : types) {
      if (t < 1 || t > 4) fail("parse", "--type must be 1..4");
      if (t != 1 && t != 3 && f.n % 2) continue;
      std::cerr << "type " << t << ": counting classes\n";
      auto c = oracle::count_classes_bruteforce(G, t);
      json reps = json::array();
      if (f.count_classes)
        for (std::size_t i = 0; i < c.classes; ++i)
          reps.push_back({{"matrix", io::to_json(S.to_matrix(c.representatives[i]))}, {"orbit_size", c.orbit_sizes[i]}});
      counts.push_back({{"type", t}, {"candidates", c.candidates}, {"classes", c.classes}, {"representatives", reps}});
    }
    j["class_counts"] = counts;
  }
  emit(j, f);
  return 0;
}

json check_json(const selfcheck::Check& c) {
  json j{{"id", c.id}, {"what", c.what}, {"passed", c.passed}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

int cmd_verify(const Flags& f) {
  auto rep = selfcheck::run_worked_example_suite();
  json entries = json::array(), log = json::array();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (auto& e : rep.entries) {
    json j = check_json(e.check);
    j["status"] = e.status;
    entries.push_back(j);
    if (e.status == "pass") ++counts[0];
    if (e.status == "expected_fail") ++counts[1], log.push_back(e.manifest);
    if (e.status == "regression") ++counts[2];
    if (e.status == "stale_manifest") ++counts[3];
  }
  json out{{"manifest_version", rep.manifest_version}, {"ok", rep.ok()}, {"checks", entries},
           {"discrepancies", log},
           {"summary", {{"pass", counts[0]}, {"expected_fail", counts[1]}, {"regression", counts[2]},
                        {"stale_manifest", counts[3]}}}};
  emit(out, f);
  for (auto& e : rep.entries)
    if (e.status != "pass") std::cerr << e.status << ": " << e.check.id << "\n";
  return rep.ok() ? 0 : 3;
}

int report_error(int code, const std::string& kind, const std::string& reason) {
  std::cout << json{{"error", {{"code", kind}, {"reason", reason}}}}.dump(2) << "\n";
  std::cerr << "orthoinv: " << reason << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify and compare inner involutions of orthogonal groups"};
  app.require_subcommand(1, 1);
  Flags f;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--field", f.field, "Q | R | closed | Fp:<p> | Qp:<p>");
    s->add_option("--form", f.form, "standard | diag:<csv>");
    s->add_option("--n", f.n, "dimension");
    s->add_option("--out", f.out, "write the report here instead of stdout");
  };

  auto* classify = app.add_subcommand("classify", "normalize an involution and compute its type data");
  add_common(classify);
  classify->add_option("file", f.files, "involution JSON")->required()->check(CLI::ExistingFile);

  auto* iso = app.add_subcommand("isomorphic", "decide isomorphy of two involutions");
  add_common(iso);
  iso->add_option("files", f.files, "two involution JSON files")->required()->expected(2)->check(CLI::ExistingFile);
  iso->add_option("--group", f.group, "O | SO");

  auto* census = app.add_subcommand("census", "class-count bounds and tau tables");
  add_common(census);

  auto* reps = app.add_subcommand("representatives", "Type 1 representatives over F_q");
  add_common(reps);
  reps->add_option("--variant", f.variant, "standard | delta");

  auto* qp = app.add_subcommand("qp-table", "Type 1 invariant rows over Q_p");
  add_common(qp);
  qp->add_option("--p", f.p, "prime");
  qp->add_option("--hasse", f.hasse, "inclusive | strict | jones");

  auto* orc = app.add_subcommand("oracle", "brute-force group enumeration over F_p");
  add_common(orc);
  orc->add_option("--p", f.p, "odd prime <= 13");
  orc->add_option("--type", f.type, "1..4");
  orc->add_flag("--count-classes", f.count_classes, "list class representatives");
  orc->add_option("--max-elements", f.max_elements, "cap on the group size");

  auto* verify = app.add_subcommand("verify-paper", "run the built-in worked-example suite");
  verify->add_option("--out", f.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*classify) return cmd_classify(f);
    if (*iso) return cmd_isomorphic(f);
    if (*census) return cmd_census(f);
    if (*reps) return cmd_representatives(f);
    if (*qp) return cmd_qp_table(f);
    if (*orc) return cmd_oracle(f);
    if (*verify) return cmd_verify(f);
  } catch (const precondition_error& e) {
    bool input = e.code() == "parse" || e.code() == "io";
    return report_error(input ? 1 : 2, e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return report_error(1, "parse", e.what());
  } catch (const invariant_error& e) {
    return report_error(3, "invariant", e.what());
  } catch (const std::exception& e) {
    return report_error(3, "internal", e.what());
  }
  return 1;
}
