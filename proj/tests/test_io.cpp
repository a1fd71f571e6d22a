#include <gtest/gtest.h>

#include "orthoinv/io.hpp"
#include "orthoinv/worked_examples.hpp"

using namespace orthoinv;
using json = nlohmann::json;

TEST(Io, Scalars) {
  EXPECT_EQ(io::parse_rational(json("-6/4")), Rational(-3, 2));
  EXPECT_EQ(io::parse_rational(json(7)), Rational(7));
  EXPECT_THROW(io::parse_rational(json("1/0")), precondition_error);
  EXPECT_THROW(io::parse_rational(json("x")), precondition_error);
  EXPECT_THROW(io::parse_rational(json(1.5)), precondition_error);
  EXPECT_EQ(io::parse_residue(json("1/2"), 5).value(), 3u);
  EXPECT_EQ(io::to_json(Rational(-3, 2)), json("-3/2"));
}

TEST(Io, MatrixShapes) {
  auto F = FieldDesc::rationals();
  auto a = io::parse_matrix<Rational>(json::parse(R"([["1","2"],["3","4"]])"), F);
  auto b = io::parse_matrix<Rational>(json::parse(R"(["1","2","3","4"])"), F, 2);
  EXPECT_EQ(a, b);
  EXPECT_THROW(io::parse_matrix<Rational>(json::parse(R"([["1","2"],["3"]])"), F), precondition_error);
  EXPECT_THROW(io::parse_matrix<Rational>(json::parse(R"(["1","2","3"])"), F, 2), precondition_error);
}

TEST(Io, QuadMatrix) {
  auto F = FieldDesc::rationals();
  auto m = io::parse_quad_matrix<Rational>(
      json::parse(R"({"n": 2, "alpha": "2", "entries": [[{"a": "0", "b": "1"}, "0"], ["0", {"a": "1", "b": "1"}]]})"), F);
  EXPECT_EQ(m(0, 0) * m(0, 0), Quad<Rational>(Rational(2), Rational(0), Rational(2)));
  auto back = io::to_json(m);
  EXPECT_EQ(back["alpha"], json("2"));
  EXPECT_EQ(back["entries"][1][1]["b"], json("1"));
}

TEST(Io, ContextAndInvolutionRoundTrip) {
  json j = json::parse(R"({
    "ctx": {"n": 4, "field": "Q", "diag": ["1", "1", "1", "1"]},
    "alpha": "3",
    "coeff": [["0","1/3","-1/3","1/3"],["1/3","0","1/3","1/3"],["-1/3","1/3","1/3","0"],["1/3","1/3","0","-1/3"]]})");
  auto ctx = io::parse_context<Rational>(j["ctx"]);
  auto inv = io::parse_involution(j, ctx);
  EXPECT_EQ(inv.type, 2);
  auto out = io::to_json(inv);
  EXPECT_EQ(out["alpha_class"], json("3"));
  auto again = io::parse_involution(json{{"alpha", out["alpha"]}, {"coeff", out["coeff"]}}, ctx);
  EXPECT_EQ(again.B, inv.B);
  EXPECT_EQ(out.dump(), io::to_json(again).dump());
}

TEST(Io, ContextFlags) {
  auto F = FieldDesc::finite(5);
  auto c = io::context_from_flags<Residue>(F, "diag:1,2,3", 0);
  EXPECT_EQ(c.n, 3u);
  EXPECT_EQ(c.diag[2].value(), 3u);
  EXPECT_THROW(io::context_from_flags<Residue>(F, "standard", 0), precondition_error);
  EXPECT_THROW(io::context_from_flags<Residue>(F, "diag:1,2", 3), precondition_error);
  EXPECT_THROW(io::context_from_flags<Residue>(F, "hyperbolic", 2), precondition_error);
  auto g = io::parse_context<Rational>(json::parse(R"({"field": "Q", "gram": [["0","1"],["1","0"]]})"));
  EXPECT_TRUE(g.transform.has_value());
}

TEST(Io, VerdictJson) {
  worked::F3Type2Pair ex;
  auto a = normalize_inner(ex.alpha, ex.A, ex.ctx), b = normalize_inner(ex.alpha, ex.B, ex.ctx);
  auto j = io::to_json(isomorphic(a, b));
  EXPECT_TRUE(j["isomorphic"].get<bool>());
  EXPECT_EQ(j["route"], json("type2_reduction"));
  EXPECT_TRUE(j["invariants"].is_array());
  EXPECT_TRUE(j.contains("witness"));
}

TEST(Io, ManifestParses) {
  auto m = json::parse(worked::discrepancy_manifest_json());
  EXPECT_GE(m["version"].get<int>(), 1);
  std::set<std::string> ids;
  for (auto& e : m["entries"]) EXPECT_TRUE(ids.insert(e["id"].get<std::string>()).second);
  EXPECT_TRUE(ids.count("sqrt3.printed_xtx"));
}
