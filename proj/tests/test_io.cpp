#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "gkm/graphsum.hpp"
#include "gkm/io.hpp"

using namespace gkm;

namespace {

std::string data_path(const std::string& name) { return std::string(GKM_TEST_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = name;  // test cwd
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("target loading failures") {
  CHECK_THROWS_AS(io::load_target("nonexistent.json"), ConfigError);
  auto bad = write_temp("bad.json", "{ not json");
  CHECK_THROWS_AS(io::load_target(bad), ConfigError);
  auto zero_w = write_temp("zero_w.json", R"json({
    "dimension": 1,
    "fixed_points": [
      { "group": { "cyclic": [2] }, "action_chars": [[1]], "weights": ["0"] }
    ]})json");
  CHECK_THROWS_AS(io::load_target(zero_w), ConfigError);
}

TEST_CASE("corrupt character table is rejected") {
  auto bad_table = write_temp("bad_table.json", R"json({
    "order": 4, "exponent": 2,
    "classes": [
      { "label": "e",  "size": 1, "centralizer": 4, "inverse": 0 },
      { "label": "a",  "size": 1, "centralizer": 4, "inverse": 1 },
      { "label": "b",  "size": 1, "centralizer": 4, "inverse": 2 },
      { "label": "ab", "size": 1, "centralizer": 4, "inverse": 3 }
    ],
    "characters": [
      ["1", "1", "1", "1"],
      ["1", "1", "-1", "-1"],
      ["1", "-1", "1", "-1"],
      ["1", "-1", "-1", "-1"]
    ]})json");
  io::RawTable raw = io::load_table_raw(bad_table);
  auto ctx = scalar_context(2, {});
  CHECK_THROWS_AS(io::instantiate_table(raw, ctx), MathError);
}

TEST_CASE("nonabelian table: S_3") {
  auto s3 = write_temp("s3_table.json", R"json({
    "order": 6, "exponent": 6,
    "classes": [
      { "label": "e",   "size": 1, "centralizer": 6, "inverse": 0 },
      { "label": "(12)", "size": 3, "centralizer": 2, "inverse": 1 },
      { "label": "(123)", "size": 2, "centralizer": 3, "inverse": 2 }
    ],
    "characters": [
      ["1", "1", "1"],
      ["1", "-1", "1"],
      ["2", "0", "-1"]
    ]})json");
  io::RawTable raw = io::load_table_raw(s3);
  auto ctx = scalar_context(6, {});
  GroupData g = io::instantiate_table(raw, ctx);
  CHECK(g.dims == std::vector<int>{1, 1, 2});
  // class algebra: (12)-class squared = 3 e + 3 (123)-class... per pair count:
  // c_{11k}: pairs of transpositions multiplying to a fixed element
  CHECK(class_mult_coefficient(g, 1, 1, 0) == Scalar(Rational(3)));
  CHECK(class_mult_coefficient(g, 1, 1, 2) == Scalar(Rational(3)));
  CHECK(class_mult_coefficient(g, 1, 1, 1) == Scalar(Rational(0)));
}

TEST_CASE("potential JSON emission is deterministic") {
  GKMTarget t = io::load_target(data_path("c3_z3.json"));
  CRAlgebra alg = gkm_assemble(t);
  FrobeniusData d = classical_frobenius(alg, 4);
  RMatrix R = rmatrix_for_data(d, qrr_boundary(t, alg, 6), 6);
  PotentialTable tab = ancestor_potential(1, 1, d, R);
  std::string json1 = io::potential_to_json(tab);
  std::string json2 = io::potential_to_json(tab);
  CHECK(json1 == json2);
  CHECK(json1.find("\"entries\"") != std::string::npos);
}

TEST_CASE("emitted values re-parse to identical scalars") {
  GKMTarget t = io::load_target(data_path("c2_z2z2.json"));
  CRAlgebra alg = gkm_assemble(t);
  FrobeniusData d = classical_frobenius(alg, 4);
  RMatrix R = rmatrix_for_data(d, qrr_boundary(t, alg, 6), 6);
  PotentialTable tab = ancestor_potential(0, 3, d, R);
  for (const auto& [e, v] : tab.value.terms()) {
    std::string lit = v.str();
    CHECK(parse_scalar(alg.ctx, lit) == v);
    std::string mono = monomial_str(*tab.vt, e);
    CHECK(io::parse_monomial(tab.vt, mono) == e);
  }
}

TEST_CASE("genus-zero file with a series-valued s_operator block") {
  auto gz = write_temp("rank1_s.json", R"json({
    "variables": ["t_0"],
    "flat_count": 1,
    "max_degree": 16,
    "structure_constants": [
      { "mu": 0, "nu": 0, "rho": 0, "series": [ { "exponents": [0], "value": "1" } ] } ],
    "s_operator": [
      [ { "row": 0, "col": 0,
          "series": [ { "exponents": [0], "value": "1/2" },
                      { "exponents": [1], "value": "-2/3" } ] } ] ]
    })json");
  GenusZeroFile f = io::load_genus_zero_file(gz);
  auto ctx = scalar_context(1, {});
  GroupData g = abelian_group(ctx, {1});
  SectorAction act;
  act.axes = {SectorAction::Axis{}};
  act.axes[0].exps = {0};
  act.weights = {1};
  CRAlgebra alg = local_cr_algebra(ctx, g, act);
  FrobeniusData d = load_genus_zero(alg, f, 4);
  REQUIRE(d.S.has_value());
  TSeries expect =
      TSeries(d.vt, Scalar(Rational(1, 2))) + TSeries::variable(d.vt, 0, Scalar(Rational(-2, 3)));
  CHECK(d.S->coeff(1).at(0, 0) == expect);
  CHECK(d.S->coeff(0).at(0, 0) == TSeries(d.vt, Scalar(Rational(1))));
}

TEST_CASE("csv and pretty emitters cover all entries") {
  GKMTarget t = io::load_target(data_path("c_z2.json"));
  CRAlgebra alg = gkm_assemble(t);
  FrobeniusData d = classical_frobenius(alg, 4);
  RMatrix R = rmatrix_for_data(d, qrr_boundary(t, alg, 4), 4);
  PotentialTable tab = ancestor_potential(0, 3, d, R);
  std::string csv = io::potential_to_csv(tab);
  std::string pretty = io::potential_to_pretty(tab);
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == tab.value.terms().size() + 1);
  CHECK(pretty.find("->") != std::string::npos);
}
