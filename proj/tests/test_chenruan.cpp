#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkm/chenruan.hpp"
#include "gkm/io.hpp"

using namespace gkm;

namespace {

std::string data_path(const std::string& name) { return std::string(GKM_TEST_DATA) + "/" + name; }

SectorAction::Axis axis(std::vector<int> exps) {
  SectorAction::Axis a;
  a.exps = std::move(exps);
  return a;
}

}  // namespace

TEST_CASE("trivial group, one axis, weight 5") {
  auto ctx = scalar_context(1, {5});
  GroupData g = abelian_group(ctx, {1});
  SectorAction act;
  act.axes = {axis({0})};
  act.weights = {5};
  CRAlgebra A = local_cr_algebra(ctx, g, act);
  CHECK(A.N == 1);
  CHECK(A.gram_bar.at(0, 0) == Scalar(Rational(1, 5)));
  CHECK(A.phibar.at(0, 0) == Scalar(Rational(1)));  // phibar = 1bar
  CHECK(A.nu[0] == Rational(1));
  CHECK(A.delta0[0] == Rational(5));
  A.validate();
}

TEST_CASE("Z_2 sign action on C") {
  auto ctx = scalar_context(2, {});
  GroupData g = abelian_group(ctx, {2});
  SectorAction act;
  act.axes = {axis({1})};
  act.weights = {1};
  CRAlgebra A = local_cr_algebra(ctx, g, act);
  CHECK(A.N == 2);
  // 1bar_(-1) * 1bar_(-1) = 1bar_(1)
  CHECK(A.prod_bar[0].at(1, 1) == Scalar(Rational(1)));
  CHECK(A.prod_bar[1].at(1, 1).is_zero());
  CHECK(A.gram_bar.at(1, 1) == Scalar(Rational(1, 2)));
  CHECK(A.ages[0] == Rational(0));
  CHECK(A.ages[1] == Rational(1, 2));
  A.validate();
}

TEST_CASE("diagonal Z_3 on C^3: all nu equal 1/9") {
  GKMTarget t = io::load_target(data_path("c3_z3.json"));
  CRAlgebra A = gkm_assemble(t);
  CHECK(A.N == 3);
  for (int m = 0; m < 3; ++m) CHECK(A.nu[m] == Rational(1, 9));
  for (int m = 0; m < 3; ++m) CHECK(A.delta0[m] == Rational(54));  // 6 / (1/9)
  CHECK(A.ages[0] == Rational(0));
  CHECK(A.ages[1] == Rational(1));
  CHECK(A.ages[2] == Rational(2));
  A.validate();
}

TEST_CASE("two trivial fixed points with weights 1 and -1") {
  GKMTarget t = io::load_target(data_path("two_points.json"));
  CRAlgebra A = gkm_assemble(t);
  CHECK(A.N == 2);
  CHECK(A.gram_bar.at(0, 0) == Scalar(Rational(1)));
  CHECK(A.gram_bar.at(1, 1) == Scalar(Rational(-1)));
  CHECK(A.gram_bar.at(0, 1).is_zero());
  A.validate();
}

TEST_CASE("single fixed point assembly equals the local algebra") {
  auto ctx = scalar_context(2, {15});
  GroupData g = abelian_group(ctx, {2});
  SectorAction act;
  act.axes = {axis({1})};
  act.weights = {Rational(5, 3)};
  CRAlgebra local = local_cr_algebra(ctx, g, act);
  GKMTarget t;
  t.ctx = ctx;
  t.dim = 1;
  t.points.push_back({g, act});
  CRAlgebra assembled = gkm_assemble(t);
  CHECK(local.N == assembled.N);
  CHECK(local.gram_bar == assembled.gram_bar);
  CHECK(local.phitilde == assembled.phitilde);
}

TEST_CASE("class counting over three fixed points") {
  auto ctx = scalar_context(6, {2, 3, 5});
  GKMTarget t;
  t.ctx = ctx;
  t.dim = 1;
  SectorAction a3, a1, a2;
  a3.axes = {axis({1})};
  a3.weights = {2};
  a1.axes = {axis({})};
  a1.weights = {3};
  a2.axes = {axis({1})};
  a2.weights = {5};
  t.points.push_back({abelian_group(ctx, {3}), a3});
  t.points.push_back({abelian_group(ctx, {}), a1});
  t.points.push_back({abelian_group(ctx, {2}), a2});
  CRAlgebra A = gkm_assemble(t);
  CHECK(A.N == 3 + 1 + 2);
  A.validate();
}

TEST_CASE("involution") {
  GKMTarget t = io::load_target(data_path("c3_z3.json"));
  CRAlgebra A = gkm_assemble(t);
  CHECK(involution(A, {0, 0}) == SectorLabel{0, 0});
  CHECK(involution(A, {0, 1}) == SectorLabel{0, 2});
  CHECK(involution(A, {0, 2}) == SectorLabel{0, 1});
}

TEST_CASE("ingested Z_2 x Z_2 table") {
  GKMTarget t = io::load_target(data_path("c2_z2z2.json"));
  CHECK(!t.points[0].group.abelian);
  CRAlgebra A = gkm_assemble(t);
  CHECK(A.N == 4);
  // ages: e -> 0, a -> 1/2, b -> 1/2, ab -> 1
  CHECK(A.ages[0] == Rational(0));
  CHECK(A.ages[1] == Rational(1, 2));
  CHECK(A.ages[2] == Rational(1, 2));
  CHECK(A.ages[3] == Rational(1));
  A.validate();
}

TEST_CASE("assembled canonical pairing values") {
  GKMTarget t = io::load_target(data_path("c_z2.json"));
  CRAlgebra A = gkm_assemble(t);
  // <phibar_a, phibar_b> = delta * nu / prod(w) with nu = 1/4, prod w = 5/3
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      std::vector<Scalar> ca(A.N), cb(A.N);
      for (int h = 0; h < A.N; ++h) {
        ca[h] = A.phibar.at(h, a);
        cb[h] = A.phibar.at(h, b);
      }
      Scalar expect(a == b ? Rational(1, 4) / Rational(5, 3) : Rational(0));
      CHECK(A.pair_bar(ca, cb) == expect);
    }
  A.validate();
}

TEST_CASE("degree bookkeeping: deg = 2 age and moving axes") {
  GKMTarget t = io::load_target(data_path("c2_z2z2.json"));
  CRAlgebra A = gkm_assemble(t);
  for (int i = 0; i < A.N; ++i) {
    Rational deg = A.ages[i] * 2;
    CHECK(deg >= 0);
    Rational s = A.ages[i] + A.ages[A.invol[i]];
    CHECK(boost::multiprecision::denominator(s) == 1);
  }
}

TEST_CASE("repeated weights are flagged but not fatal") {
  GKMTarget t = io::load_target(data_path("c3_cy.json"));
  CHECK(t.genericity_warnings().size() == 1);
  CRAlgebra A = gkm_assemble(t);
  CHECK(A.delta0[0] == Rational(-2));
  A.validate();
}
