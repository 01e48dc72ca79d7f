#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gkm/frobenius.hpp"
#include "gkm/io.hpp"
#include "p1_data.hpp"

using namespace gkm;

namespace {

std::string data_path(const std::string& name) { return std::string(GKM_TEST_DATA) + "/" + name; }

FrobeniusData classical_c3z3(int degree = 4) {
  GKMTarget t = io::load_target(data_path("c3_z3.json"));
  return classical_frobenius(gkm_assemble(t), degree);
}

GenusZeroFile rank1_file(std::vector<std::pair<std::vector<int>, std::string>> series) {
  GenusZeroFile f;
  f.variables = {"t_0"};
  f.n_t = 1;
  f.max_degree = 64;
  f.degree_two = {0};
  f.structure_constants.push_back({0, 0, 0, std::move(series)});
  return f;
}

CRAlgebra rank1_algebra() {
  auto ctx = scalar_context(1, {});
  GroupData g = abelian_group(ctx, {1});
  SectorAction act;
  act.axes = {SectorAction::Axis{}};
  act.axes[0].exps = {0};
  act.weights = {1};
  return local_cr_algebra(ctx, g, act);
}

}  // namespace

TEST_CASE("classical data: constant idempotents, linear canonical coordinates") {
  FrobeniusData d = classical_c3z3();
  int N = d.alg.N;
  // eps_i = phibar_i, so E = diag(1/sqrt(Delta(0))) and everything is constant.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      TSeries expect(d.vt, i == j ? Scalar(Rational(1)) / d.alg.sqrt_delta0[i]
                                  : Scalar(Rational(0)));
      CHECK(d.E.at(i, j) == expect);
    }
  // u^i = sqrt(Delta_i(0)) t^i with zero constant term; Psi = identity.
  for (int i = 0; i < N; ++i) {
    TSeries expect_u = TSeries::variable(d.vt, i, d.alg.sqrt_delta0[i]);
    CHECK(d.u[i] == expect_u);
    CHECK(d.u[i].constant_term().is_zero());
    CHECK(d.Delta[i] == TSeries(d.vt, Scalar(d.alg.delta0[i])));
    for (int mu = 0; mu < N; ++mu) {
      TSeries expect_psi(d.vt, Scalar(mu == i ? Rational(1) : Rational(0)));
      CHECK(d.Psi.at(mu, i) == expect_psi);
    }
  }
  check_frobenius_invariants(d);
  check_lemma_delta(d);
}

TEST_CASE("rank-1 deformed toy: C(t) = 1 + t") {
  CRAlgebra alg = rank1_algebra();
  FrobeniusData d = load_genus_zero(
      alg, rank1_file({{{0}, "1"}, {{1}, "1"}}), 6);
  // eps = e/(1+t), Delta = (1+t)^2, du = (1+t) dt so u = t + t^2/2.
  auto vt = d.vt;
  TSeries one(vt, Scalar(Rational(1)));
  TSeries t = TSeries::variable(vt, 0);
  CHECK(d.Delta[0] == (one + t) * (one + t));
  CHECK(d.u[0] == t + t * t * Scalar(Rational(1, 2)));
  CHECK(d.E.at(0, 0) == (one + t).inverse());
  // Psi is 1x1 orthogonal: identically 1.
  CHECK(d.Psi.at(0, 0) == one);
}

TEST_CASE("constant-term mismatch is rejected") {
  CRAlgebra alg = rank1_algebra();
  CHECK_THROWS_AS(load_genus_zero(alg, rank1_file({{{0}, "2"}}), 4), MathError);
}

TEST_CASE("non-associative perturbation is rejected at degree 1") {
  GKMTarget t = io::load_target(data_path("rank2_target.json"));
  CRAlgebra alg = gkm_assemble(t);
  GenusZeroFile f;
  f.variables = {"t_0", "t_1"};
  f.n_t = 2;
  f.max_degree = 64;
  // classical: C_111 = 2, C_222 = 1; perturb only C_122 by t_0.
  f.structure_constants.push_back({0, 0, 0, {{{0, 0}, "2"}}});
  f.structure_constants.push_back({1, 1, 1, {{{0, 0}, "1"}}});
  f.structure_constants.push_back({0, 1, 1, {{{1, 0}, "1"}}});
  try {
    load_genus_zero(alg, f, 4);
    FAIL("expected associativity failure");
  } catch (const MathError& e) {
    CHECK(std::string(e.what()).find("degree 1") != std::string::npos);
  }
}

TEST_CASE("quartic rank-2 data: idempotents, unit, Psi, Lemma Delta") {
  GKMTarget t = io::load_target(data_path("rank2_target.json"));
  CRAlgebra alg = gkm_assemble(t);
  GenusZeroFile f = io::load_genus_zero_file(data_path("rank2_genus_zero.json"));
  FrobeniusData d = load_genus_zero(alg, f, 6);
  CHECK(!d.classical);
  check_frobenius_invariants(d);
  check_lemma_delta(d);
  // idempotents acquire nonconstant corrections
  bool nonconst = false;
  for (int i = 0; i < 2 && !nonconst; ++i)
    for (int j = 0; j < 2; ++j)
      if (d.E.at(i, j) != TSeries(d.vt, d.E.at(i, j).constant_term())) nonconst = true;
  CHECK(nonconst);
}

TEST_CASE("p1-style data with a Novikov variable") {
  GKMTarget t = io::load_target(data_path("two_points.json"), {-1});
  CRAlgebra alg = gkm_assemble(t);
  FrobeniusData d = load_genus_zero(alg, gkmtest::make_p1_genus_zero(6), 6);
  CHECK(!d.classical);
  CHECK(d.n_q == 1);
  check_frobenius_invariants(d);
  check_lemma_delta(d);
  // all derived series are constant at q = 0: idempotent columns minus their
  // constant part must vanish after substituting q = 0
  int qvar = 2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      TSeries at_q0 = d.E.at(i, j).subst_zero(qvar);
      CHECK(at_q0 == TSeries(d.vt, d.E.at(i, j).constant_term()));
    }
}

TEST_CASE("divisor rescaling") {
  CRAlgebra alg = rank1_algebra();
  // rank 1 with one Novikov variable: C(t, q) = 1 + q
  GenusZeroFile f;
  f.variables = {"t_0", "q_1"};
  f.n_t = 1;
  f.max_degree = 64;
  f.degree_two = {0};
  f.structure_constants.push_back({0, 0, 0, {{{0, 0}, "1"}, {{0, 1}, "1"}}});
  FrobeniusData d = load_genus_zero(alg, f, 5);

  // c = 0 is the identity transformation
  FrobeniusData same = divisor_rescale(d, 0, {Rational(0)});
  CHECK(same.C[0].at(0, 0) == d.C[0].at(0, 0));

  // c = 1: coefficient of q t^j becomes 1/j! (exponential substitution oracle)
  FrobeniusData shifted = divisor_rescale(d, 0, {Rational(1)});
  const TSeries& c = shifted.C[0].at(0, 0);
  for (int j = 0; j + 1 <= 5; ++j) {
    Expo e(2, 0);
    e[0] = static_cast<uint16_t>(j);
    e[1] = 1;
    CHECK(c.coeff(e) == Scalar(Rational(Int(1), factorial(j))));
  }

  // applying c then -c is the identity up to the working degree
  FrobeniusData back = divisor_rescale(shifted, 0, {Rational(-1)});
  CHECK(back.C[0].at(0, 0) == d.C[0].at(0, 0));

  // unflagged direction rejected
  FrobeniusData no_flag = d;
  no_flag.degree_two.clear();
  CHECK_THROWS_AS(divisor_rescale(no_flag, 0, {Rational(1)}), ConfigError);
}
