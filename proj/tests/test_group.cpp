#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkm/bernoulli.hpp"
#include "gkm/group.hpp"

using namespace gkm;

namespace {

SectorAction::Axis axis(std::vector<int> exps) {
  SectorAction::Axis a;
  a.exps = std::move(exps);
  return a;
}

// Generating-function oracle: coefficients of t e^{tx}/(e^t - 1) up to t^m/m!.
Rational bernoulli_poly_oracle(int m, const Rational& x) {
  int n = m + 2;
  // num = t*e^{tx}: coefficient of t^j is x^{j-1}/(j-1)!
  std::vector<Rational> num(n, Rational(0)), den(n, Rational(0));
  Rational xp = 1;
  for (int j = 1; j < n; ++j) {
    num[j] = xp / Rational(factorial(j - 1));
    xp *= x;
  }
  // den = e^t - 1 = sum_{j>=1} t^j/j!; divide num by den after cancelling t.
  for (int j = 1; j < n; ++j) den[j] = Rational(1) / Rational(factorial(j));
  std::vector<Rational> a(n - 1), b(n - 1);
  for (int j = 0; j + 1 < n; ++j) {
    a[j] = num[j + 1];
    b[j] = den[j + 1];
  }
  std::vector<Rational> q(n - 1, Rational(0));
  for (int j = 0; j + 1 < n; ++j) {
    Rational acc = a[j];
    for (int i = 0; i < j; ++i) acc -= q[i] * b[j - i];
    q[j] = acc / b[0];
  }
  return q[m] * Rational(factorial(m));
}

}  // namespace

TEST_CASE("trivial group has one class") {
  auto ctx = scalar_context(1, {});
  GroupData g = abelian_group(ctx, {1});
  CHECK(g.num_classes() == 1);
  g.validate();
}

TEST_CASE("Z_3 classes and inverse permutation") {
  auto ctx = scalar_context(3, {});
  GroupData g = abelian_group(ctx, {3});
  CHECK(g.num_classes() == 3);
  for (int c = 0; c < 3; ++c) {
    CHECK(g.sizes[c] == 1);
    CHECK(g.centralizers[c] == 3);
  }
  CHECK(g.inverse[0] == 0);
  CHECK(g.inverse[1] == 2);
  CHECK(g.inverse[2] == 1);
  g.validate();
}

TEST_CASE("Z_2 x Z_2 has four classes and four characters") {
  auto ctx = scalar_context(2, {});
  GroupData g = abelian_group(ctx, {2, 2});
  CHECK(g.num_classes() == 4);
  CHECK(g.chars.size() == 4);
  g.validate();
}

TEST_CASE("orthogonality for built-in abelian groups up to order 16") {
  std::vector<std::vector<int>> factor_lists = {
      {2},    {3},  {4},    {5},    {6},       {7},    {8},       {9},   {10},
      {11},   {12}, {13},   {14},   {15},      {16},   {2, 2},    {2, 4}, {2, 8},
      {4, 4}, {3, 3}, {2, 6}, {2, 2, 2}, {2, 2, 4}, {2, 2, 2, 2}, {2, 2, 3}};
  for (const auto& f : factor_lists) {
    long long e = 1;
    for (int x : f) e = std::lcm<long long>(e, x);
    GroupData g = abelian_group(scalar_context(static_cast<int>(e), {}), f);
    CHECK_NOTHROW(g.validate());
  }
}

TEST_CASE("c-values") {
  auto ctx = scalar_context(6, {});
  GroupData z3 = abelian_group(ctx, {3});
  // chi(omega) = zeta_3 on the generator
  CHECK(c_value(z3, 1, axis({1})) == Rational(1, 3));
  CHECK(c_value(z3, 0, axis({1})) == Rational(0));
  GroupData z2 = abelian_group(ctx, {2});
  CHECK(c_value(z2, 1, axis({1})) == Rational(1, 2));
}

TEST_CASE("ages of the diagonal Z_3 action on C^3") {
  auto ctx = scalar_context(3, {});
  GroupData g = abelian_group(ctx, {3});
  SectorAction act;
  act.axes = {axis({1}), axis({1}), axis({1})};
  act.weights = {1, 2, 3};
  act.validate(g);
  CHECK(age(g, 0, act) == Rational(0));
  CHECK(age(g, 1, act) == Rational(1));
  CHECK(age(g, 2, act) == Rational(2));
}

TEST_CASE("inverse class relations for c and age") {
  auto ctx = scalar_context(12, {});
  GroupData g = abelian_group(ctx, {4, 3});
  SectorAction act;
  act.axes = {axis({1, 0}), axis({0, 1}), axis({1, 2}), axis({3, 1})};
  act.weights = {1, 2, 3, 4};
  for (int h = 0; h < g.num_classes(); ++h) {
    int moving = 0;
    for (const auto& ax : act.axes) {
      Rational c = c_value(g, h, ax);
      Rational cinv = c_value(g, g.inverse[h], ax);
      if (c == 0) {
        CHECK(cinv == 0);
      } else {
        CHECK(cinv == Rational(1) - c);
        ++moving;
      }
    }
    CHECK(age(g, h, act) + age(g, g.inverse[h], act) == Rational(moving));
  }
}

TEST_CASE("class multiplication constants collapse for abelian groups") {
  auto ctx = scalar_context(6, {});
  GroupData g = abelian_group(ctx, {6});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) {
        Scalar c = class_mult_coefficient(g, i, j, k);
        Scalar expect(((i + j) % 6 == k) ? Rational(1) : Rational(0));
        CHECK(c == expect);
      }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_polynomial(0, Rational(7, 5)) == Rational(1));
  CHECK(bernoulli_polynomial(1, Rational(0)) == Rational(-1, 2));
  CHECK(bernoulli_polynomial(2, Rational(1, 2)) == Rational(-1, 12));
  CHECK(bernoulli_polynomial(2, Rational(0)) == Rational(1, 6));

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int m = 0; m <= 8; ++m)
    for (int it = 0; it < 4; ++it) {
      Rational x(num(rng), den(rng));
      CHECK(bernoulli_polynomial(m, x) == bernoulli_poly_oracle(m, x));
    }
  for (int m = 0; m <= 24; ++m)
    for (int it = 0; it < 20; ++it) {
      Rational x(num(rng), den(rng));
      Rational lhs = bernoulli_polynomial(m, Rational(1) - x);
      Rational rhs = bernoulli_polynomial(m, x);
      CHECK(lhs == (m % 2 ? -rhs : rhs));
    }
  for (int k = 1; 2 * k + 1 <= 24; ++k) CHECK(bernoulli_polynomial(2 * k + 1, 0) == 0);
}
