#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkm/tseries.hpp"
#include "gkm/zseries.hpp"

using namespace gkm;

namespace {

VarTablePtr vt2(int cap = 6) { return make_var_table({"x", "y"}, {0, 0}, cap, 0); }

TSeries rand_series(const VarTablePtr& vt, std::mt19937& rng, bool zero_const = false) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), deg(0, vt->cap0);
  TSeries s(vt);
  for (int t = 0; t < 5; ++t) {
    Expo e(vt->names.size(), 0);
    int d = deg(rng);
    if (zero_const && d == 0) d = 1;
    for (int i = 0; i < d; ++i) e[rng() % vt->names.size()]++;
    s.add_term(e, Scalar(Rational(num(rng), den(rng))));
  }
  if (zero_const) {
    Expo z(vt->names.size(), 0);
    s.add_term(z, -s.constant_term());
  }
  return s;
}

}  // namespace

TEST_CASE("graded truncation drops overflow terms") {
  auto vt = make_var_table({"x"}, {0}, 3, 0);
  TSeries x = TSeries::variable(vt, 0);
  TSeries p = x * x * x;     // degree 3 kept
  CHECK(!p.is_zero());
  CHECK((p * x).is_zero());  // degree 4 dropped
}

TEST_CASE("substituting zero returns the constant term") {
  auto vt = vt2();
  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    TSeries s = rand_series(vt, rng);
    TSeries c = s.subst_zero(0).subst_zero(1);
    CHECK(c == TSeries(vt, s.constant_term()));
  }
}

TEST_CASE("exp and inverse") {
  auto vt = vt2(5);
  std::mt19937 rng(17);
  TSeries one(vt, Scalar(Rational(1)));
  for (int it = 0; it < 30; ++it) {
    TSeries a = rand_series(vt, rng, /*zero_const=*/true);
    CHECK((a.exp() * (-a).exp()) == one);
    TSeries f = rand_series(vt, rng, /*zero_const=*/true) + TSeries(vt, Scalar(Rational(2)));
    CHECK((f * f.inverse()) == one);
  }
}

TEST_CASE("series sqrt squares back") {
  auto ctx = scalar_context(1, {});
  auto vt = vt2(5);
  std::mt19937 rng(23);
  for (int it = 0; it < 20; ++it) {
    TSeries f = rand_series(vt, rng, /*zero_const=*/true) + TSeries(vt, Scalar(Rational(4)));
    TSeries s = f.sqrt(ctx);
    CHECK((s * s) == f);
  }
}

TEST_CASE("1-form integration recovers potentials and rejects non-closed forms") {
  auto vt = vt2(6);
  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    TSeries f = rand_series(vt, rng);
    Expo z(2, 0);
    f.add_term(z, -f.constant_term());  // zero constant (integration convention)
    OneForm w = differential(f, 2);
    TSeries g = integrate_oneform(w);
    CHECK(eq_to_degree(g, f, vt->cap0 - 1));
  }
  // dy is closed but y dx is not
  OneForm bad(vt, 2);
  bad.c[0] = TSeries::variable(vt, 1);
  CHECK_THROWS_AS(integrate_oneform(bad), MathError);
}

TEST_CASE("1-form division, regular and monomial-pivot cases") {
  auto vt = vt2(6);
  std::mt19937 rng(37);
  for (int it = 0; it < 30; ++it) {
    TSeries x = rand_series(vt, rng);
    OneForm den(vt, 2);
    den.c[0] = rand_series(vt, rng);
    Expo z(2, 0);
    den.c[0].add_term(z, Scalar(Rational(1)) - den.c[0].constant_term());  // unit constant
    den.c[1] = rand_series(vt, rng);
    OneForm num = den * x;
    TSeries q = divide_oneform(num, den);
    CHECK(eq_to_degree(q, x, vt->cap0));
  }
  // pivot is the monomial y: num must be divisible by y
  OneForm den(vt, 2);
  den.c[0] = TSeries::variable(vt, 1);  // y dx
  TSeries x = TSeries::variable(vt, 0);
  OneForm num = den * x;
  CHECK(eq_to_degree(divide_oneform(num, den), x, vt->cap0 - 1));
  OneForm bad(vt, 2);
  bad.c[0] = TSeries(vt, Scalar(Rational(1)));
  CHECK_THROWS_AS(divide_oneform(bad, den), MathError);
}

TEST_CASE("z-series product associativity on random matrices") {
  auto mk = [](std::mt19937& rng) {
    Mat<Scalar> zero(2, 2, Scalar(Rational(0)));
    ZSeries<Mat<Scalar>> s(0, 4, zero);
    std::uniform_int_distribution<int> num(-2, 2);
    for (int k = 0; k <= 4; ++k) {
      Mat<Scalar> m = zero;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = Scalar(Rational(num(rng)));
      s.set_coeff(k, m);
    }
    return s;
  };
  std::mt19937 rng(41);
  for (int it = 0; it < 25; ++it) {
    auto A = mk(rng), B = mk(rng), C = mk(rng);
    CHECK(((A * B) * C) == (A * (B * C)));
  }
}

TEST_CASE("series_exp") {
  Scalar zero(Rational(0)), one(Rational(1));
  // a = 0 -> identity
  ZSeries<Scalar> a(0, 6, zero);
  auto e = series_exp(a, one);
  CHECK(e.coeff(0) == one);
  for (int k = 1; k <= 6; ++k) CHECK(e.coeff(k).is_zero());

  // a = c z -> sum c^k z^k / k!
  ZSeries<Scalar> cz(1, 6, zero);
  Scalar c(Rational(3, 2));
  cz.set_coeff(1, c);
  auto ec = series_exp(cz, one);
  Scalar ck = one;
  for (int k = 0; k <= 6; ++k) {
    CHECK(ec.coeff(k) == ck * Scalar(Rational(Int(1), factorial(k))));
    ck *= c;
  }

  // nilpotent 2x2: exp(Nz) = I + Nz
  Mat<Scalar> mzero(2, 2, zero);
  Mat<Scalar> N = mzero;
  N.at(0, 1) = Scalar(Rational(5));
  ZSeries<Mat<Scalar>> nz(1, 6, mzero);
  nz.set_coeff(1, N);
  auto id = Mat<Scalar>::identity(2, zero, one);
  auto en = series_exp(nz, id);
  CHECK(en.coeff(0) == id);
  CHECK(en.coeff(1) == N);
  for (int k = 2; k <= 6; ++k) CHECK(en.coeff(k).is_zero());

  // nonzero constant part is rejected
  ZSeries<Scalar> badc(0, 6, zero);
  badc.set_coeff(0, one);
  CHECK_THROWS_AS(series_exp(badc, one), MathError);
  ZSeries<Scalar> badp(-1, 6, zero);
  badp.set_coeff(-1, one);
  CHECK_THROWS_AS(series_exp(badp, one), MathError);

  // exp(a) exp(-a) = 1 on random scalar series
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (int it = 0; it < 100; ++it) {
    ZSeries<Scalar> r(1, 6, zero);
    for (int k = 1; k <= 6; ++k) r.set_coeff(k, Scalar(Rational(num(rng), den(rng))));
    auto prod = series_exp(r, one) * series_exp(-r, one);
    CHECK(prod.coeff(0) == one);
    for (int k = 1; k <= 6; ++k) CHECK(prod.coeff(k).is_zero());
  }
}

TEST_CASE("bivariate division by z+w") {
  Scalar zero(Rational(0)), one(Rational(1));
  auto grid = [&](int K) {
    return std::vector<std::vector<Scalar>>(K + 1, std::vector<Scalar>(K + 1, zero));
  };
  // num = z + w -> 1
  auto n1 = grid(2);
  n1[1][0] = one;
  n1[0][1] = one;
  auto q1 = divide_by_z_plus_w(n1, zero);
  CHECK(q1[0][0] == one);
  CHECK(q1[1][0].is_zero());
  // num = z^2 - w^2 -> z - w
  auto n2 = grid(2);
  n2[2][0] = one;
  n2[0][2] = -one;
  auto q2 = divide_by_z_plus_w(n2, zero);
  CHECK(q2[1][0] == one);
  CHECK(q2[0][1] == -one);
  CHECK(q2[0][0].is_zero());
  // num = zw(z+w) -> zw
  auto n3 = grid(3);
  n3[2][1] = one;
  n3[1][2] = one;
  auto q3 = divide_by_z_plus_w(n3, zero);
  CHECK(q3[1][1] == one);
  CHECK(q3[0][0].is_zero());
  CHECK(q3[2][0].is_zero());
  // random polynomial oracle: build q, multiply by (z+w), divide back
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int it = 0; it < 50; ++it) {
    int K = 5;
    auto q = grid(K);
    for (int a = 0; a <= K - 1; ++a)
      for (int b = 0; a + b <= K - 1; ++b) q[a][b] = Scalar(Rational(num(rng)));
    auto n = grid(K);
    for (int A = 0; A <= K; ++A)
      for (int B = 0; B + A <= K; ++B) {
        Scalar s = zero;
        if (A >= 1) s += q[A - 1][B];
        if (B >= 1) s += q[A][B - 1];
        n[A][B] = s;
      }
    auto qq = divide_by_z_plus_w(n, zero);
    for (int a = 0; a <= K - 1; ++a)
      for (int b = 0; a + b <= K - 1; ++b) CHECK(qq[a][b] == q[a][b]);
  }
  // indivisible numerator
  auto bad = grid(2);
  bad[1][0] = one;
  CHECK_THROWS_AS(divide_by_z_plus_w(bad, zero), MathError);
}
