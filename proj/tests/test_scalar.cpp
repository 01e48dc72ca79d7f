#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkm/scalar.hpp"

using namespace gkm;

namespace {

Scalar random_scalar(const ContextPtr& ctx, std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 3);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<long long> kernels(ctx->kernels().begin(), ctx->kernels().end());
  std::uniform_int_distribution<size_t> kpick(0, kernels.size() - 1);
  std::uniform_int_distribution<int> zpick(0, ctx->degree() - 1);
  Scalar s(Rational(0));
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Rational c(num(rng), den(rng));
    if (c == 0) c = 1;
    Scalar term(ctx, {{kernels[kpick(rng)], zpick(rng), c}});
    s += term;
  }
  if (!allow_zero && s.is_zero()) s += Scalar(Rational(1));
  return s;
}

}  // namespace

TEST_CASE("degenerate tower is plain rationals") {
  auto ctx = scalar_context(1, {});
  CHECK(ctx->degree() == 1);
  Scalar a(Rational(2, 3)), b(Rational(-1, 6));
  CHECK((a + b) == Scalar(Rational(1, 2)));
  CHECK((a * b).rational_value() == Rational(-1, 9));
}

TEST_CASE("cyclotomic order 3: zeta^2 + zeta + 1 = 0") {
  auto ctx = scalar_context(3, {});
  Scalar z = Scalar::zeta_pow(ctx, 1);
  Scalar s = z * z + z + Scalar(Rational(1));
  CHECK(s.is_zero());
  CHECK(Scalar::zeta_pow(ctx, 3) == Scalar(Rational(1)));
}

TEST_CASE("multi-quadratic tower against a hand multiplication table") {
  auto ctx = scalar_context(1, {2, 3});
  Scalar r2 = Scalar::sqrt_rational(ctx, Rational(2));
  Scalar r3 = Scalar::sqrt_rational(ctx, Rational(3));
  Scalar r6 = r2 * r3;
  CHECK(r6 == Scalar::sqrt_rational(ctx, Rational(6)));
  CHECK((r6 * r6) == Scalar(Rational(6)));
  CHECK((r2 * r2) == Scalar(Rational(2)));
  // brute-force table on basis (1, s2, s3, s6): s2*s6 = 2*s3, s3*s6 = 3*s2
  CHECK((r2 * r6) == r3 * Scalar(Rational(2)));
  CHECK((r3 * r6) == r2 * Scalar(Rational(3)));
  // sqrt of a rational with square part and denominator
  CHECK(Scalar::sqrt_rational(ctx, Rational(8)) == r2 * Scalar(Rational(2)));
  CHECK(Scalar::sqrt_rational(ctx, Rational(3, 4)) == r3 * Scalar(Rational(1, 2)));
}

TEST_CASE("imaginary radicands") {
  auto ctx = scalar_context(3, {-2, 2});  // conductors 8 and 8 do not divide 3
  Scalar i2 = Scalar::sqrt_rational(ctx, Rational(-2));
  CHECK((i2 * i2) == Scalar(Rational(-2)));
  Scalar r2 = Scalar::sqrt_rational(ctx, Rational(2));
  Scalar prod = i2 * r2;  // = 2 sqrt(-1)
  CHECK((prod * prod) == Scalar(Rational(-4)));
  CHECK(i2.conj() == -i2);
  CHECK(r2.conj() == r2);
}

TEST_CASE("contexts with radicands inside the cyclotomic field are rejected") {
  CHECK_THROWS_AS(scalar_context(8, {2}), ConfigError);    // sqrt(2) in Q(zeta_8)
  CHECK_THROWS_AS(scalar_context(12, {3}), ConfigError);   // sqrt(3) in Q(zeta_12)
  CHECK_THROWS_AS(scalar_context(4, {-1}), ConfigError);   // i in Q(zeta_4)
  CHECK_THROWS_AS(scalar_context(5, {5}), ConfigError);    // sqrt(5) in Q(zeta_5)
  CHECK_THROWS_AS(scalar_context(3, {-3}), ConfigError);   // sqrt(-3) in Q(zeta_3)
  CHECK_THROWS_AS(scalar_context(3, {12}), ConfigError);   // not square-free
  CHECK_NOTHROW(scalar_context(12, {2, 5}));
  CHECK_NOTHROW(scalar_context(7, {-1}));
}

TEST_CASE("field axioms on random triples") {
  auto ctx = scalar_context(12, {2, 5});
  std::mt19937 rng(20240811);
  for (int it = 0; it < 1000; ++it) {
    Scalar a = random_scalar(ctx, rng);
    Scalar b = random_scalar(ctx, rng);
    Scalar c = random_scalar(ctx, rng);
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("inverses and division") {
  auto ctx = scalar_context(12, {2, 5});
  std::mt19937 rng(7);
  Scalar one(Rational(1));
  for (int it = 0; it < 60; ++it) {
    Scalar a = random_scalar(ctx, rng, /*allow_zero=*/false);
    CHECK((a * a.inverse()) == one);
    Scalar b = random_scalar(ctx, rng);
    CHECK((b / a) * a == b);
  }
  CHECK_THROWS_AS(Scalar(Rational(0)).inverse(), MathError);
}

TEST_CASE("conjugation is an involutive automorphism") {
  auto ctx = scalar_context(12, {2, 5});
  std::mt19937 rng(99);
  for (int it = 0; it < 200; ++it) {
    Scalar a = random_scalar(ctx, rng);
    Scalar b = random_scalar(ctx, rng);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  // real subfield fixed
  Scalar r = Scalar::sqrt_rational(ctx, Rational(10)) + Scalar(Rational(7, 3));
  CHECK(r.conj() == r);
  // zeta -> zeta^{-1}
  Scalar z = Scalar::zeta_pow(ctx, 1);
  CHECK(z.conj() == Scalar::zeta_pow(ctx, 11));
  CHECK((z * z.conj()) == Scalar(Rational(1)));
}

TEST_CASE("literal grammar round trip") {
  auto ctx = scalar_context(12, {2, 5});
  std::mt19937 rng(4242);
  for (int it = 0; it < 100; ++it) {
    Scalar a = random_scalar(ctx, rng);
    CHECK(parse_scalar(ctx, a.str()) == a);
  }
  CHECK(parse_scalar(ctx, "1/2 * zeta12^3 * sqrt(2)") ==
        Scalar(Rational(1, 2)) * Scalar::zeta_pow(ctx, 3) * Scalar::sqrt_rational(ctx, Rational(2)));
  CHECK(parse_scalar(ctx, "zeta4^1") == Scalar::zeta_pow(ctx, 3));  // embedded smaller order
  CHECK(parse_scalar(ctx, "-2 + 1/3*sqrt(10)") ==
        Scalar(Rational(-2)) + Scalar(Rational(1, 3)) * Scalar::sqrt_rational(ctx, Rational(10)));
}
