#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace gkm {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised on malformed inputs (files, flags, literals). CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a mathematical validation fails (orthogonality, associativity,
// unitarity, divisibility). CLI exit code 3.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// n = root^2 * sf with sf square-free.  Sign of n is carried by sf.
// Trial division; inputs here are desk-scale products of weights.
inline std::pair<Int, Int> squarefree_decompose(Int n) {
  if (n == 0) throw MathError("squarefree_decompose: zero radicand");
  Int sign = n < 0 ? -1 : 1;
  if (n < 0) n = -n;
  Int root = 1, sf = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) sf *= p;
  }
  sf *= n;
  return {root, sf * sign};
}

inline bool is_squarefree(Int n) {
  if (n == 0) return false;
  return squarefree_decompose(n).first == 1;
}

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// (2n+1)!! with the convention (-1)!! = 1.
inline Int double_factorial_odd(int n) {
  Int r = 1;
  for (int i = 2 * n + 1; i >= 1; i -= 2) r *= i;
  return r;
}

inline Rational binomial_half(int k) {
  // Coefficient of u^k in (1+u)^{1/2}.
  Rational c = 1;
  for (int j = 0; j < k; ++j) {
    c *= Rational(1, 2) - j;
    c /= j + 1;
  }
  return c;
}

inline std::string rational_to_string(const Rational& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in rational literal: " + s);
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw ConfigError("bad rational literal: " + s);
  }
}

}  // namespace gkm
