#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

// Shared arithmetic context: a fixed primitive root of unity of order n and a
// fixed multiplicative span of square roots.  Negative radicands are allowed
// and denote i*sqrt(|d|); the radicand -1 is the imaginary unit.  A context is
// rejected when some product of declared radicands already lies in Q(zeta_n),
// since then the canonical form below would not be faithful.
class ScalarContext {
 public:
  ScalarContext(int cyclotomic_order, const std::vector<long long>& radicands);

  int order() const { return n_; }
  int degree() const { return phi_; }  // [Q(zeta_n) : Q]

  // zeta^e reduced into the power basis zeta^0..zeta^{phi-1}; e arbitrary.
  const std::vector<Rational>& zeta_power(long long e) const;

  bool radicand_allowed(long long squarefree) const {
    return kernels_.count(squarefree) != 0;
  }
  const std::set<long long>& kernels() const { return kernels_; }

 private:
  int n_;
  int phi_;
  std::vector<long long> declared_;
  std::set<long long> kernels_;            // closure of radicand products, incl. 1
  std::vector<std::vector<Rational>> red_;  // zeta^e for e = 0..2n
};

using ContextPtr = std::shared_ptr<const ScalarContext>;

ContextPtr scalar_context(int cyclotomic_order, const std::vector<long long>& radicands);

// An exact element of Q(zeta_n)(sqrt(d_1), ..., sqrt(d_k)): a sum of terms
// c * sqrt(rad) * zeta^zpow in canonical form (rad a signed square-free kernel,
// 0 <= zpow < phi(n), terms sorted, no zero coefficients).  Equality and the
// zero test are coefficient comparisons.  Pure rationals may carry a null
// context and adopt one on first mixed operation.
class Scalar {
 public:
  struct Term {
    long long rad;
    int zpow;
    Rational c;
  };

  Scalar() = default;
  Scalar(const Rational& r);                     // NOLINT: implicit by design
  Scalar(long long v) : Scalar(Rational(v)) {}   // NOLINT
  Scalar(const ContextPtr& ctx, std::vector<Term> terms);

  static Scalar zeta_pow(const ContextPtr& ctx, long long e);
  // sqrt of a nonzero rational; throws MathError if the kernel is undeclared.
  static Scalar sqrt_rational(const ContextPtr& ctx, const Rational& r);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // throws if not rational

  const std::vector<Term>& terms() const { return terms_; }
  const ContextPtr& context() const { return ctx_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order compatible with equality, used for deterministic containers.
  bool operator<(const Scalar& o) const;

  Scalar conj() const;     // ring automorphism: zeta -> zeta^{-1}, sqrt(-d) -> -sqrt(-d)
  Scalar inverse() const;  // field inverse of a nonzero element

  std::string str() const;

 private:
  void normalize();
  static ContextPtr merge_ctx(const Scalar& a, const Scalar& b);

  ContextPtr ctx_;            // may be null when all terms are rational
  std::vector<Term> terms_;   // canonical: sorted by (rad, zpow), nonzero c
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Parses the literal grammar "a/b * zeta^k * sqrt(m)" summed with "+"
// (also accepts "zeta{m}^k" with an explicit order dividing the context's).
Scalar parse_scalar(const ContextPtr& ctx, const std::string& text);

}  // namespace gkm
