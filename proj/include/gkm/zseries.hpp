#pragma once

#include <vector>

#include "gkm/matrix.hpp"
#include "gkm/scalar.hpp"
#include "gkm/tseries.hpp"

namespace gkm {

inline Scalar rscale(const Scalar& x, const Rational& r) { return x * Scalar(r); }
inline TSeries rscale(const TSeries& x, const Rational& r) { return x * Scalar(r); }
template <class T>
Mat<T> rscale(const Mat<T>& m, const Rational& r) {
  Mat<T> out = m;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = rscale(m.at(i, j), r);
  return out;
}

inline bool coeff_is_zero(const Scalar& x) { return x.is_zero(); }
inline bool coeff_is_zero(const TSeries& x) { return x.is_zero(); }
template <class T>
bool coeff_is_zero(const Mat<T>& m) {
  return m.is_zero();
}

// Truncated formal series in the spectral variable z with coefficients in an
// exact ring (scalars or matrices, possibly with TSeries entries).  Laurent
// style: exponents run from `low` (may be negative) up to the truncation
// order K.
template <class T>
class ZSeries {
 public:
  ZSeries() = default;
  ZSeries(int low, int K, const T& zero) : low_(low), K_(K), zero_(zero), c_(K - low + 1, zero) {}

  int low() const { return low_; }
  int order() const { return K_; }
  const T& zero() const { return zero_; }

  const T& coeff(int k) const {
    if (k < low_ || k > K_) return zero_;
    return c_[k - low_];
  }
  void set_coeff(int k, const T& v) {
    if (k < low_ || k > K_) throw MathError("z-series coefficient out of range");
    c_[k - low_] = v;
  }

  ZSeries operator-() const {
    ZSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    int low = std::min(a.low_, b.low_);
    int K = std::min(a.K_, b.K_);
    ZSeries r(low, K, a.zero_);
    for (int k = low; k <= K; ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
  }
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    int low = a.low_ + b.low_;
    int K = std::min(a.K_ + b.low_, b.K_ + a.low_);
    K = std::min(K, std::min(a.K_, b.K_));  // never exceed either truncation
    ZSeries r(low, K, a.zero_);
    for (int i = a.low_; i <= a.K_; ++i)
      for (int j = b.low_; j <= b.K_; ++j) {
        int k = i + j;
        if (k < low || k > K) continue;
        r.set_coeff(k, r.coeff(k) + a.coeff(i) * b.coeff(j));
      }
    return r;
  }

  bool operator==(const ZSeries& o) const {
    int low = std::min(low_, o.low_), K = std::min(K_, o.K_);
    for (int k = low; k <= K; ++k)
      if (!coeff_is_zero(coeff(k) - o.coeff(k))) return false;
    return true;
  }

  // a(z) -> a(-z)
  ZSeries at_neg_z() const {
    ZSeries r = *this;
    for (int k = low_; k <= K_; ++k)
      if (((k % 2) + 2) % 2 == 1) r.set_coeff(k, -coeff(k));
    return r;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!coeff_is_zero(x)) return false;
    return true;
  }

 private:
  int low_ = 0, K_ = 0;
  T zero_;
  std::vector<T> c_;
};

// exp(a) for a series supported in strictly positive z-degrees; the identity
// element of the coefficient ring must be supplied.
template <class T>
ZSeries<T> series_exp(const ZSeries<T>& a, const T& one) {
  for (int k = a.low(); k <= 0; ++k)
    if (!coeff_is_zero(a.coeff(k)))
      throw MathError("series_exp: nonzero coefficient in degree <= 0");
  int K = a.order();
  ZSeries<T> result(0, K, a.zero());
  result.set_coeff(0, one);
  ZSeries<T> power = result;  // a^0 scaled below
  Rational inv_fact = 1;
  for (int j = 1; j <= K; ++j) {
    power = power * a;
    if (power.is_zero()) break;
    inv_fact /= j;
    for (int k = 0; k <= K; ++k) {
      T add = rscale(power.coeff(k), inv_fact);
      result.set_coeff(k, result.coeff(k) + add);
    }
  }
  return result;
}

// q with q(z,w) * (z+w) = num, for a bivariate grid num[a][b], a,b = 0..K.
// Requires num(z,-z) = 0 up to order K; returns q[a][b] for a+b <= K-1.
template <class T>
std::vector<std::vector<T>> divide_by_z_plus_w(const std::vector<std::vector<T>>& num,
                                               const T& zero) {
  int K = static_cast<int>(num.size()) - 1;
  for (int k = 0; k <= K; ++k) {
    T s = zero;
    for (int a = 0; a <= k; ++a) {
      int b = k - a;
      T term = num[a][b];
      if (b % 2) term = -term;
      s += term;
    }
    if (!coeff_is_zero(s))
      throw MathError("edge numerator not divisible; R-matrix not unitary");
  }
  std::vector<std::vector<T>> q(K + 1, std::vector<T>(K + 1, zero));
  // num_{A,B} = q_{A-1,B} + q_{A,B-1}; solve along b.
  for (int a = K - 1; a >= 0; --a) q[a][0] = num[a + 1][0];
  for (int b = 1; b <= K - 1; ++b)
    for (int a = K - 1 - b; a >= 0; --a) q[a][b] = num[a + 1][b] - q[a + 1][b - 1];
  return q;
}

// Promote a matrix of scalars to a matrix of constant series.
inline Mat<TSeries> promote(const Mat<Scalar>& m, const VarTablePtr& vt) {
  Mat<TSeries> out(m.rows(), m.cols(), TSeries(vt));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = TSeries(vt, m.at(i, j));
  return out;
}

inline Mat<Scalar> constant_part(const Mat<TSeries>& m) {
  Mat<Scalar> out(m.rows(), m.cols(), Scalar(Rational(0)));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).constant_term();
  return out;
}

// Inverse of a series matrix whose constant part is invertible:
// (M0 + M+)^{-1} = sum (-M0^{-1} M+)^j M0^{-1}.
inline Mat<TSeries> mat_inverse_series(const Mat<TSeries>& m) {
  const VarTablePtr& vt = m.zero().vars();
  int n = m.rows();
  Mat<Scalar> m0 = constant_part(m);
  Mat<Scalar> m0inv = mat_inverse(m0, Scalar(Rational(1)));
  Mat<TSeries> m0inv_s = promote(m0inv, vt);
  Mat<TSeries> x = m0inv_s * m - Mat<TSeries>::identity(n, TSeries(vt), TSeries(vt, Scalar(Rational(1))));
  Mat<TSeries> acc = m0inv_s;
  Mat<TSeries> pow = m0inv_s;
  for (int j = 1; j <= vt->cap0; ++j) {
    pow = rscale(x * pow, Rational(-1));
    if (pow.is_zero()) break;
    acc += pow;
  }
  return acc;
}

}  // namespace gkm
