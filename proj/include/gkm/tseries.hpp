#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gkm/scalar.hpp"

namespace gkm {

// Variable table shared by all series of one computation.  Variables come in
// two grading groups with independent total-degree caps: group 0 holds the
// coordinate and Novikov-type variables (t^mu, q_j), group 1 holds leaf
// insertion variables; products exceeding either cap are dropped.
struct VarTable {
  std::vector<std::string> names;
  std::vector<int> grp;  // 0 or 1 per variable
  int cap0 = 0;
  int cap1 = 0;
};
using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_var_table(std::vector<std::string> names, std::vector<int> grp,
                                  int cap0, int cap1) {
  auto vt = std::make_shared<VarTable>();
  vt->names = std::move(names);
  vt->grp = std::move(grp);
  vt->cap0 = cap0;
  vt->cap1 = cap1;
  return vt;
}

using Expo = std::vector<uint16_t>;

// Truncated multivariate polynomial over Scalar with deterministic (ordered)
// term storage.
class TSeries {
 public:
  TSeries() = default;
  explicit TSeries(VarTablePtr vt) : vt_(std::move(vt)) {}
  TSeries(VarTablePtr vt, const Scalar& konst) : vt_(std::move(vt)) {
    if (!konst.is_zero()) c_[Expo(vt_->names.size(), 0)] = konst;
  }

  static TSeries variable(const VarTablePtr& vt, int i, const Scalar& coef = Scalar(Rational(1))) {
    TSeries s(vt);
    Expo e(vt->names.size(), 0);
    e[i] = 1;
    s.add_term(e, coef);
    return s;
  }

  const VarTablePtr& vars() const { return vt_; }
  const std::map<Expo, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int num_vars() const { return static_cast<int>(vt_->names.size()); }

  int deg0(const Expo& e) const {
    int d = 0;
    for (int i = 0; i < num_vars(); ++i)
      if (vt_->grp[i] == 0) d += e[i];
    return d;
  }
  int deg1(const Expo& e) const {
    int d = 0;
    for (int i = 0; i < num_vars(); ++i)
      if (vt_->grp[i] == 1) d += e[i];
    return d;
  }
  bool within_caps(const Expo& e) const { return deg0(e) <= vt_->cap0 && deg1(e) <= vt_->cap1; }

  void add_term(const Expo& e, const Scalar& v) {
    if (v.is_zero() || !within_caps(e)) return;
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  Scalar coeff(const Expo& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Scalar(Rational(0)) : it->second;
  }
  Scalar constant_term() const { return coeff(Expo(num_vars(), 0)); }

  TSeries operator-() const {
    TSeries r(vt_);
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
  }
  TSeries& operator+=(const TSeries& o) {
    check_same(o);
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
  }
  TSeries& operator-=(const TSeries& o) {
    check_same(o);
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
  }
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }

  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    a.check_same(b);
    TSeries r(a.vt_);
    for (const auto& [ea, va] : a.c_) {
      for (const auto& [eb, vb] : b.c_) {
        Expo e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (!r.within_caps(e)) continue;
        r.add_term(e, va * vb);
      }
    }
    return r;
  }
  TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

  TSeries operator*(const Scalar& s) const {
    TSeries r(vt_);
    if (s.is_zero()) return r;
    for (const auto& [e, v] : c_) r.c_[e] = v * s;
    return r;
  }

  bool operator==(const TSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TSeries& o) const { return !(*this == o); }

  int min_deg0() const {
    int m = -1;
    for (const auto& [e, v] : c_) {
      int d = deg0(e);
      if (m < 0 || d < m) m = d;
    }
    return m;  // -1 for zero series
  }

  TSeries derivative(int i) const {
    TSeries r(vt_);
    for (const auto& [e, v] : c_) {
      if (e[i] == 0) continue;
      Expo f = e;
      f[i] -= 1;
      r.add_term(f, v * Scalar(Rational(e[i])));
    }
    return r;
  }

  // Termwise antiderivative in direction i with zero constant; terms pushed
  // beyond the caps are dropped (they belong to the next truncation order).
  TSeries integrate(int i) const {
    TSeries r(vt_);
    for (const auto& [e, v] : c_) {
      Expo f = e;
      f[i] += 1;
      if (!within_caps(f)) continue;
      r.add_term(f, v * Scalar(Rational(1, f[i])));
    }
    return r;
  }

  TSeries subst_zero(int i) const {
    TSeries r(vt_);
    for (const auto& [e, v] : c_)
      if (e[i] == 0) r.add_term(e, v);
    return r;
  }

  // Replace variable i by the series x (same table).
  TSeries substitute(int i, const TSeries& x) const {
    TSeries r(vt_);
    for (const auto& [e, v] : c_) {
      Expo base = e;
      int p = base[i];
      base[i] = 0;
      TSeries term(vt_);
      term.add_term(base, v);
      for (int j = 0; j < p; ++j) term = term * x;
      r += term;
    }
    return r;
  }

  // f(X) for a univariate series f given by its coefficient callback and a
  // zero-constant argument X; the sum terminates once X^k vanishes.
  static TSeries apply_series(const std::function<Scalar(int)>& f_coeff, const TSeries& x) {
    TSeries r(x.vt_, f_coeff(0));
    TSeries xp(x.vt_, Scalar(Rational(1)));
    int kmax = x.vt_->cap0 + x.vt_->cap1;
    for (int k = 1; k <= kmax; ++k) {
      xp = xp * x;
      if (xp.is_zero()) break;
      r += xp * f_coeff(k);
    }
    return r;
  }

  TSeries exp() const {
    if (!constant_term().is_zero()) throw MathError("series exp needs zero constant term");
    return apply_series([](int k) { return Scalar(Rational(Int(1), factorial(k))); }, *this);
  }

  TSeries inverse() const {
    Scalar c0 = constant_term();
    if (c0.is_zero()) throw MathError("series inverse needs nonzero constant term");
    Scalar c0inv = c0.inverse();
    TSeries u = (*this) * c0inv;
    u.add_term(Expo(num_vars(), 0), Scalar(Rational(-1)));  // u = this/c0 - 1
    TSeries inv = apply_series(
        [](int k) { return Scalar(Rational(k % 2 ? -1 : 1)); }, u);
    return inv * c0inv;
  }

  // Square root; the constant term must be a nonzero rational whose kernel is
  // declared in ctx.
  TSeries sqrt(const ContextPtr& ctx) const {
    Scalar c0 = constant_term();
    Rational c0r = c0.rational_value();
    if (c0r == 0) throw MathError("series sqrt needs nonzero constant term");
    Scalar root0 = Scalar::sqrt_rational(ctx, c0r);
    TSeries u = (*this) * c0.inverse();
    u.add_term(Expo(num_vars(), 0), Scalar(Rational(-1)));
    TSeries s = apply_series([](int k) { return Scalar(binomial_half(k)); }, u);
    return s * root0;
  }

  TSeries truncated(int new_cap0) const {
    TSeries r(vt_);
    for (const auto& [e, v] : c_)
      if (deg0(e) <= new_cap0) r.c_[e] = v;
    return r;
  }

  // Re-embed into a larger variable table; index_map[i] = new index of var i.
  TSeries remap(const VarTablePtr& nvt, const std::vector<int>& index_map) const {
    TSeries r(nvt);
    for (const auto& [e, v] : c_) {
      Expo f(nvt->names.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) f[index_map[i]] = e[i];
      r.add_term(f, v);
    }
    return r;
  }

  std::string str() const;

 private:
  void check_same(const TSeries& o) const {
    if (vt_ != o.vt_) throw MathError("mixing series over different variable tables");
  }

  VarTablePtr vt_;
  std::map<Expo, Scalar> c_;
};

inline std::string monomial_str(const VarTable& vt, const Expo& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vt.names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string TSeries::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [e, v] : c_) {
    if (!s.empty()) s += "  +  ";
    s += "(" + v.str() + ")*" + monomial_str(*vt_, e);
  }
  return s;
}

inline bool eq_to_degree(const TSeries& a, const TSeries& b, int deg) {
  TSeries d = a - b;
  for (const auto& [e, v] : d.terms())
    if (d.deg0(e) <= deg) return false;
  return true;
}

// A 1-form sum_mu c_mu dt^mu over the first n_dirs (coordinate) variables.
struct OneForm {
  std::vector<TSeries> c;

  OneForm() = default;
  OneForm(const VarTablePtr& vt, int n_dirs) : c(n_dirs, TSeries(vt)) {}
  int dirs() const { return static_cast<int>(c.size()); }

  OneForm operator-() const {
    OneForm r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  OneForm& operator+=(const OneForm& o) {
    for (int i = 0; i < dirs(); ++i) c[i] += o.c[i];
    return *this;
  }
  OneForm& operator-=(const OneForm& o) {
    for (int i = 0; i < dirs(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  OneForm operator*(const TSeries& f) const {
    OneForm r = *this;
    for (auto& x : r.c) x = x * f;
    return r;
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  bool operator==(const OneForm& o) const { return c == o.c; }
};

inline OneForm differential(const TSeries& f, int n_dirs) {
  OneForm w(f.vars(), n_dirs);
  for (int i = 0; i < n_dirs; ++i) w.c[i] = f.derivative(i);
  return w;
}

// Antiderivative with zero constant term; verifies closedness up to the
// truncation (du = w to coefficient degree cap0 - 1).
TSeries integrate_oneform(const OneForm& w);

// Solve x * den = num for a scalar series x; throws MathError when the
// division is impossible.  Handles denominators whose lowest term is a
// nonconstant monomial (graded division).
TSeries divide_oneform(const OneForm& num, const OneForm& den);

}  // namespace gkm
