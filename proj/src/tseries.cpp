#include "gkm/tseries.hpp"

#include <algorithm>

namespace gkm {

namespace {

int total_deg(const Expo& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded-lex order used to pick the pivot monomial of a divisor.
bool expo_less(const Expo& a, const Expo& b) {
  int da = total_deg(a), db = total_deg(b);
  if (da != db) return da < db;
  return a < b;
}

// f must be divisible by the monomial beta; shifts exponents down by beta.
TSeries shift_down(const TSeries& f, const Expo& beta) {
  TSeries r(f.vars());
  for (const auto& [e, v] : f.terms()) {
    Expo g = e;
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] < beta[i]) throw MathError("series not divisible by pivot monomial");
      g[i] -= beta[i];
    }
    r.add_term(g, v);
  }
  return r;
}

}  // namespace

TSeries integrate_oneform(const OneForm& w) {
  if (w.c.empty()) throw MathError("integrate_oneform: empty form");
  const VarTablePtr& vt = w.c[0].vars();
  TSeries u(vt);
  for (int mu = 0; mu < w.dirs(); ++mu) {
    for (const auto& [e, v] : w.c[mu].terms()) {
      Expo a = e;
      a[mu] += 1;
      if (!u.within_caps(a)) continue;
      if (!u.coeff(a).is_zero()) continue;  // already produced by a smaller direction
      u.add_term(a, v * Scalar(Rational(1, a[mu])));
    }
  }
  // Closedness / exactness check at the representable degrees.
  int check_deg = vt->cap0 - 1;
  for (int mu = 0; mu < w.dirs(); ++mu) {
    if (!eq_to_degree(u.derivative(mu), w.c[mu], check_deg))
      throw MathError("1-form is not exact (closedness failure)");
  }
  return u;
}

TSeries divide_oneform(const OneForm& num, const OneForm& den) {
  const VarTablePtr& vt = den.c.empty() ? num.c[0].vars() : den.c[0].vars();
  // Pivot: direction whose component has the globally minimal monomial
  // (graded-lex), so the shifted divisor has a nonzero constant term.
  int pivot_mu = -1;
  Expo beta;
  for (int mu = 0; mu < den.dirs(); ++mu)
    for (const auto& [e, v] : den.c[mu].terms())
      if (pivot_mu < 0 || expo_less(e, beta)) {
        pivot_mu = mu;
        beta = e;
      }
  if (pivot_mu < 0) throw MathError("division by identically zero 1-form");

  TSeries h = shift_down(den.c[pivot_mu], beta);
  TSeries g = shift_down(num.c[pivot_mu], beta);
  TSeries x = g * h.inverse();

  int valid_deg = vt->cap0 - total_deg(beta);
  for (int mu = 0; mu < den.dirs(); ++mu) {
    if (!eq_to_degree(x * den.c[mu], num.c[mu], valid_deg))
      throw MathError("1-form division inconsistent across directions");
  }
  return x;
}

}  // namespace gkm
