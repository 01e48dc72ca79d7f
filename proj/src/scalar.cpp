#include "gkm/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gkm {

namespace {

// Product of two signed square-free radical indices:
//   sqrt(a) * sqrt(b) = sign * mult * sqrt(kernel)
// with the convention that a negative index d stands for i*sqrt(|d|).
struct RadProd {
  long long kernel;
  long long mult;
  int sign;
};

RadProd rad_mul(long long a, long long b) {
  long long g = std::gcd(std::llabs(a), std::llabs(b));
  long long kabs = (std::llabs(a) / g) * (std::llabs(b) / g);
  int neg = (a < 0 ? 1 : 0) + (b < 0 ? 1 : 0);
  RadProd r;
  r.mult = g;
  if (neg == 2) {
    r.sign = -1;
    r.kernel = kabs;
  } else if (neg == 1) {
    r.sign = 1;
    r.kernel = -kabs;
  } else {
    r.sign = 1;
    r.kernel = kabs;
  }
  return r;
}

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

Poly poly_div_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  Poly q(num.size() - den.size() + 1, Rational(0));
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Rational c = rem[i + den.size() - 1] / den.back();
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw MathError("cyclotomic polynomial division not exact");
  return q;
}

Poly cyclotomic_poly(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly phi_d = cyclotomic_poly(d);
    num = poly_div_exact(num, phi_d);
  }
  return num;
}

// Conductor of Q(sqrt(d)) for signed square-free d != 1.
long long quad_conductor(long long d) {
  long long m = ((d % 4) + 4) % 4;
  return m == 1 ? std::llabs(d) : 4 * std::llabs(d);
}

}  // namespace

ScalarContext::ScalarContext(int cyclotomic_order, const std::vector<long long>& radicands)
    : n_(cyclotomic_order) {
  if (n_ < 1) throw ConfigError("cyclotomic order must be >= 1");
  for (long long d : radicands) {
    if (d == 0) throw ConfigError("radicand 0 rejected");
    if (!is_squarefree(Int(d))) throw ConfigError("radicand not square-free: " + std::to_string(d));
    if (d != 1) declared_.push_back(d);
  }

  // Closure of the declared radicands under products (kernels only).
  kernels_.insert(1);
  for (long long d : declared_) {
    std::set<long long> next = kernels_;
    for (long long k : kernels_) next.insert(rad_mul(k, d).kernel);
    kernels_ = std::move(next);
  }
  for (long long k : kernels_) {
    if (k == 1) continue;
    if (n_ % quad_conductor(k) == 0)
      throw ConfigError("radicand " + std::to_string(k) + " lies in Q(zeta_" +
                        std::to_string(n_) + "); re-specialize weights");
  }

  Poly phi = cyclotomic_poly(n_);
  phi_ = static_cast<int>(phi.size()) - 1;

  // zeta^e in the power basis, e = 0..2n: step-and-reduce with the monic Phi_n.
  red_.resize(2 * n_ + 1);
  std::vector<Rational> cur(phi_, Rational(0));
  cur[0] = 1;
  red_[0] = cur;
  for (int e = 1; e <= 2 * n_; ++e) {
    std::vector<Rational> nxt(phi_, Rational(0));
    Rational top = cur[phi_ - 1];
    for (int i = phi_ - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi_; ++i) nxt[i] -= top * phi[i];
    cur = nxt;
    red_[e] = cur;
  }
}

const std::vector<Rational>& ScalarContext::zeta_power(long long e) const {
  e %= n_;
  if (e < 0) e += n_;
  return red_[e];
}

ContextPtr scalar_context(int cyclotomic_order, const std::vector<long long>& radicands) {
  return std::make_shared<const ScalarContext>(cyclotomic_order, radicands);
}

Scalar::Scalar(const Rational& r) {
  if (r != 0) terms_.push_back({1, 0, r});
}

Scalar::Scalar(const ContextPtr& ctx, std::vector<Term> terms) : ctx_(ctx), terms_(std::move(terms)) {
  normalize();
}

Scalar Scalar::zeta_pow(const ContextPtr& ctx, long long e) {
  const auto& red = ctx->zeta_power(e);
  std::vector<Term> ts;
  for (int i = 0; i < static_cast<int>(red.size()); ++i)
    if (red[i] != 0) ts.push_back({1, i, red[i]});
  return Scalar(ctx, std::move(ts));
}

Scalar Scalar::sqrt_rational(const ContextPtr& ctx, const Rational& r) {
  if (r == 0) return Scalar(Rational(0));
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  auto [root, sf] = squarefree_decompose(num * den);
  long long kernel = sf.convert_to<long long>();
  if (kernel != 1 && !ctx->radicand_allowed(kernel))
    throw MathError("sqrt radicand " + std::to_string(kernel) + " not declared in scalar context");
  Rational coef(root, den);
  return Scalar(ctx, {{kernel, 0, coef}});
}

bool Scalar::is_rational() const {
  for (const auto& t : terms_)
    if (t.rad != 1 || t.zpow != 0) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw MathError("scalar is not rational: " + str());
  return terms_[0].c;
}

void Scalar::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return std::tie(a.rad, a.zpow) < std::tie(b.rad, b.zpow);
  });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().rad == t.rad && out.back().zpow == t.zpow)
      out.back().c += t.c;
    else
      out.push_back(t);
    if (!out.empty() && out.back().c == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

ContextPtr Scalar::merge_ctx(const Scalar& a, const Scalar& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_)
    throw MathError("mixing scalars from different contexts");
  return a.ctx_ ? a.ctx_ : b.ctx_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  ctx_ = merge_ctx(*this, o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  ContextPtr ctx = merge_ctx(*this, o);
  std::vector<Term> out;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      RadProd rp = rad_mul(a.rad, b.rad);
      Rational c = a.c * b.c * rp.mult * rp.sign;
      long long e = static_cast<long long>(a.zpow) + b.zpow;
      if (e == 0) {
        out.push_back({rp.kernel, 0, c});
      } else {
        if (!ctx) throw MathError("zeta power without context");
        const auto& red = ctx->zeta_power(e);
        for (int i = 0; i < static_cast<int>(red.size()); ++i)
          if (red[i] != 0) out.push_back({rp.kernel, i, c * red[i]});
      }
    }
  }
  ctx_ = ctx;
  terms_ = std::move(out);
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].rad != o.terms_[i].rad) return false;
    if (terms_[i].zpow != o.terms_[i].zpow) return false;
    if (terms_[i].c != o.terms_[i].c) return false;
  }
  return true;
}

bool Scalar::operator<(const Scalar& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    const Term &a = terms_[i], &b = o.terms_[i];
    if (a.rad != b.rad) return a.rad < b.rad;
    if (a.zpow != b.zpow) return a.zpow < b.zpow;
    if (a.c != b.c) return a.c < b.c;
  }
  return terms_.size() < o.terms_.size();
}

Scalar Scalar::conj() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Rational c = t.rad < 0 ? -t.c : t.c;
    if (t.zpow == 0) {
      out.push_back({t.rad, 0, c});
    } else {
      const auto& red = ctx_->zeta_power(ctx_->order() - t.zpow);
      for (int i = 0; i < static_cast<int>(red.size()); ++i)
        if (red[i] != 0) out.push_back({t.rad, i, c * red[i]});
    }
  }
  return Scalar(ctx_, std::move(out));
}

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw MathError("division by zero scalar");
  if (is_rational()) {
    Scalar r;
    r.ctx_ = ctx_;
    r.terms_.push_back({1, 0, Rational(1) / terms_[0].c});
    return r;
  }
  // Solve this * x = 1 in the finite-dimensional Q-algebra with basis
  // { sqrt(k) * zeta^j : k in kernels, 0 <= j < phi }.
  const auto& kernels = ctx_->kernels();
  std::vector<long long> ks(kernels.begin(), kernels.end());
  int phi = ctx_->degree();
  int dim = static_cast<int>(ks.size()) * phi;
  auto idx = [&](long long rad, int zpow) {
    int ki = static_cast<int>(std::lower_bound(ks.begin(), ks.end(), rad) - ks.begin());
    return ki * phi + zpow;
  };
  // Column j of M = coordinates of this * basis_j.
  std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim + 1, Rational(0)));
  for (int j = 0; j < dim; ++j) {
    Scalar bj(ctx_, {{ks[j / phi], j % phi, Rational(1)}});
    Scalar prod = *this * bj;
    for (const auto& t : prod.terms_) M[idx(t.rad, t.zpow)][j] = t.c;
  }
  M[idx(1, 0)][dim] = 1;
  // Gaussian elimination, exact.
  for (int col = 0, row = 0; col < dim && row < dim; ++col, ++row) {
    int piv = -1;
    for (int r = row; r < dim; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw MathError("scalar not invertible (zero divisor?)");
    std::swap(M[row], M[piv]);
    Rational p = M[row][col];
    for (int c = col; c <= dim; ++c) M[row][c] /= p;
    for (int r = 0; r < dim; ++r) {
      if (r == row || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (int c = col; c <= dim; ++c) M[r][c] -= f * M[row][c];
    }
  }
  std::vector<Term> out;
  for (int j = 0; j < dim; ++j)
    if (M[j][dim] != 0) out.push_back({ks[j / phi], j % phi, M[j][dim]});
  return Scalar(ctx_, std::move(out));
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (i) s += " + ";
    s += rational_to_string(t.c);
    if (t.zpow != 0)
      s += "*zeta" + std::to_string(ctx_->order()) + "^" + std::to_string(t.zpow);
    if (t.rad != 1) s += "*sqrt(" + std::to_string(t.rad) + ")";
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

void strip_ws(std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  s = out;
}

Scalar parse_factor(const ContextPtr& ctx, const std::string& f) {
  if (f.rfind("zeta", 0) == 0) {
    size_t pos = 4;
    long long order = ctx->order();
    size_t caret = f.find('^');
    std::string order_str = f.substr(pos, (caret == std::string::npos ? f.size() : caret) - pos);
    if (!order_str.empty()) {
      order = std::stoll(order_str);
      if (order <= 0 || ctx->order() % order != 0)
        throw ConfigError("zeta order " + order_str + " does not divide context order");
    }
    long long k = 1;
    if (caret != std::string::npos) k = std::stoll(f.substr(caret + 1));
    return Scalar::zeta_pow(ctx, k * (ctx->order() / order));
  }
  if (f.rfind("sqrt(", 0) == 0) {
    if (f.back() != ')') throw ConfigError("bad sqrt factor: " + f);
    long long m = std::stoll(f.substr(5, f.size() - 6));
    return Scalar::sqrt_rational(ctx, Rational(m));
  }
  return Scalar(rational_from_string(f));
}

}  // namespace

Scalar parse_scalar(const ContextPtr& ctx, const std::string& text) {
  std::string s = text;
  strip_ws(s);
  if (s.empty()) throw ConfigError("empty scalar literal");
  Scalar sum(Rational(0));
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos + 1);
    if (next == std::string::npos) next = s.size();
    std::string term = s.substr(pos, next - pos);
    pos = next + 1;
    if (term.empty()) continue;
    bool neg = false;
    if (term[0] == '-') {
      neg = true;
      term = term.substr(1);
    }
    Scalar prod(Rational(1));
    size_t tp = 0;
    while (tp < term.size()) {
      size_t star = term.find('*', tp);
      if (star == std::string::npos) star = term.size();
      prod *= parse_factor(ctx, term.substr(tp, star - tp));
      tp = star + 1;
    }
    sum += neg ? -prod : prod;
  }
  return sum;
}

}  // namespace gkm
