#include "gkm/psi.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gkm {

namespace {

using Key = std::pair<int, std::vector<int>>;
std::map<Key, Rational> memo;
std::mutex memo_mutex;

std::vector<int> without(const std::vector<int>& v, size_t drop) {
  std::vector<int> r;
  r.reserve(v.size() - 1);
  for (size_t i = 0; i < v.size(); ++i)
    if (i != drop) r.push_back(v[i]);
  return r;
}

Rational compute(int g, const std::vector<int>& a);

Rational psi_rec(int g, std::vector<int> a) {
  for (int x : a)
    if (x < 0) return 0;
  int n = static_cast<int>(a.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return 0;
  long long sum = 0;
  for (int x : a) sum += x;
  if (sum != 3LL * g - 3 + n) return 0;
  if (g == 0 && n == 3) return 1;               // Mbar_{0,3} is a point
  if (g == 1 && n == 1) return Rational(1, 24);  // <tau_1>_1

  std::sort(a.begin(), a.end());
  Key key{g, a};
  {
    std::lock_guard<std::mutex> lk(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  Rational val = compute(g, a);
  std::lock_guard<std::mutex> lk(memo_mutex);
  memo.emplace(key, val);
  return val;
}

Rational compute(int g, const std::vector<int>& a) {
  size_t n = a.size();

  // String equation.
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != 0) continue;
    std::vector<int> rest = without(a, i);
    Rational s = 0;
    for (size_t j = 0; j < rest.size(); ++j) {
      std::vector<int> next = rest;
      next[j] -= 1;
      s += psi_rec(g, next);
    }
    return s;
  }
  // Dilaton equation.
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != 1) continue;
    std::vector<int> rest = without(a, i);
    return Rational(2 * g - 2 + static_cast<int>(rest.size())) * psi_rec(g, rest);
  }

  // DVV recursion on the largest exponent (all entries >= 2 here).
  size_t imax = 0;
  for (size_t i = 1; i < n; ++i)
    if (a[i] > a[imax]) imax = i;
  int k = a[imax] - 1;
  std::vector<int> rest = without(a, imax);
  size_t m = rest.size();

  Rational acc = 0;
  for (size_t j = 0; j < m; ++j) {
    std::vector<int> next = rest;
    next[j] += k;
    acc += Rational(double_factorial_odd(k + rest[j]), double_factorial_odd(rest[j] - 1)) *
           psi_rec(g, next);
  }
  Rational half_sum = 0;
  for (int b = 0; b <= k - 1; ++b) {
    int b2 = k - 1 - b;
    Rational coef(double_factorial_odd(b) * double_factorial_odd(b2));
    // Nonseparating: genus drops by one, both new insertions on one vertex.
    std::vector<int> joined = rest;
    joined.push_back(b);
    joined.push_back(b2);
    Rational contrib = psi_rec(g - 1, joined);
    // Separating: ordered splits of genus and of the remaining insertions.
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      std::vector<int> left{b}, right{b2};
      for (size_t j = 0; j < m; ++j)
        (mask >> j & 1UL ? left : right).push_back(rest[j]);
      for (int g1 = 0; g1 <= g; ++g1) {
        Rational l = psi_rec(g1, left);
        if (l == 0) continue;
        contrib += l * psi_rec(g - g1, right);
      }
    }
    half_sum += coef * contrib;
  }
  acc += half_sum / 2;
  return acc / Rational(double_factorial_odd(k + 1));
}

}  // namespace

Rational psi_intersection(int g, std::vector<int> exponents) {
  return psi_rec(g, std::move(exponents));
}

}  // namespace gkm
