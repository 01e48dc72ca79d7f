#include "gkm/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace gkm {

namespace {

Rational binom(int n, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<Rational>& bern_cache() {
  static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
  return cache;
}
std::mutex bern_mutex;

}  // namespace

Rational bernoulli_number(int m) {
  std::lock_guard<std::mutex> lk(bern_mutex);
  auto& cache = bern_cache();
  // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1
  while (static_cast<int>(cache.size()) <= m) {
    int n = static_cast<int>(cache.size());
    Rational s = 0;
    for (int j = 0; j < n; ++j) s += binom(n + 1, j) * cache[j];
    cache.push_back(-s / (n + 1));
  }
  return cache[m];
}

Rational bernoulli_polynomial(int m, const Rational& x) {
  if (m < 0 || m > kMaxBernoulliDegree)
    throw ConfigError("bernoulli_polynomial degree out of range: " + std::to_string(m));
  Rational acc = 0;
  Rational xpow = 1;
  for (int k = m; k >= 0; --k) {
    acc += binom(m, k) * bernoulli_number(k) * xpow;
    xpow *= x;
  }
  return acc;
}

}  // namespace gkm
