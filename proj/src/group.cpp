#include "gkm/group.hpp"

#include <numeric>
#include <sstream>

namespace gkm {

namespace {

std::string tuple_label(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

Rational frac_part(Rational x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  Int q = num / den;
  Rational f = x - Rational(q);
  if (f < 0) f += 1;
  return f;
}

}  // namespace

int GroupData::abelian_class_of(const std::vector<int>& tuple) const {
  int idx = 0;
  for (size_t f = 0; f < cyclic.size(); ++f) {
    int v = ((tuple[f] % cyclic[f]) + cyclic[f]) % cyclic[f];
    idx = idx * cyclic[f] + v;
  }
  return idx;
}

GroupData abelian_group(const ContextPtr& ctx, const std::vector<int>& factors) {
  for (int f : factors)
    if (f < 1) throw ConfigError("cyclic factor must be positive");
  GroupData g;
  g.ctx = ctx;
  g.abelian = true;
  g.cyclic = factors;
  g.order = 1;
  for (int f : factors) g.order *= f;
  g.exponent = 1;
  for (int f : factors) g.exponent = std::lcm<long long>(g.exponent, f);
  if (ctx->order() % g.exponent != 0)
    throw ConfigError("context cyclotomic order not divisible by group exponent");

  // One class per element; tuples in lexicographic order.
  int nfac = static_cast<int>(factors.size());
  std::vector<int> t(nfac, 0);
  for (int i = 0; i < g.order; ++i) {
    g.elems.push_back(t);
    g.labels.push_back(tuple_label(t));
    g.sizes.push_back(1);
    g.centralizers.push_back(g.order);
    for (int f = nfac - 1; f >= 0; --f) {
      if (++t[f] < factors[f]) break;
      t[f] = 0;
    }
  }
  g.identity = 0;
  g.inverse.resize(g.order);
  for (int i = 0; i < g.order; ++i) {
    std::vector<int> inv(nfac);
    for (int f = 0; f < nfac; ++f) inv[f] = (factors[f] - g.elems[i][f]) % factors[f];
    g.inverse[i] = g.abelian_class_of(inv);
  }

  // Characters: all tuples of cyclic characters, lexicographic.
  g.char_exps = g.elems;
  g.dims.assign(g.order, 1);
  long long n = ctx->order();
  for (int a = 0; a < g.order; ++a) {
    std::vector<Scalar> row;
    for (int h = 0; h < g.order; ++h) {
      long long e = 0;
      for (int f = 0; f < nfac; ++f)
        e += static_cast<long long>(g.char_exps[a][f]) * g.elems[h][f] * (n / factors[f]);
      row.push_back(Scalar::zeta_pow(ctx, e));
    }
    g.chars.push_back(std::move(row));
  }
  return g;
}

void GroupData::validate() const {
  int nc = num_classes();
  if (static_cast<int>(chars.size()) != nc)
    throw MathError("inconsistent character table: #characters != #classes");
  int total = 0;
  for (int c = 0; c < nc; ++c) {
    total += sizes[c];
    if (static_cast<long long>(sizes[c]) * centralizers[c] != order)
      throw MathError("inconsistent character table: |class|*|centralizer| != |G|");
    if (inverse[c] < 0 || inverse[c] >= nc || inverse[inverse[c]] != c ||
        sizes[inverse[c]] != sizes[c])
      throw MathError("inconsistent character table: bad inverse permutation");
  }
  if (total != order) throw MathError("inconsistent character table: class sizes");
  if (inverse[identity] != identity)
    throw MathError("inconsistent character table: identity not self-inverse");

  Int dimsq = 0;
  for (int a = 0; a < nc; ++a) {
    if (chars[a][identity] != Scalar(Rational(dims[a])))
      throw MathError("inconsistent character table: chi(e) != dim");
    dimsq += Int(dims[a]) * dims[a];
  }
  if (dimsq != order) throw MathError("inconsistent character table: sum dim^2 != |G|");

  // Column orthogonality: sum_a chi_a(g) conj(chi_a(h)) = |C(g)| delta.
  for (int c1 = 0; c1 < nc; ++c1) {
    for (int c2 = 0; c2 < nc; ++c2) {
      Scalar s(Rational(0));
      for (int a = 0; a < nc; ++a) s += chars[a][c1] * chars[a][c2].conj();
      Scalar expect(c1 == c2 ? Rational(centralizers[c1]) : Rational(0));
      if (s != expect) throw MathError("inconsistent character table: column orthogonality");
    }
  }
  // Row orthogonality: (1/|G|) sum_h chi_a(h) conj(chi_b(h)) = delta_ab.
  for (int a = 0; a < nc; ++a) {
    for (int b = 0; b < nc; ++b) {
      Scalar s(Rational(0));
      for (int c = 0; c < nc; ++c)
        s += Scalar(Rational(sizes[c])) * chars[a][c] * chars[b][c].conj();
      Scalar expect(a == b ? Rational(order) : Rational(0));
      if (s != expect) throw MathError("inconsistent character table: row orthogonality");
    }
  }
}

void SectorAction::validate(const GroupData& g) const {
  if (axes.empty()) throw ConfigError("sector action needs at least one axis");
  for (const auto& w : weights)
    if (w == 0) throw ConfigError("zero equivariant weight rejected");
  if (weights.size() != axes.size())
    throw ConfigError("sector action: #weights != #axes");
  for (const auto& ax : axes) {
    if (ax.from_table) {
      if (ax.char_index < 0 || ax.char_index >= g.num_classes())
        throw ConfigError("action character index out of range");
      if (g.dims[ax.char_index] != 1)
        throw ConfigError("action character must be one-dimensional");
    } else {
      if (!g.abelian) throw ConfigError("exponent-tuple action on a non-abelian group");
      if (ax.exps.size() != g.cyclic.size())
        throw ConfigError("action character tuple has wrong arity");
    }
  }
}

Rational c_value(const GroupData& g, int cls, const SectorAction::Axis& axis) {
  if (!axis.from_table) {
    Rational s = 0;
    for (size_t f = 0; f < g.cyclic.size(); ++f)
      s += Rational(static_cast<long long>(axis.exps[f]) * g.elems[cls][f], g.cyclic[f]);
    return frac_part(s);
  }
  // The character value must be a single root of unity zeta_n^e.
  const Scalar& v = g.chars[axis.char_index][cls];
  long long n = g.ctx->order();
  for (long long e = 0; e < n; ++e)
    if (v == Scalar::zeta_pow(g.ctx, e)) return frac_part(Rational(e, n));
  throw MathError("action character value is not a root of unity");
}

Rational age(const GroupData& g, int cls, const SectorAction& action) {
  Rational s = 0;
  for (const auto& ax : action.axes) s += c_value(g, cls, ax);
  return s;
}

Scalar class_mult_coefficient(const GroupData& g, int i, int j, int k) {
  Scalar s(Rational(0));
  for (int a = 0; a < g.num_classes(); ++a) {
    Scalar term = g.chars[a][i] * g.chars[a][j] * g.chars[a][g.inverse[k]];
    s += term / Scalar(Rational(g.dims[a]));
  }
  return s * Scalar(Rational(static_cast<long long>(g.sizes[i]) * g.sizes[j], g.order));
}

}  // namespace gkm
