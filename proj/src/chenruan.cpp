#include "gkm/chenruan.hpp"

namespace gkm {

namespace {

Scalar dot(const Mat<Scalar>& m, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  Scalar s(Rational(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) {
      if (b[j].is_zero()) continue;
      s += a[i] * m.at(i, j) * b[j];
    }
  }
  return s;
}

}  // namespace

std::vector<std::string> GKMTarget::genericity_warnings() const {
  std::vector<std::string> out;
  for (size_t s = 0; s < points.size(); ++s) {
    const auto& w = points[s].action.weights;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[i] == w[j])
          out.push_back("fixed point " + std::to_string(s) + ": axes " + std::to_string(i) +
                        " and " + std::to_string(j) + " carry equal weights");
  }
  return out;
}

Scalar CRAlgebra::pair_bar(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  return dot(gram_bar, a, b);
}

std::vector<Scalar> CRAlgebra::mul_bar(const std::vector<Scalar>& a,
                                       const std::vector<Scalar>& b) const {
  std::vector<Scalar> out(N, Scalar(Rational(0)));
  for (int k = 0; k < N; ++k) out[k] = dot(prod_bar[k], a, b);
  return out;
}

std::vector<Scalar> CRAlgebra::unit_bar() const {
  std::vector<Scalar> u(N, Scalar(Rational(0)));
  for (size_t s = 0; s < offset.size(); ++s) {
    // identity class of each local group sits first in its block
    u[offset[s]] = Scalar(Rational(1));
  }
  return u;
}

CRAlgebra gkm_assemble(const GKMTarget& target) {
  CRAlgebra A;
  A.ctx = target.ctx;
  A.r = target.dim;

  for (const auto& fp : target.points) {
    if (fp.action.rank() != target.dim)
      throw ConfigError("all local models must share the target dimension");
    fp.action.validate(fp.group);
    fp.group.validate();
  }

  int n_pts = static_cast<int>(target.points.size());
  A.N = 0;
  for (int s = 0; s < n_pts; ++s) {
    const GroupData& g = target.points[s].group;
    A.offset.push_back(A.N);
    if (g.identity != 0) throw ConfigError("identity class must be listed first");
    for (int c = 0; c < g.num_classes(); ++c) {
      A.sectors.push_back({s, c});
      A.canonical.push_back({s, c});
      A.ages.push_back(age(g, c, target.points[s].action));
    }
    A.N += g.num_classes();
  }

  A.invol.resize(A.N);
  for (int i = 0; i < A.N; ++i)
    A.invol[i] = A.offset[A.sectors[i].sigma] +
                 target.points[A.sectors[i].sigma].group.inverse[A.sectors[i].idx];

  Scalar zero(Rational(0));
  A.gram_bar = Mat<Scalar>(A.N, A.N, zero);
  A.prod_bar.assign(A.N, Mat<Scalar>(A.N, A.N, zero));
  A.phibar = Mat<Scalar>(A.N, A.N, zero);
  A.phitilde = Mat<Scalar>(A.N, A.N, zero);

  for (int s = 0; s < n_pts; ++s) {
    const GroupData& g = target.points[s].group;
    const SectorAction& act = target.points[s].action;
    int base = A.offset[s];
    int nc = g.num_classes();

    Rational pw = 1;
    for (const auto& w : act.weights) pw *= w;
    A.prod_weights.push_back(pw);

    // <1bar_(h), 1bar_(h')> = delta_{(h^{-1}),(h')} / (|C(h)| prod w)
    for (int c = 0; c < nc; ++c)
      A.gram_bar.at(base + c, base + g.inverse[c]) =
          Scalar(Rational(1) / (Rational(g.centralizers[c]) * pw));

    // 1bar_(h) * 1bar_(h') = sum over classes of the class-algebra constants.
    if (g.abelian) {
      for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
          std::vector<int> prod(g.cyclic.size());
          for (size_t f = 0; f < g.cyclic.size(); ++f)
            prod[f] = (g.elems[i][f] + g.elems[j][f]) % g.cyclic[f];
          A.prod_bar[base + g.abelian_class_of(prod)].at(base + i, base + j) =
              Scalar(Rational(1));
        }
    } else {
      for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
          for (int k = 0; k < nc; ++k) {
            Scalar c = class_mult_coefficient(g, i, j, k);
            if (c.is_zero()) continue;
            if (!c.is_rational())
              throw MathError("class multiplication constant not rational");
            A.prod_bar[base + k].at(base + i, base + j) = c;
          }
    }

    // phibar_alpha = (dim V_alpha / |G|) sum_h chi_alpha(h^{-1}) 1bar_(h)
    for (int a = 0; a < nc; ++a) {
      Rational nu = Rational(g.dims[a], g.order) * Rational(g.dims[a], g.order);
      A.nu.push_back(nu);
      Rational d0 = pw / nu;
      A.delta0.push_back(d0);
      Scalar sq = Scalar::sqrt_rational(A.ctx, d0);
      A.sqrt_delta0.push_back(sq);
      for (int h = 0; h < nc; ++h) {
        Scalar coef = Scalar(Rational(g.dims[a], g.order)) * g.chars[a][g.inverse[h]];
        A.phibar.at(base + h, base + a) = coef;
        A.phitilde.at(base + h, base + a) = coef * sq;
      }
    }
  }

  // Nondegeneracy: each gram row has exactly one nonzero entry by construction;
  // it degenerates only if a weight product vanished, which is excluded above.
  for (int i = 0; i < A.N; ++i) {
    bool nonzero = false;
    for (int j = 0; j < A.N; ++j) nonzero = nonzero || !A.gram_bar.at(i, j).is_zero();
    if (!nonzero) throw MathError("degenerate pairing (bad weight specialization)");
  }

  // Structure constants in the phitilde frame.
  Mat<Scalar> tinv = mat_inverse(A.phitilde, Scalar(Rational(1)));
  A.gram_phitilde = Mat<Scalar>(A.N, A.N, zero);
  for (int i = 0; i < A.N; ++i) {
    std::vector<Scalar> ci(A.N), cj(A.N);
    for (int h = 0; h < A.N; ++h) ci[h] = A.phitilde.at(h, i);
    for (int j = 0; j < A.N; ++j) {
      for (int h = 0; h < A.N; ++h) cj[h] = A.phitilde.at(h, j);
      A.gram_phitilde.at(i, j) = A.pair_bar(ci, cj);
    }
  }
  A.prod_phitilde.assign(A.N, Mat<Scalar>(A.N, A.N, zero));
  for (int i = 0; i < A.N; ++i)
    for (int j = 0; j < A.N; ++j) {
      std::vector<Scalar> ci(A.N), cj(A.N);
      for (int h = 0; h < A.N; ++h) {
        ci[h] = A.phitilde.at(h, i);
        cj[h] = A.phitilde.at(h, j);
      }
      std::vector<Scalar> prod = A.mul_bar(ci, cj);
      for (int k = 0; k < A.N; ++k) {
        Scalar ck(Rational(0));
        for (int h = 0; h < A.N; ++h) ck += tinv.at(k, h) * prod[h];
        A.prod_phitilde[k].at(i, j) = ck;
      }
    }

  return A;
}

CRAlgebra local_cr_algebra(const ContextPtr& ctx, const GroupData& g, const SectorAction& act) {
  GKMTarget t;
  t.ctx = ctx;
  t.dim = act.rank();
  t.points.push_back({g, act});
  return gkm_assemble(t);
}

SectorLabel involution(const CRAlgebra& alg, const SectorLabel& s) {
  int gi = alg.offset[s.sigma] + s.idx;
  int inv = alg.invol[gi];
  return alg.sectors[inv];
}

void CRAlgebra::validate() const {
  Scalar zero(Rational(0)), one(Rational(1));

  // Pairing symmetric; Frobenius compatibility <a*b,c> = <a,b*c>; assoc; comm.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (gram_bar.at(i, j) != gram_bar.at(j, i)) throw MathError("pairing not symmetric");

  auto basis_vec = [&](int i) {
    std::vector<Scalar> v(N, zero);
    v[i] = one;
    return v;
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::vector<Scalar> ij = mul_bar(basis_vec(i), basis_vec(j));
      std::vector<Scalar> ji = mul_bar(basis_vec(j), basis_vec(i));
      if (ij != ji) throw MathError("product not commutative");
      for (int k = 0; k < N; ++k) {
        std::vector<Scalar> jk = mul_bar(basis_vec(j), basis_vec(k));
        Scalar lhs = pair_bar(ij, basis_vec(k));
        Scalar rhs = pair_bar(basis_vec(i), jk);
        if (lhs != rhs) throw MathError("Frobenius compatibility failed");
        std::vector<Scalar> a = mul_bar(ij, basis_vec(k));
        std::vector<Scalar> b = mul_bar(basis_vec(i), jk);
        if (a != b) throw MathError("product not associative");
      }
    }

  // Unit element.
  std::vector<Scalar> u = unit_bar();
  for (int i = 0; i < N; ++i) {
    std::vector<Scalar> v = mul_bar(u, basis_vec(i));
    if (v != basis_vec(i)) throw MathError("unit is not a unit");
  }

  // Canonical idempotency and unit decomposition of phibar.
  std::vector<std::vector<Scalar>> pb(N);
  for (int m = 0; m < N; ++m) {
    pb[m].resize(N);
    for (int h = 0; h < N; ++h) pb[m][h] = phibar.at(h, m);
  }
  std::vector<Scalar> sum(N, zero);
  for (int m = 0; m < N; ++m)
    for (int h = 0; h < N; ++h) sum[h] += pb[m][h];
  if (sum != u) throw MathError("sum of canonical idempotents is not the unit");
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      std::vector<Scalar> prod = mul_bar(pb[m], pb[n]);
      std::vector<Scalar> expect(N, zero);
      if (m == n) expect = pb[m];
      if (prod != expect) throw MathError("canonical idempotency failed");
    }

  // <phitilde_m, phitilde_n> = delta and pairing value of phibar.
  for (int m = 0; m < N; ++m)
    for (int n = 0; n < N; ++n) {
      Scalar expect(m == n ? Rational(1) : Rational(0));
      if (gram_phitilde.at(m, n) != expect)
        throw MathError("normalized canonical basis is not orthonormal");
    }

  // Twisted-sector degree bookkeeping: age(h) + age(h^{-1}) = #moving axes.
  for (int i = 0; i < N; ++i) {
    Rational s = ages[i] + ages[invol[i]];
    Int num = boost::multiprecision::numerator(s);
    Int den = boost::multiprecision::denominator(s);
    if (den != 1) throw MathError("age sum not an integer");
    if (num < 0 || num > r) throw MathError("age sum out of range");
  }
}

}  // namespace gkm
