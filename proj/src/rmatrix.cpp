#include "gkm/rmatrix.hpp"

#include <algorithm>

#include "gkm/bernoulli.hpp"

namespace gkm {

ZSeries<Mat<Scalar>> qrr_pmatrix(const ContextPtr& ctx, const GroupData& g,
                                 const SectorAction& act, int K) {
  act.validate(g);
  int nc = g.num_classes();
  Scalar zero(Rational(0));
  ZSeries<Mat<Scalar>> P(0, K, Mat<Scalar>(nc, nc, zero));
  for (int k = 0; k <= K; ++k) P.set_coeff(k, Mat<Scalar>(nc, nc, zero));

  for (int h = 0; h < nc; ++h) {
    // log of the sector eigenvalue: sum over axes and orders m.
    ZSeries<Scalar> L(0, K, zero);
    for (int ax = 0; ax < act.rank(); ++ax) {
      Rational c = c_value(g, h, act.axes[ax]);
      Rational winv = Rational(1) / act.weights[ax];
      Rational wpow = 1;
      for (int m = 1; m <= K; ++m) {
        wpow *= winv;
        Rational coeff = Rational(m % 2 ? -1 : 1, static_cast<long long>(m) * (m + 1)) *
                         bernoulli_polynomial(m + 1, c) * wpow;
        L.set_coeff(m, L.coeff(m) + Scalar(coeff));
      }
    }
    ZSeries<Scalar> Eh = series_exp(L, Scalar(Rational(1)));
    Scalar weight(Rational(g.sizes[h], g.order));
    for (int j = 0; j < nc; ++j)
      for (int i = 0; i < nc; ++i) {
        Scalar cc = weight * g.chars[j][h] * g.chars[i][g.inverse[h]];
        if (cc.is_zero()) continue;
        for (int k = 0; k <= K; ++k) {
          Mat<Scalar> m = P.coeff(k);
          m.at(j, i) += cc * Eh.coeff(k);
          P.set_coeff(k, m);
        }
      }
  }
  return P;
}

ZSeries<Mat<Scalar>> qrr_boundary(const GKMTarget& target, const CRAlgebra& alg, int K) {
  Scalar zero(Rational(0));
  ZSeries<Mat<Scalar>> B(0, K, Mat<Scalar>(alg.N, alg.N, zero));
  for (int k = 0; k <= K; ++k) B.set_coeff(k, Mat<Scalar>(alg.N, alg.N, zero));
  for (size_t s = 0; s < target.points.size(); ++s) {
    ZSeries<Mat<Scalar>> P =
        qrr_pmatrix(target.ctx, target.points[s].group, target.points[s].action, K);
    int base = alg.offset[s];
    int nc = target.points[s].group.num_classes();
    for (int k = 0; k <= K; ++k) {
      Mat<Scalar> m = B.coeff(k);
      for (int j = 0; j < nc; ++j)
        for (int i = 0; i < nc; ++i) m.at(base + j, base + i) = P.coeff(k).at(j, i);
      B.set_coeff(k, m);
    }
  }
  return B;
}

namespace {

template <class M>
int unitarity_first_failure(const std::vector<M>& R, const M& id) {
  int K = static_cast<int>(R.size()) - 1;
  for (int k = 0; k <= K; ++k) {
    M acc = id - id;  // zero of the right shape
    for (int a = 0; a <= k; ++a) {
      M term = R[a].transpose() * R[k - a];
      if (a % 2) term = -term;
      acc += term;
    }
    if (k == 0) acc -= id;
    if (!acc.is_zero()) return k;
  }
  return -1;
}

}  // namespace

int unitarity_check(const ZSeries<Mat<Scalar>>& R) {
  std::vector<Mat<Scalar>> v;
  for (int k = 0; k <= R.order(); ++k) v.push_back(R.coeff(k));
  Mat<Scalar> id =
      Mat<Scalar>::identity(R.coeff(0).rows(), Scalar(Rational(0)), Scalar(Rational(1)));
  return unitarity_first_failure(v, id);
}

int unitarity_check(const RMatrix& R, int check_degree) {
  int n = R.coef[0].rows();
  for (int k = 0; k <= R.K; ++k) {
    Mat<TSeries> acc(n, n, TSeries(R.vt));
    for (int a = 0; a <= k; ++a) {
      Mat<TSeries> term = R.coef[a].transpose() * R.coef[k - a];
      if (a % 2) term = -term;
      acc += term;
    }
    if (k == 0)
      for (int i = 0; i < n; ++i) acc.at(i, i) -= TSeries(R.vt, Scalar(Rational(1)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool ok = check_degree < 0 ? acc.at(i, j).is_zero()
                                   : eq_to_degree(acc.at(i, j), TSeries(R.vt), check_degree);
        if (!ok) return k;
      }
  }
  return -1;
}

namespace {

// Psi^T dPsi as a matrix of 1-forms; vanishing diagonal by orthogonality.
std::vector<std::vector<OneForm>> connection_form(const FrobeniusData& d) {
  int N = d.alg.N;
  std::vector<std::vector<OneForm>> A(N, std::vector<OneForm>(N, OneForm(d.vt, d.n_t)));
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c)
      for (int mu = 0; mu < d.n_t; ++mu) {
        TSeries s(d.vt);
        for (int p = 0; p < N; ++p) s += d.Psi.at(p, r) * d.Psi.at(p, c).derivative(mu);
        A[r][c].c[mu] = s;
      }
  return A;
}

}  // namespace

RMatrix solve_qde(const FrobeniusData& d, const ZSeries<Mat<Scalar>>& boundary, int K) {
  int N = d.alg.N;
  if (d.n_q > 0 && !d.classical && d.divisor_direction < 0)
    throw MathError(
        "q-dependent integration constants are undetermined: declare the divisor "
        "structure in the genus-zero file");
  RMatrix R;
  R.K = K;
  R.vt = d.vt;
  R.coef.assign(K + 1, Mat<TSeries>(N, N, TSeries(d.vt)));
  for (int i = 0; i < N; ++i) R.coef[0].at(i, i) = TSeries(d.vt, Scalar(Rational(1)));

  auto A = connection_form(d);
  int reliable = d.vt->cap0 - 1;
  for (int i = 0; i < N; ++i)
    for (int mu = 0; mu < d.n_t; ++mu)
      if (!eq_to_degree(A[i][i].c[mu], TSeries(d.vt), reliable))
        throw MathError("connection form has nonzero diagonal (Psi not orthogonal?)");

  for (int k = 0; k < K; ++k) {
    // Numerator 1-forms N = (Psi^T dPsi) R_k + dR_k.
    std::vector<std::vector<OneForm>> num(N, std::vector<OneForm>(N, OneForm(d.vt, d.n_t)));
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        OneForm w(d.vt, d.n_t);
        for (int p = 0; p < N; ++p) w += A[r][p] * R.coef[k].at(p, c);
        w += differential(R.coef[k].at(r, c), d.n_t);
        num[r][c] = w;
      }

    Mat<TSeries> next(N, N, TSeries(d.vt));
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        if (r == c) continue;
        OneForm den = d.du[r] - d.du[c];
        if (den.is_zero())
          throw MathError("canonical coordinates degenerate at truncation order");
        if (num[r][c].is_zero()) continue;
        next.at(r, c) = divide_oneform(num[r][c], den);
      }
    // Diagonal: d(R_{k+1})_ii = -(Psi^T dPsi R_{k+1})_ii, diagonal of A vanishes.
    // Integration sees no pure-q monomials; the divisor structure restores them.
    for (int i = 0; i < N; ++i) {
      OneForm w(d.vt, d.n_t);
      for (int p = 0; p < N; ++p)
        if (p != i) w += A[i][p] * next.at(p, i);
      TSeries diag = divisor_complete(integrate_oneform(-w), d);
      diag += TSeries(d.vt, boundary.coeff(k + 1).at(i, i));
      next.at(i, i) = diag;
    }
    // A boundary carrying off-diagonal constants must agree with the emergent ones.
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        if (r == c) continue;
        if (boundary.coeff(k + 1).at(r, c).is_zero()) continue;
        if (next.at(r, c).constant_term() != boundary.coeff(k + 1).at(r, c))
          throw MathError("integration constant conflict with prescribed boundary");
      }
    R.coef[k + 1] = next;
  }
  return R;
}

RMatrix rmatrix_for_data(const FrobeniusData& d, const ZSeries<Mat<Scalar>>& boundary, int K) {
  if (!d.classical) return solve_qde(d, boundary, K);
  RMatrix R;
  R.K = K;
  R.vt = d.vt;
  for (int k = 0; k <= K; ++k) R.coef.push_back(promote(boundary.coeff(k), d.vt));
  return R;
}

RMatrix truncate_rmatrix(const RMatrix& R, const FrobeniusData& d) {
  RMatrix out;
  out.K = R.K;
  out.vt = d.vt;
  std::vector<int> idmap(R.vt->names.size());
  for (size_t i = 0; i < R.vt->names.size(); ++i) {
    auto it = std::find(d.vt->names.begin(), d.vt->names.end(), R.vt->names[i]);
    if (it == d.vt->names.end()) throw MathError("R-matrix variables do not match data");
    idmap[i] = static_cast<int>(it - d.vt->names.begin());
  }
  int N = R.coef[0].rows();
  for (int k = 0; k <= R.K; ++k) {
    Mat<TSeries> m(N, N, TSeries(d.vt));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        m.at(i, j) = R.coef[k].at(i, j).truncated(d.vt->cap0).remap(d.vt, idmap);
    out.coef.push_back(m);
  }
  return out;
}

void qde_residual_check(const FrobeniusData& d, const RMatrix& R, int check_degree) {
  int N = d.alg.N;
  auto A = connection_form(d);
  for (int k = 0; k + 1 <= R.K; ++k) {
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) {
        OneForm lhs(d.vt, d.n_t);
        for (int p = 0; p < N; ++p) lhs += A[r][p] * R.coef[k].at(p, c);
        lhs += differential(R.coef[k].at(r, c), d.n_t);
        OneForm rhs = (d.du[r] - d.du[c]) * R.coef[k + 1].at(r, c);
        for (int mu = 0; mu < d.n_t; ++mu)
          if (!eq_to_degree(lhs.c[mu], rhs.c[mu], check_degree))
            throw MathError("QDE residual nonzero at order " + std::to_string(k + 1));
      }
  }
}

std::vector<std::vector<TSeries>> s_plus_transform(
    const std::optional<ZSeries<Mat<TSeries>>>& S,
    const std::vector<std::vector<TSeries>>& tbar) {
  if (!S.has_value()) return tbar;
  int A = static_cast<int>(tbar.size());
  if (A == 0) return tbar;
  int N = static_cast<int>(tbar[0].size());
  std::vector<std::vector<TSeries>> out = tbar;
  for (int a = 0; a < A; ++a)
    for (int b = 1; b <= S->order() && a + b < A; ++b) {
      const Mat<TSeries>& Sb = S->coeff(b);
      for (int nu = 0; nu < N; ++nu)
        for (int mu = 0; mu < N; ++mu) out[a][nu] += Sb.at(nu, mu) * tbar[a + b][mu];
    }
  return out;
}

}  // namespace gkm
