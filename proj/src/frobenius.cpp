#include "gkm/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gkm {

namespace {

Mat<TSeries> identity_mat(const VarTablePtr& vt, int n) {
  return Mat<TSeries>::identity(n, TSeries(vt), TSeries(vt, Scalar(Rational(1))));
}

}  // namespace

std::vector<TSeries> FrobeniusData::mul(const std::vector<TSeries>& a,
                                        const std::vector<TSeries>& b) const {
  int N = alg.N;
  std::vector<TSeries> out(N, TSeries(vt));
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < N; ++j) {
        const TSeries& c = C[k].at(i, j);
        if (c.is_zero() || b[j].is_zero()) continue;
        out[k] += a[i] * b[j] * c;
      }
    }
  return out;
}

std::vector<TSeries> FrobeniusData::unit() const {
  std::vector<TSeries> one(alg.N, TSeries(vt));
  for (int i = 0; i < alg.N; ++i)
    one[i] = TSeries(vt, Scalar(Rational(1)) / alg.sqrt_delta0[i]);
  return one;
}

TSeries FrobeniusData::pair(const std::vector<TSeries>& a, const std::vector<TSeries>& b) const {
  TSeries s(vt);
  for (int i = 0; i < alg.N; ++i) s += a[i] * b[i];
  return s;
}

FrobeniusData classical_frobenius(const CRAlgebra& alg, int degree) {
  FrobeniusData d;
  d.alg = alg;
  d.n_t = alg.N;
  d.n_q = 0;
  std::vector<std::string> names;
  for (int i = 0; i < alg.N; ++i) names.push_back("t_" + std::to_string(i));
  d.vt = make_var_table(names, std::vector<int>(alg.N, 0), degree, 0);
  d.classical = true;
  for (int k = 0; k < alg.N; ++k) d.C.push_back(promote(alg.prod_phitilde[k], d.vt));
  lift_idempotents(d);
  canonical_coordinates(d);
  return d;
}

FrobeniusData load_genus_zero(const CRAlgebra& alg, const GenusZeroFile& file, int degree) {
  if (file.n_t != alg.N)
    throw ConfigError("genus-zero data: flat variable count does not match basis size");
  if (degree > file.max_degree)
    throw ConfigError("genus-zero data only valid to degree " + std::to_string(file.max_degree));
  FrobeniusData d;
  d.alg = alg;
  d.n_t = file.n_t;
  d.n_q = static_cast<int>(file.variables.size()) - file.n_t;
  d.degree_two = file.degree_two;
  d.divisor_direction = file.divisor_direction;
  for (const auto& c : file.divisor_pairings) d.divisor_pairings.push_back(rational_from_string(c));
  if (d.divisor_direction >= 0) {
    if (d.divisor_direction >= d.n_t)
      throw ConfigError("divisor direction must be a flat coordinate index");
    if (static_cast<int>(d.divisor_pairings.size()) != d.n_q)
      throw ConfigError("divisor structure needs one pairing value per q variable");
    for (const auto& c : d.divisor_pairings)
      if (c == 0) throw ConfigError("divisor pairing values must be nonzero");
  }
  int nv = static_cast<int>(file.variables.size());
  d.vt = make_var_table(file.variables, std::vector<int>(nv, 0), degree, 0);

  int N = alg.N;
  d.C.assign(N, Mat<TSeries>(N, N, TSeries(d.vt)));
  for (const auto& e : file.structure_constants) {
    TSeries s(d.vt);
    for (const auto& [expv, lit] : e.series) {
      if (static_cast<int>(expv.size()) != nv)
        throw ConfigError("genus-zero data: exponent vector arity mismatch");
      Expo ex(nv);
      for (int i = 0; i < nv; ++i) ex[i] = static_cast<uint16_t>(expv[i]);
      s.add_term(ex, parse_scalar(alg.ctx, lit));
    }
    // An entry specifies the fully symmetric lowered tensor <e_mu * e_nu, e_rho>;
    // fill every permutation of the triple.
    int idx[3] = {e.mu, e.nu, e.rho};
    std::sort(idx, idx + 3);
    do {
      TSeries& slot = d.C[idx[2]].at(idx[0], idx[1]);
      if (!slot.is_zero() && slot != s)
        throw ConfigError("conflicting structure-constant entries for one index triple");
      slot = s;
    } while (std::next_permutation(idx, idx + 3));
  }

  // Classical limit: the constant term must be the classical product.
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (d.C[k].at(i, j).constant_term() != alg.prod_phitilde[k].at(i, j))
          throw MathError("genus-zero data inconsistent with classical limit");

  // Symmetry of the lowered tensor (Frobenius property w.r.t. the constant pairing).
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (d.C[k].at(i, j) != d.C[k].at(j, i))
          throw MathError("genus-zero data: structure constants not commutative");
        if (d.C[k].at(i, j) != d.C[j].at(i, k))
          throw MathError("genus-zero data: structure constants not pairing-symmetric");
      }

  // Associativity (WDVV surrogate) to the working degree.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          TSeries lhs(d.vt), rhs(d.vt);
          for (int p = 0; p < N; ++p) {
            lhs += d.C[p].at(i, j) * d.C[l].at(p, k);
            rhs += d.C[p].at(j, k) * d.C[l].at(i, p);
          }
          TSeries diff = lhs - rhs;
          if (!diff.is_zero()) {
            std::ostringstream os;
            os << "genus-zero data not associative: triple (" << i << "," << j << "," << k
               << "), first failure at degree " << diff.min_deg0();
            throw MathError(os.str());
          }
        }

  d.classical = true;
  for (int k = 0; k < N && d.classical; ++k)
    for (int i = 0; i < N && d.classical; ++i)
      for (int j = 0; j < N; ++j)
        if (d.C[k].at(i, j) != TSeries(d.vt, d.C[k].at(i, j).constant_term())) {
          d.classical = false;
          break;
        }

  // Declared divisor structure must actually hold for the data.
  if (d.divisor_direction >= 0) {
    for (int k = 0; k < N; ++k)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (!eq_to_degree(divisor_derivation(d.C[k].at(i, j), d), TSeries(d.vt), degree - 1))
            throw MathError("structure constants violate the declared divisor structure");
  }

  if (!file.s_operator.empty()) {
    int K = static_cast<int>(file.s_operator.size());
    ZSeries<Mat<TSeries>> S(0, K, Mat<TSeries>(N, N, TSeries(d.vt)));
    S.set_coeff(0, identity_mat(d.vt, N));
    for (int k = 1; k <= K; ++k) {
      Mat<TSeries> m(N, N, TSeries(d.vt));
      for (const auto& entry : file.s_operator[k - 1]) {
        if (entry.row < 0 || entry.row >= N || entry.col < 0 || entry.col >= N)
          throw ConfigError("s_operator entry index out of range");
        TSeries s(d.vt);
        for (const auto& [expv, lit] : entry.series) {
          if (static_cast<int>(expv.size()) != nv)
            throw ConfigError("s_operator: exponent vector arity mismatch");
          Expo ex(nv);
          for (int i = 0; i < nv; ++i) ex[i] = static_cast<uint16_t>(expv[i]);
          s.add_term(ex, parse_scalar(alg.ctx, lit));
        }
        m.at(entry.row, entry.col) = s;
      }
      S.set_coeff(k, m);
    }
    d.S = S;
  }

  lift_idempotents(d);
  canonical_coordinates(d);
  return d;
}

TSeries divisor_derivation(const TSeries& f, const FrobeniusData& d) {
  TSeries out = f.derivative(d.divisor_direction);
  for (int j = 0; j < d.n_q; ++j) {
    int qv = d.n_t + j;
    // q_j d/dq_j acts on a monomial as multiplication by its q_j exponent
    for (const auto& [e, v] : f.terms()) {
      if (e[qv] == 0) continue;
      out.add_term(e, v * Scalar(-d.divisor_pairings[j] * e[qv]));
    }
  }
  return out;
}

TSeries divisor_complete(const TSeries& f, const FrobeniusData& d) {
  if (d.divisor_direction < 0) return f;
  TSeries out = f;
  int dir = d.divisor_direction;
  for (const auto& [e, v] : f.terms()) {
    if (e[dir] != 1) continue;
    bool pure = true;
    for (int mu = 0; mu < d.n_t; ++mu)
      if (mu != dir && e[mu] != 0) pure = false;
    if (!pure) continue;
    Rational s = 0;
    for (int j = 0; j < d.n_q; ++j) s += d.divisor_pairings[j] * e[d.n_t + j];
    if (s == 0) continue;
    Expo b = e;
    b[dir] = 0;
    out.add_term(b, v * Scalar(Rational(1) / s));
  }
  return out;
}

void lift_idempotents(FrobeniusData& d) {
  int N = d.alg.N;
  d.E = Mat<TSeries>(N, N, TSeries(d.vt));
  for (int i = 0; i < N; ++i)
    d.E.at(i, i) = TSeries(d.vt, Scalar(Rational(1)) / d.alg.sqrt_delta0[i]);

  // Newton iteration; each step doubles the correct order.
  int steps = 1;
  while ((1 << steps) <= d.vt->cap0 + 1) ++steps;
  for (int col = 0; col < N; ++col) {
    std::vector<TSeries> eps(N);
    for (int r = 0; r < N; ++r) eps[r] = d.E.at(r, col);
    for (int it = 0; it < steps; ++it) {
      std::vector<TSeries> F = d.mul(eps, eps);
      bool done = true;
      for (int r = 0; r < N; ++r) {
        F[r] -= eps[r];
        if (!F[r].is_zero()) done = false;
      }
      if (done) break;
      // Linearization L = 2 M_eps - id; solve L delta = -F.
      Mat<TSeries> L(N, N, TSeries(d.vt));
      for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
          TSeries m(d.vt);
          for (int i = 0; i < N; ++i) m += eps[i] * d.C[r].at(i, c);
          L.at(r, c) = m + m;
          if (r == c) L.at(r, c) -= TSeries(d.vt, Scalar(Rational(1)));
        }
      Mat<TSeries> Linv;
      try {
        Linv = mat_inverse_series(L);
      } catch (const MathError&) {
        throw MathError("non-semisimple locus met in idempotent lifting");
      }
      for (int r = 0; r < N; ++r) {
        TSeries delta(d.vt);
        for (int c = 0; c < N; ++c) delta += Linv.at(r, c) * F[c];
        eps[r] -= delta;
      }
    }
    std::vector<TSeries> F = d.mul(eps, eps);
    for (int r = 0; r < N; ++r)
      if (F[r] != eps[r]) throw MathError("non-semisimple locus met in idempotent lifting");
    for (int r = 0; r < N; ++r) d.E.at(r, col) = eps[r];
  }

  // Pairwise orthogonality.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      std::vector<TSeries> a(N), b(N);
      for (int r = 0; r < N; ++r) {
        a[r] = d.E.at(r, i);
        b[r] = d.E.at(r, j);
      }
      std::vector<TSeries> p = d.mul(a, b);
      for (int r = 0; r < N; ++r)
        if (!p[r].is_zero()) throw MathError("lifted idempotents not orthogonal");
    }
}

void canonical_coordinates(FrobeniusData& d) {
  int N = d.alg.N;
  d.Einv = mat_inverse_series(d.E);

  d.du.clear();
  d.u.clear();
  for (int i = 0; i < N; ++i) {
    OneForm w(d.vt, d.n_t);
    for (int mu = 0; mu < d.n_t; ++mu) w.c[mu] = d.Einv.at(i, mu);
    d.du.push_back(w);
    d.u.push_back(divisor_complete(integrate_oneform(w), d));
  }

  d.Delta.clear();
  d.sqrtDelta.clear();
  d.invSqrtDelta.clear();
  for (int i = 0; i < N; ++i) {
    TSeries norm(d.vt);
    for (int r = 0; r < N; ++r) norm += d.E.at(r, i) * d.E.at(r, i);
    TSeries Delta = norm.inverse();
    TSeries sq = Delta.sqrt(d.alg.ctx);
    d.Delta.push_back(Delta);
    d.sqrtDelta.push_back(sq);
    d.invSqrtDelta.push_back(sq.inverse());
  }

  d.Psi = Mat<TSeries>(N, N, TSeries(d.vt));
  for (int mu = 0; mu < N; ++mu)
    for (int i = 0; i < N; ++i) d.Psi.at(mu, i) = d.invSqrtDelta[i] * d.Einv.at(i, mu);

  // Psi(0) = I and orthogonality.
  Mat<Scalar> psi0 = constant_part(d.Psi);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (psi0.at(i, j) != Scalar(i == j ? Rational(1) : Rational(0)))
        throw MathError("Psi does not reduce to the identity at the origin");
  Mat<TSeries> id = d.Psi.transpose() * d.Psi;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      TSeries expect(d.vt, Scalar(i == j ? Rational(1) : Rational(0)));
      if (id.at(i, j) != expect) throw MathError("Psi is not orthogonal");
    }
}

FrobeniusData divisor_rescale(const FrobeniusData& d, int dir, const std::vector<Rational>& c) {
  bool flagged = std::find(d.degree_two.begin(), d.degree_two.end(), dir) != d.degree_two.end();
  if (!flagged)
    throw ConfigError("divisor_rescale: direction not flagged as degree-two untwisted");
  if (static_cast<int>(c.size()) != d.n_q)
    throw ConfigError("divisor_rescale: need one pairing value per q variable");

  FrobeniusData out = d;
  for (int j = 0; j < d.n_q; ++j) {
    if (c[j] == 0) continue;
    int qvar = d.n_t + j;
    TSeries expo = TSeries::variable(d.vt, dir, Scalar(c[j])).exp();
    TSeries repl = TSeries::variable(d.vt, qvar) * expo;
    for (auto& mat : out.C)
      for (int a = 0; a < mat.rows(); ++a)
        for (int b = 0; b < mat.cols(); ++b) mat.at(a, b) = mat.at(a, b).substitute(qvar, repl);
  }
  lift_idempotents(out);
  canonical_coordinates(out);
  return out;
}

FrobeniusData truncate_data(const FrobeniusData& d, int degree) {
  if (degree >= d.vt->cap0) return d;
  FrobeniusData out;
  out.alg = d.alg;
  out.n_t = d.n_t;
  out.n_q = d.n_q;
  out.degree_two = d.degree_two;
  out.divisor_direction = d.divisor_direction;
  out.divisor_pairings = d.divisor_pairings;
  out.classical = d.classical;
  out.vt = make_var_table(d.vt->names, d.vt->grp, degree, d.vt->cap1);
  std::vector<int> idmap(d.vt->names.size());
  std::iota(idmap.begin(), idmap.end(), 0);
  int N = d.alg.N;
  out.C.assign(N, Mat<TSeries>(N, N, TSeries(out.vt)));
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        out.C[k].at(i, j) = d.C[k].at(i, j).truncated(degree).remap(out.vt, idmap);
  if (d.S.has_value()) {
    ZSeries<Mat<TSeries>> S(0, d.S->order(), Mat<TSeries>(N, N, TSeries(out.vt)));
    for (int k = 0; k <= d.S->order(); ++k) {
      Mat<TSeries> m(N, N, TSeries(out.vt));
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          m.at(i, j) = d.S->coeff(k).at(i, j).truncated(degree).remap(out.vt, idmap);
      S.set_coeff(k, m);
    }
    out.S = S;
  }
  lift_idempotents(out);
  canonical_coordinates(out);
  return out;
}

void check_frobenius_invariants(const FrobeniusData& d) {
  int N = d.alg.N;
  // Unit: sum of lifted idempotents equals the classical unit field.
  std::vector<TSeries> one = d.unit();
  for (int r = 0; r < N; ++r) {
    TSeries s(d.vt);
    for (int i = 0; i < N; ++i) s += d.E.at(r, i);
    if (s != one[r]) throw MathError("sum of idempotents is not the unit");
  }
  // The unit is a unit for the quantum product.
  for (int i = 0; i < N; ++i) {
    std::vector<TSeries> e(N, TSeries(d.vt));
    e[i] = TSeries(d.vt, Scalar(Rational(1)));
    std::vector<TSeries> p = d.mul(one, e);
    for (int r = 0; r < N; ++r)
      if (p[r] != e[r]) throw MathError("classical unit is not a quantum unit");
  }
  // Pairing in the canonical frame: <eps_i, eps_j> = delta_ij / Delta_i.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::vector<TSeries> a(N), b(N);
      for (int r = 0; r < N; ++r) {
        a[r] = d.E.at(r, i);
        b[r] = d.E.at(r, j);
      }
      TSeries p = d.pair(a, b);
      if (i != j) {
        if (!p.is_zero()) throw MathError("idempotents not pairing-orthogonal");
      } else {
        if (p * d.Delta[i] != TSeries(d.vt, Scalar(Rational(1))))
          throw MathError("<eps_i, eps_i> != 1/Delta_i");
      }
    }
}

void check_lemma_delta(const FrobeniusData& d) {
  int N = d.alg.N;
  for (int j = 0; j < N; ++j) {
    TSeries rhs(d.vt);
    for (int b = 0; b < N; ++b)
      rhs += d.Psi.at(b, j) * (Scalar(Rational(1)) / d.alg.sqrt_delta0[b]);
    if (rhs != d.invSqrtDelta[j])
      throw MathError("Lemma Delta identity failed at index " + std::to_string(j));
  }
}

}  // namespace gkm
