#pragma once

#include "gkm/frobenius.hpp"
#include "gkm/zseries.hpp"

namespace gkm {

// R(z) = R_0 + R_1 z + ... + R_K z^K with R_0 = I, entries TSeries, expressed
// in the normalized-canonical index set (the phitilde/eps ordering).  Matrix
// entries follow the row-first convention R.coef[k].at(j, i) = (R_k)_j^i.
struct RMatrix {
  int K = 0;
  VarTablePtr vt;
  std::vector<Mat<TSeries>> coef;

  const Mat<TSeries>& at(int k) const { return coef[k]; }
  Mat<Scalar> value_at_origin(int k) const { return constant_part(coef[k]); }
};

// Orbifold quantum Riemann-Roch matrix of a local model, constant in t:
// (P)_j^i = (1/|G|) sum_h |class(h)| chi_j(h) chi_i(h^{-1})
//           prod_k exp( sum_m (-1)^m/(m(m+1)) B_{m+1}(c_k(h)) (z/w_k)^m ),
// in the phitilde index ordering.
ZSeries<Mat<Scalar>> qrr_pmatrix(const ContextPtr& ctx, const GroupData& g,
                                 const SectorAction& act, int K);

// Block-diagonal boundary diag(P_sigma) of an assembled target.
ZSeries<Mat<Scalar>> qrr_boundary(const GKMTarget& target, const CRAlgebra& alg, int K);

// Returns -1 when R^*(-z) R(z) = I holds to order K, else the first failing
// order.  For TSeries entries an optional coefficient-degree bound restricts
// the comparison to the reliably computed part (degree file_cap - k for the
// order-k coefficient of a solved R).
int unitarity_check(const ZSeries<Mat<Scalar>>& R);
int unitarity_check(const RMatrix& R, int check_degree = -1);

// Order-by-order solution of the QDE recursion
//   (Psi^T dPsi) R_k + dR_k = [dU, R_{k+1}]
// with off-diagonal entries solved by exact 1-form division and diagonal
// entries integrated with constant terms taken from the boundary.  When the
// boundary has off-diagonal constants they are checked against the emergent
// ones.  R|_{t=0,q=0} has the boundary's diagonal by construction.
RMatrix solve_qde(const FrobeniusData& data, const ZSeries<Mat<Scalar>>& boundary, int K);

// The R-matrix used downstream: diag(P_sigma) promoted to constants for
// classical data (the reconstruction prescription at t=0, Q=0), the QDE
// solution otherwise.
RMatrix rmatrix_for_data(const FrobeniusData& data, const ZSeries<Mat<Scalar>>& boundary, int K);

// Remap an R-matrix into another data set's variable table (same variable
// names, typically a smaller degree cap).
RMatrix truncate_rmatrix(const RMatrix& R, const FrobeniusData& data);

// Residual of the QDE recursion at orders 1..K, checked entrywise to the given
// coefficient degree; throws MathError on failure.
void qde_residual_check(const FrobeniusData& data, const RMatrix& R, int check_degree);

// [S(z) tbar(z)]_+ : tbar is a z-polynomial with vector coefficients
// (tbar[a][mu]); returns the nonnegative-z part after applying S = 1 + S_1/z + ...
std::vector<std::vector<TSeries>> s_plus_transform(
    const std::optional<ZSeries<Mat<TSeries>>>& S,
    const std::vector<std::vector<TSeries>>& tbar);

}  // namespace gkm
