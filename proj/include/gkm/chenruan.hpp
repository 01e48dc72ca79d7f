#pragma once

#include <vector>

#include "gkm/group.hpp"
#include "gkm/matrix.hpp"

namespace gkm {

struct SectorLabel {
  int sigma;
  int idx;  // class index (sector basis) or character index (canonical basis)
  bool operator==(const SectorLabel& o) const { return sigma == o.sigma && idx == o.idx; }
};

struct FixedPoint {
  GroupData group;
  SectorAction action;
};

struct GKMTarget {
  ContextPtr ctx;
  int dim = 1;  // r
  std::vector<FixedPoint> points;

  // Genericity stand-in: pairwise-distinct weights along the axes of each
  // fixed point.  Repeated weights are legal for every implemented formula
  // (nothing divides by w_i - w_j), so violations are reported, not fatal.
  std::vector<std::string> genericity_warnings() const;
};

// The equivariant Chen-Ruan Frobenius algebra of a target, assembled over its
// fixed points.  Everything is expressed in the twisted-sector basis
// {1bar_(sigma,h)} and the canonical/normalized bases {phibar}, {phitilde};
// the unnormalized sector classes 1_(h) differ from 1bar_(h) by fractional
// weight powers and are never materialized.
struct CRAlgebra {
  ContextPtr ctx;
  int r = 1;
  int N = 0;

  std::vector<SectorLabel> sectors;    // sector-basis index -> (sigma, class)
  std::vector<SectorLabel> canonical;  // canonical index -> (sigma, alpha)
  std::vector<int> offset;             // first basis index of each sigma
  std::vector<Rational> ages;          // per sector index; degree = 2*age
  std::vector<int> invol;              // sector index -> sector index of (h^{-1})

  Mat<Scalar> gram_bar;                 // pairing in the 1bar basis
  std::vector<Mat<Scalar>> prod_bar;    // prod_bar[k].at(i,j): 1bar_i * 1bar_j -> 1bar_k
  Mat<Scalar> phibar;                   // column mu: phibar_mu in the 1bar basis
  Mat<Scalar> phitilde;                 // column mu: phitilde_mu in the 1bar basis

  std::vector<Rational> nu;             // per canonical index
  std::vector<Rational> delta0;         // Delta_mu(0) = prod(w)/nu
  std::vector<Scalar> sqrt_delta0;
  std::vector<Rational> prod_weights;   // per fixed point

  Mat<Scalar> gram_phitilde;            // validated to be the identity
  std::vector<Mat<Scalar>> prod_phitilde;

  Scalar pair_bar(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  std::vector<Scalar> mul_bar(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  std::vector<Scalar> unit_bar() const;  // the class 1 in the 1bar basis

  // Full exact validation: Frobenius compatibility, associativity,
  // commutativity, canonical idempotency, unit decomposition, orthonormality.
  void validate() const;
};

CRAlgebra local_cr_algebra(const ContextPtr& ctx, const GroupData& g, const SectorAction& act);
CRAlgebra gkm_assemble(const GKMTarget& target);

SectorLabel involution(const CRAlgebra& alg, const SectorLabel& s);

}  // namespace gkm
