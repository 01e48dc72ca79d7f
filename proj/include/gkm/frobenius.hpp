#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkm/chenruan.hpp"
#include "gkm/tseries.hpp"
#include "gkm/zseries.hpp"

namespace gkm {

// Parsed genus-zero data file, still in literal form (see io.cpp for the JSON
// schema).  Variables: the first N names are flat coordinates t^mu in basis
// order, the rest are Novikov-type monomials q_j.
struct GenusZeroFile {
  std::vector<std::string> variables;
  int n_t = 0;
  int max_degree = 0;
  std::vector<int> degree_two;  // t-variable indices eligible for divisor rescaling
  // Divisor structure: every series depends on q_j and t^dir only through
  // q_j exp(c_j t^dir).  Required when q variables are present and the QDE is
  // solved, since it pins the q-dependent integration constants.
  int divisor_direction = -1;
  std::vector<std::string> divisor_pairings;
  struct Entry {
    int mu, nu, rho;
    std::vector<std::pair<std::vector<int>, std::string>> series;
  };
  std::vector<Entry> structure_constants;
  // s_operator[k-1] = entries of S_k, k = 1..: (row, col, series)
  struct SEntry {
    int row, col;
    std::vector<std::pair<std::vector<int>, std::string>> series;
  };
  std::vector<std::vector<SEntry>> s_operator;
};

// Quantum-product data over the formal completion, with the derived canonical
// structure: idempotents, canonical coordinates, Delta-norms and the Psi
// transition matrix, all as truncated series in the phitilde frame (where the
// classical pairing is the identity matrix).
struct FrobeniusData {
  CRAlgebra alg;
  VarTablePtr vt;
  int n_t = 0;  // number of flat coordinate directions (= alg.N)
  int n_q = 0;
  std::vector<int> degree_two;
  int divisor_direction = -1;
  std::vector<Rational> divisor_pairings;
  bool classical = true;

  std::vector<Mat<TSeries>> C;  // C[k].at(i,j): coeff of phitilde_k in phitilde_i * phitilde_j

  // Derived by lift_idempotents / canonical_coordinates:
  Mat<TSeries> E;     // column i = idempotent eps_i in the phitilde frame
  Mat<TSeries> Einv;
  std::vector<TSeries> u;       // canonical coordinates, zero constant term
  std::vector<OneForm> du;
  std::vector<TSeries> Delta, sqrtDelta, invSqrtDelta;
  Mat<TSeries> Psi;   // Psi.at(mu, i) = Delta_i^{-1/2} du^i/dt^mu; Psi(0) = I
  std::optional<ZSeries<Mat<TSeries>>> S;  // ingested S-operator, 1 + S_1/z + ...

  std::vector<TSeries> mul(const std::vector<TSeries>& a, const std::vector<TSeries>& b) const;
  std::vector<TSeries> unit() const;  // the classical unit in the phitilde frame
  TSeries pair(const std::vector<TSeries>& a, const std::vector<TSeries>& b) const;
};

// Built-in data set: the undeformed product of the classical algebra.
FrobeniusData classical_frobenius(const CRAlgebra& alg, int degree);

// Ingest a genus-zero data file; checks the classical limit and associativity
// to the working degree.
FrobeniusData load_genus_zero(const CRAlgebra& alg, const GenusZeroFile& file, int degree);

// Newton lifting of the classical idempotents; fills E and validates
// eps_i * eps_j = delta_ij eps_i to the working degree.
void lift_idempotents(FrobeniusData& data);

// du^i, u^i, Delta_i, Psi from the lifted idempotents (Psi(0) = I, zero
// integration constants).
void canonical_coordinates(FrobeniusData& data);

// Substitutes q_j -> q_j exp(c_j t^dir); dir must be flagged degree-two.
// Derived fields are recomputed.
FrobeniusData divisor_rescale(const FrobeniusData& data, int dir, const std::vector<Rational>& c);

// Re-truncate to a smaller working degree (fresh variable table, derived
// fields recomputed).  Used to publish quantities at their certified degree
// after a higher-degree solve.
FrobeniusData truncate_data(const FrobeniusData& data, int degree);

// The derivation D = d/dt^dir - sum_j c_j q_j d/dq_j annihilating functions of
// q_j exp(c_j t^dir); zero on divisor-structured series.
TSeries divisor_derivation(const TSeries& f, const FrobeniusData& data);

// Restore the pure-q coefficients of an antiderivative (invisible to the
// t-differential) from the divisor structure: f_{0,beta} = f_{e_dir,beta} /
// (sum_j c_j beta_j).
TSeries divisor_complete(const TSeries& f, const FrobeniusData& data);

// Verification helpers (exact; throw MathError on failure).
void check_frobenius_invariants(const FrobeniusData& data);  // WDVV, pairing, unit
void check_lemma_delta(const FrobeniusData& data);  // 1/sqrt(Delta^j) = sum Psi_b^j / sqrt(Delta^b(0))

}  // namespace gkm
