#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkm/rmatrix.hpp"

namespace gkm {

// A stable labeled graph: vertices carry genus and a marking in {0..N-1},
// edges carry a height at each half-edge, ordinary leaves are ordered
// (labeled) and dilaton leaves are unordered with heights >= 2.
struct StableGraph {
  struct Vertex {
    int genus = 0;
    int marking = 0;
    std::vector<int> dilaton;  // sorted heights, each >= 2
  };
  struct Edge {
    int v1, a1, v2, a2;
  };
  struct Leaf {
    int v, a;
  };

  std::vector<Vertex> verts;
  std::vector<Edge> edges;
  std::vector<Leaf> leaves;
  long long aut = 0;

  int genus() const {
    int s = 1 + static_cast<int>(edges.size());
    for (const auto& v : verts) s += v.genus - 1;
    return s;
  }
  int valence(int v) const;
  std::vector<int> heights_at(int v) const;
  std::string canonical() const;
};

long long automorphism_order(const StableGraph& g);

// All stable labeled graphs of genus g with k ordered ordinary leaves and
// markings in {0..N-1} that can carry nonzero weight: per-vertex height sums
// equal 3g(v)-3+val(v), dilaton heights >= 2, edge height pairs bounded by
// K-1.  Duplicate-free up to isomorphism.
std::vector<StableGraph> enumerate_stable_graphs(int g, int k, int N, int K);

struct PotentialTable {
  int g = 0, k = 0;
  VarTablePtr vt;
  int n_base = 0;  // leading variables are the base (t/q) ones, then tb_{mu,a}
  TSeries value;   // (1/k!) \bar F_{g,k}; leaf-variable degree is exactly k
};

enum class LeafMode { kAncestor, kDescendent };

// Everything needed to evaluate graph weights in one (joint) variable ring.
struct GraphWeights {
  VarTablePtr vt;
  int N = 0;
  int leaf_heights = 0;  // tbar heights 0..leaf_heights-1
  std::vector<Mat<TSeries>> R;
  std::vector<TSeries> sqrtDelta, invSqrtDelta, Delta;
  std::vector<std::vector<TSeries>> tbar;         // [a][mu], symbols (or transformed)
  std::vector<std::vector<TSeries>> leaf_factor;  // [i][a]
  std::vector<std::vector<TSeries>> dil_factor;   // [i][a], a >= 2
  std::vector<std::vector<std::vector<std::vector<TSeries>>>> edge_factor;  // [i][j][a][b]

  TSeries graph_weight(const StableGraph& g) const;
};

GraphWeights prepare_weights(const FrobeniusData& data, const RMatrix& R, int g, int k,
                             LeafMode mode, int max_leaf_height, int max_dil_height,
                             int max_edge_height);

PotentialTable ancestor_potential(int g, int k, const FrobeniusData& data, const RMatrix& R,
                                  uint64_t shuffle_seed = 0);
PotentialTable descendent_potential(int g, int k, const FrobeniusData& data, const RMatrix& R,
                                    uint64_t shuffle_seed = 0);

// dF_{1,0} = sum_i (1/48) dlog Delta^i + sum_i (1/2) (R_1)_i^i du^i.
OneForm f10_closed_form(const FrobeniusData& data, const RMatrix& R);
// The same 1-form assembled from the three-graph contributions.
OneForm f10_graph_check(const FrobeniusData& data, const RMatrix& R);

// Direct three-graph evaluation of (1/1!) \bar F_{1,1} with general insertions;
// oracle for the enumerator-based ancestor_potential(1,1).
TSeries three_graph_f11(const GraphWeights& w);

}  // namespace gkm
