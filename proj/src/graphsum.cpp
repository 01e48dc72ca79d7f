#include "gkm/graphsum.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "gkm/psi.hpp"

namespace gkm {

int StableGraph::valence(int v) const {
  int val = static_cast<int>(verts[v].dilaton.size());
  for (const auto& e : edges) {
    if (e.v1 == v) ++val;
    if (e.v2 == v) ++val;
  }
  for (const auto& l : leaves)
    if (l.v == v) ++val;
  return val;
}

std::vector<int> StableGraph::heights_at(int v) const {
  std::vector<int> h;
  for (const auto& e : edges) {
    if (e.v1 == v) h.push_back(e.a1);
    if (e.v2 == v) h.push_back(e.a2);
  }
  for (const auto& l : leaves)
    if (l.v == v) h.push_back(l.a);
  for (int a : verts[v].dilaton) h.push_back(a);
  return h;
}

namespace {

std::string serialize_with_perm(const StableGraph& g, const std::vector<int>& perm) {
  // perm[old] = new id
  int V = static_cast<int>(g.verts.size());
  std::vector<int> inv(V);
  for (int i = 0; i < V; ++i) inv[perm[i]] = i;
  std::ostringstream os;
  for (int nid = 0; nid < V; ++nid) {
    const auto& v = g.verts[inv[nid]];
    os << "v" << v.genus << "m" << v.marking << "d";
    for (int a : v.dilaton) os << a << ",";
    os << ";";
  }
  std::vector<std::string> es;
  for (const auto& e : g.edges) {
    int p1 = perm[e.v1], p2 = perm[e.v2];
    std::pair<int, int> h1{p1, e.a1}, h2{p2, e.a2};
    if (h2 < h1) std::swap(h1, h2);
    std::ostringstream eo;
    eo << h1.first << ":" << h1.second << "-" << h2.first << ":" << h2.second;
    es.push_back(eo.str());
  }
  std::sort(es.begin(), es.end());
  for (const auto& e : es) os << "E" << e << ";";
  for (const auto& l : g.leaves) os << "L" << perm[l.v] << ":" << l.a << ";";
  return os.str();
}

}  // namespace

std::string StableGraph::canonical() const {
  int V = static_cast<int>(verts.size());
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s = serialize_with_perm(*this, perm);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

long long automorphism_order(const StableGraph& g) {
  int V = static_cast<int>(g.verts.size());

  // Leaf-carrying vertices must be fixed; other vertices may permute when all
  // decorations agree and the decorated edge multiset is preserved.
  std::vector<bool> pinned(V, false);
  for (const auto& l : g.leaves) pinned[l.v] = true;

  auto vert_eq = [&](int a, int b) {
    return g.verts[a].genus == g.verts[b].genus && g.verts[a].marking == g.verts[b].marking &&
           g.verts[a].dilaton == g.verts[b].dilaton;
  };

  using EdgeType = std::pair<std::pair<int, int>, std::pair<int, int>>;
  auto edge_type = [](int v1, int a1, int v2, int a2) {
    std::pair<int, int> h1{v1, a1}, h2{v2, a2};
    if (h2 < h1) std::swap(h1, h2);
    return EdgeType{h1, h2};
  };
  std::map<EdgeType, int> types;
  for (const auto& e : g.edges) types[edge_type(e.v1, e.a1, e.v2, e.a2)]++;

  long long fixed_factor = 1;
  for (const auto& [t, m] : types) {
    for (int i = 2; i <= m; ++i) fixed_factor *= i;
    if (t.first == t.second)
      for (int i = 0; i < m; ++i) fixed_factor *= 2;  // half-edge swap per loop
  }
  for (const auto& v : g.verts) {
    int run = 1;
    for (size_t i = 1; i <= v.dilaton.size(); ++i) {
      if (i < v.dilaton.size() && v.dilaton[i] == v.dilaton[i - 1]) {
        ++run;
      } else {
        for (int j = 2; j <= run; ++j) fixed_factor *= j;
        run = 1;
      }
    }
  }

  long long valid_perms = 0;
  std::vector<int> perm(V);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      if (pinned[v] && perm[v] != v) ok = false;
      if (ok && !vert_eq(v, perm[v])) ok = false;
    }
    if (ok) {
      std::map<EdgeType, int> mapped;
      for (const auto& e : g.edges)
        mapped[edge_type(perm[e.v1], e.a1, perm[e.v2], e.a2)]++;
      if (mapped != types) ok = false;
    }
    if (ok) ++valid_perms;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return valid_perms * fixed_factor;
}

namespace {

// Sorted dilaton height lists: length n, entries >= 2, sum <= budget.
void gen_dilaton(int n, int budget, int minv, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = minv; a <= budget - 2 * (n - 1); ++a) {
    cur.push_back(a);
    gen_dilaton(n - 1, budget - a, a, cur, out);
    cur.pop_back();
  }
}

// Ordered compositions of total into n slots.
void gen_comp(int n, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    gen_comp(n - 1, total - a, cur, out);
    cur.pop_back();
  }
}

bool connected(int V, const std::vector<std::pair<int, int>>& edges) {
  if (V == 1) return true;
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [u, v] : edges) parent[find(u)] = find(v);
  for (int v = 1; v < V; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(int g, int k, int N, int K) {
  if (2 * g - 2 + k <= 0) throw ConfigError("unstable (g,k): 2g-2+k must be positive");
  std::vector<StableGraph> result;
  std::set<std::string> seen;

  int Vmax = std::max(1, (5 * g - 4 + 2 * k) / 2);
  int Emax = std::max(0, 3 * g - 3 + k);

  for (int V = 1; V <= Vmax; ++V) {
    // Genus assignments.
    std::vector<std::vector<int>> genus_lists;
    {
      std::vector<int> cur;
      std::function<void(int, int)> rec = [&](int v, int remaining) {
        if (v == V) {
          genus_lists.push_back(cur);
          return;
        }
        for (int gv = 0; gv <= remaining; ++gv) {
          cur.push_back(gv);
          rec(v + 1, remaining - gv);
          cur.pop_back();
        }
      };
      rec(0, g);
    }

    int slots = V * (V + 1) / 2;
    std::vector<std::pair<int, int>> slot_pairs;
    for (int u = 0; u < V; ++u)
      for (int v = u; v < V; ++v) slot_pairs.push_back({u, v});

    for (const auto& gv : genus_lists) {
      int gsum = std::accumulate(gv.begin(), gv.end(), 0);
      int E = g - 1 + V - gsum;
      if (E < 0 || E < V - 1 || E > Emax) continue;

      // Edge multisets: counts per unordered vertex pair.
      std::vector<std::vector<int>> edge_counts;
      {
        std::vector<int> cur;
        gen_comp(slots, E, cur, edge_counts);
      }
      for (const auto& ec : edge_counts) {
        std::vector<std::pair<int, int>> edge_list;
        for (int s = 0; s < slots; ++s)
          for (int c = 0; c < ec[s]; ++c) edge_list.push_back(slot_pairs[s]);
        if (!connected(V, edge_list)) continue;

        // Ordinary leaf assignments (labeled).
        int assignments = 1;
        for (int i = 0; i < k; ++i) assignments *= V;
        for (int asg = 0; asg < assignments; ++asg) {
          std::vector<int> leaf_v(k);
          int a = asg;
          for (int i = 0; i < k; ++i) {
            leaf_v[i] = a % V;
            a /= V;
          }

          // Non-dilaton valence and slot lists per vertex.
          std::vector<int> val_nd(V, 0);
          for (auto [u, v] : edge_list) {
            val_nd[u]++;
            val_nd[v]++;
          }
          for (int i = 0; i < k; ++i) val_nd[leaf_v[i]]++;

          // Dilaton counts per vertex: the dimension budget 3g-3+val grows by
          // one per dilaton leaf while its height costs at least two, so
          // dil_cnt <= 3g-3+val_nd; a negative bound kills the configuration.
          std::vector<int> dil_max(V);
          bool dead = false;
          for (int v = 0; v < V; ++v) {
            dil_max[v] = 3 * gv[v] - 3 + val_nd[v];
            if (dil_max[v] < 0) dead = true;
          }
          if (dead) continue;

          std::vector<int> dil_cnt(V, 0);
          std::function<void(int)> rec_dil = [&](int v) {
            if (v == V) {
              // stability with dilaton counts
              for (int i = 0; i < V; ++i)
                if (2 * gv[i] - 2 + val_nd[i] + dil_cnt[i] <= 0) return;

              // Heights per vertex: dilaton lists then free slots.
              struct VertexChoice {
                std::vector<std::vector<int>> dil;   // sorted dilaton heights
                std::vector<std::vector<int>> free_; // composition over free slots
              };
              // free slots per vertex: edge halves then leaves, in global scan order
              std::vector<int> free_slots(V, 0);
              for (auto [u, vv] : edge_list) {
                free_slots[u]++;
                free_slots[vv]++;
              }
              for (int i = 0; i < k; ++i) free_slots[leaf_v[i]]++;

              std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> choices(V);
              for (int v2 = 0; v2 < V; ++v2) {
                int budget = 3 * gv[v2] - 3 + val_nd[v2] + dil_cnt[v2];
                std::vector<std::vector<int>> dls;
                std::vector<int> cur;
                gen_dilaton(dil_cnt[v2], budget, 2, cur, dls);
                for (const auto& dl : dls) {
                  int sd = std::accumulate(dl.begin(), dl.end(), 0);
                  std::vector<std::vector<int>> comps;
                  std::vector<int> cur2;
                  gen_comp(free_slots[v2], budget - sd, cur2, comps);
                  for (const auto& cp : comps) choices[v2].push_back({dl, cp});
                }
                if (choices[v2].empty()) break;
              }
              bool any_empty = false;
              for (int v2 = 0; v2 < V; ++v2)
                if (choices[v2].empty()) any_empty = true;
              if (any_empty) return;

              // Cartesian product over vertices.
              std::vector<size_t> pick(V, 0);
              while (true) {
                // Assemble heights.
                StableGraph sg;
                sg.verts.resize(V);
                std::vector<int> free_used(V, 0);
                for (int v2 = 0; v2 < V; ++v2) {
                  sg.verts[v2].genus = gv[v2];
                  sg.verts[v2].dilaton = choices[v2][pick[v2]].first;
                }
                bool edge_ok = true;
                for (auto [u, vv] : edge_list) {
                  int a1 = choices[u][pick[u]].second[free_used[u]++];
                  int a2 = choices[vv][pick[vv]].second[free_used[vv]++];
                  if (a1 + a2 > K - 1) edge_ok = false;
                  sg.edges.push_back({u, a1, vv, a2});
                }
                for (int i = 0; i < k; ++i) {
                  int v2 = leaf_v[i];
                  sg.leaves.push_back({v2, choices[v2][pick[v2]].second[free_used[v2]++]});
                }
                if (edge_ok) {
                  // Markings.
                  int marks = 1;
                  for (int i = 0; i < V; ++i) marks *= N;
                  for (int mk = 0; mk < marks; ++mk) {
                    int mm = mk;
                    for (int v2 = 0; v2 < V; ++v2) {
                      sg.verts[v2].marking = mm % N;
                      mm /= N;
                    }
                    std::string canon = sg.canonical();
                    if (seen.insert(canon).second) {
                      StableGraph out = sg;
                      out.aut = automorphism_order(out);
                      result.push_back(std::move(out));
                    }
                  }
                }
                // next pick
                int v2 = 0;
                while (v2 < V) {
                  if (++pick[v2] < choices[v2].size()) break;
                  pick[v2] = 0;
                  ++v2;
                }
                if (v2 == V) break;
              }
              return;
            }
            for (int c = 0; c <= dil_max[v]; ++c) {
              dil_cnt[v] = c;
              rec_dil(v + 1);
            }
            dil_cnt[v] = 0;
          };
          rec_dil(0);
        }
      }
    }
  }
  return result;
}

GraphWeights prepare_weights(const FrobeniusData& data, const RMatrix& R, int g, int k,
                             LeafMode mode, int max_leaf_height, int max_dil_height,
                             int max_edge_height) {
  GraphWeights W;
  W.N = data.alg.N;
  int K = R.K;

  int s_order = (mode == LeafMode::kDescendent && data.S.has_value()) ? data.S->order() : 0;
  W.leaf_heights = max_leaf_height + 1 + s_order;

  // Joint ring: base variables first, then leaf symbols tb{mu}_{a}.
  std::vector<std::string> names = data.vt->names;
  std::vector<int> grp(names.size(), 0);
  for (int a = 0; a < W.leaf_heights; ++a)
    for (int mu = 0; mu < W.N; ++mu) {
      names.push_back("tb" + std::to_string(mu) + "_" + std::to_string(a));
      grp.push_back(1);
    }
  W.vt = make_var_table(names, grp, data.vt->cap0, std::max(1, k));
  std::vector<int> idmap(data.vt->names.size());
  std::iota(idmap.begin(), idmap.end(), 0);
  int nb = static_cast<int>(data.vt->names.size());

  auto lift = [&](const TSeries& s) { return s.remap(W.vt, idmap); };
  auto lift_mat = [&](const Mat<TSeries>& m) {
    Mat<TSeries> out(m.rows(), m.cols(), TSeries(W.vt));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.at(i, j) = lift(m.at(i, j));
    return out;
  };

  for (int j = 0; j <= K; ++j) W.R.push_back(lift_mat(R.coef[j]));
  Mat<TSeries> Psi = lift_mat(data.Psi);
  for (int i = 0; i < W.N; ++i) {
    W.sqrtDelta.push_back(lift(data.sqrtDelta[i]));
    W.invSqrtDelta.push_back(lift(data.invSqrtDelta[i]));
    W.Delta.push_back(lift(data.Delta[i]));
  }

  // Insertion symbols and (for the descendent potential) their S-transform.
  std::vector<std::vector<TSeries>> tbar(W.leaf_heights, std::vector<TSeries>(W.N, TSeries(W.vt)));
  for (int a = 0; a < W.leaf_heights; ++a)
    for (int mu = 0; mu < W.N; ++mu)
      tbar[a][mu] = TSeries::variable(W.vt, nb + a * W.N + mu);
  if (mode == LeafMode::kDescendent) {
    std::optional<ZSeries<Mat<TSeries>>> S;
    if (data.S.has_value()) {
      ZSeries<Mat<TSeries>> lifted(0, data.S->order(), Mat<TSeries>(W.N, W.N, TSeries(W.vt)));
      for (int j = 0; j <= data.S->order(); ++j) lifted.set_coeff(j, lift_mat(data.S->coeff(j)));
      S = lifted;
    }
    tbar = s_plus_transform(S, tbar);
  }
  W.tbar = tbar;

  // (L)^i_a = [z^a] sum_{mu,j} tbar^mu(z) Psi_mu^j R_j^i(-z)
  W.leaf_factor.assign(W.N, std::vector<TSeries>(max_leaf_height + 1, TSeries(W.vt)));
  for (int i = 0; i < W.N; ++i)
    for (int a = 0; a <= max_leaf_height; ++a) {
      TSeries acc(W.vt);
      for (int c = 0; c <= a && c < W.leaf_heights; ++c) {
        int e = a - c;
        if (e > K) continue;
        for (int j = 0; j < W.N; ++j) {
          TSeries rji = W.R[e].at(j, i);
          if (e % 2) rji = -rji;
          if (rji.is_zero()) continue;
          for (int mu = 0; mu < W.N; ++mu) {
            if (tbar[c][mu].is_zero() || Psi.at(mu, j).is_zero()) continue;
            acc += tbar[c][mu] * Psi.at(mu, j) * rji;
          }
        }
      }
      W.leaf_factor[i][a] = acc;
    }

  // (L^1)^i_a = [z^{a-1}] (-sum_j (1/sqrt Delta^j) R_j^i(-z)), a >= 2
  W.dil_factor.assign(W.N, std::vector<TSeries>(std::max(0, max_dil_height + 1), TSeries(W.vt)));
  for (int i = 0; i < W.N; ++i)
    for (int a = 2; a <= max_dil_height; ++a) {
      if (a - 1 > K) continue;
      TSeries acc(W.vt);
      for (int j = 0; j < W.N; ++j) acc += W.invSqrtDelta[j] * W.R[a - 1].at(j, i);
      if ((a - 1) % 2 == 0) acc = -acc;  // -(-1)^{a-1}
      W.dil_factor[i][a] = acc;
    }

  // Edge factors via exact division by (z + w).
  int KE = K;
  W.edge_factor.assign(
      W.N, std::vector<std::vector<std::vector<TSeries>>>(
               W.N, std::vector<std::vector<TSeries>>(KE + 1, std::vector<TSeries>(KE + 1, TSeries(W.vt)))));
  if (max_edge_height >= 0) {
    for (int i = 0; i < W.N; ++i)
      for (int j = 0; j < W.N; ++j) {
        std::vector<std::vector<TSeries>> num(KE + 1, std::vector<TSeries>(KE + 1, TSeries(W.vt)));
        for (int a = 0; a <= KE; ++a)
          for (int b = 0; b <= KE; ++b) {
            TSeries s(W.vt);
            for (int p = 0; p < W.N; ++p) s += W.R[a].at(p, i) * W.R[b].at(p, j);
            if ((a + b) % 2) s = -s;
            TSeries n = -s;
            if (a == 0 && b == 0 && i == j) n += TSeries(W.vt, Scalar(Rational(1)));
            num[a][b] = n;
          }
        auto q = divide_by_z_plus_w(num, TSeries(W.vt));
        for (int a = 0; a <= KE; ++a)
          for (int b = 0; b <= KE; ++b)
            if (a + b <= KE - 1) W.edge_factor[i][j][a][b] = q[a][b];
      }
  }
  return W;
}

TSeries GraphWeights::graph_weight(const StableGraph& g) const {
  TSeries w(vt, Scalar(Rational(1)));
  for (size_t v = 0; v < g.verts.size(); ++v) {
    int i = g.verts[v].marking;
    std::vector<int> hs = g.heights_at(static_cast<int>(v));
    Rational psi = psi_intersection(g.verts[v].genus, hs);
    if (psi == 0) return TSeries(vt);
    int pow = 2 * g.verts[v].genus - 2 + g.valence(static_cast<int>(v));
    TSeries vf(vt, Scalar(psi));
    for (int p = 0; p < pow; ++p) vf = vf * sqrtDelta[i];
    w = w * vf;
    for (int a : g.verts[v].dilaton) {
      w = w * dil_factor[i][a];
      if (w.is_zero()) return w;
    }
  }
  for (const auto& e : g.edges) {
    w = w * edge_factor[g.verts[e.v1].marking][g.verts[e.v2].marking][e.a1][e.a2];
    if (w.is_zero()) return w;
  }
  for (const auto& l : g.leaves) {
    w = w * leaf_factor[g.verts[l.v].marking][l.a];
    if (w.is_zero()) return w;
  }
  return w;
}

namespace {

PotentialTable potential_impl(int g, int k, const FrobeniusData& data, const RMatrix& R,
                              LeafMode mode, uint64_t shuffle_seed) {
  std::vector<StableGraph> graphs = enumerate_stable_graphs(g, k, data.alg.N, R.K);
  int max_leaf = 0, max_dil = 0, max_edge = -1;
  for (const auto& G : graphs) {
    for (const auto& l : G.leaves) max_leaf = std::max(max_leaf, l.a);
    for (const auto& v : G.verts)
      for (int a : v.dilaton) max_dil = std::max(max_dil, a);
    for (const auto& e : G.edges) max_edge = std::max({max_edge, e.a1, e.a2});
  }
  GraphWeights W = prepare_weights(data, R, g, k, mode, max_leaf, max_dil, max_edge);

  if (shuffle_seed != 0) {
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(graphs.begin(), graphs.end(), rng);
  }

  int threads = 1;
  if (const char* env = std::getenv("GKM_THREADS")) threads = std::max(1, std::atoi(env));
  threads = std::min<int>(threads, std::max<size_t>(graphs.size(), 1));

  TSeries total(W.vt);
  if (threads <= 1) {
    for (const auto& G : graphs) {
      TSeries w = W.graph_weight(G);
      if (w.is_zero()) continue;
      total += w * Scalar(Rational(1, G.aut));
    }
  } else {
    std::vector<std::future<TSeries>> futs;
    size_t chunk = (graphs.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t lo = t * chunk, hi = std::min(graphs.size(), (t + 1) * chunk);
      futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
        TSeries acc(W.vt);
        for (size_t i = lo; i < hi; ++i) {
          TSeries w = W.graph_weight(graphs[i]);
          if (!w.is_zero()) acc += w * Scalar(Rational(1, graphs[i].aut));
        }
        return acc;
      }));
    }
    for (auto& f : futs) total += f.get();  // deterministic ordered merge
  }

  PotentialTable tbl;
  tbl.g = g;
  tbl.k = k;
  tbl.vt = W.vt;
  tbl.n_base = static_cast<int>(data.vt->names.size());
  tbl.value = total * Scalar(Rational(Int(1), factorial(k)));
  return tbl;
}

}  // namespace

PotentialTable ancestor_potential(int g, int k, const FrobeniusData& data, const RMatrix& R,
                                  uint64_t shuffle_seed) {
  return potential_impl(g, k, data, R, LeafMode::kAncestor, shuffle_seed);
}

PotentialTable descendent_potential(int g, int k, const FrobeniusData& data, const RMatrix& R,
                                    uint64_t shuffle_seed) {
  if (!data.classical && !data.S.has_value())
    throw ConfigError("descendent potential needs an s_operator block for deformed data");
  return potential_impl(g, k, data, R, LeafMode::kDescendent, shuffle_seed);
}

OneForm f10_closed_form(const FrobeniusData& data, const RMatrix& R) {
  int N = data.alg.N;
  OneForm out(data.vt, data.n_t);
  for (int i = 0; i < N; ++i) {
    TSeries dinv = data.Delta[i].inverse();
    for (int mu = 0; mu < data.n_t; ++mu)
      out.c[mu] += data.Delta[i].derivative(mu) * dinv * Scalar(Rational(1, 48));
    out += data.du[i] * (R.coef[1].at(i, i) * Scalar(Rational(1, 2)));
  }
  return out;
}

OneForm f10_graph_check(const FrobeniusData& data, const RMatrix& R) {
  int N = data.alg.N;
  OneForm out(data.vt, data.n_t);
  for (int j = 0; j < N; ++j) {
    TSeries cont1(data.vt);
    for (int i = 0; i < N; ++i)
      cont1 -= data.sqrtDelta[i] * data.invSqrtDelta[j] * R.coef[1].at(j, i);
    cont1 = cont1 * Scalar(Rational(1, 24));
    TSeries sum_p(data.vt);
    for (int p = 0; p < N; ++p) sum_p += data.invSqrtDelta[p] * R.coef[1].at(p, j);
    TSeries cont2 = data.Delta[j] * data.invSqrtDelta[j] * sum_p * Scalar(Rational(1, 24));
    TSeries cont3 = R.coef[1].at(j, j) * Scalar(Rational(1, 2));
    out += data.du[j] * (cont1 + cont2 + cont3);
  }
  return out;
}

TSeries three_graph_f11(const GraphWeights& W) {
  TSeries total(W.vt);
  for (int i = 0; i < W.N; ++i) {
    // Gamma_1: genus-one vertex, one leaf at height 1.
    total += W.sqrtDelta[i] * W.leaf_factor[i][1] * Scalar(Rational(1, 24));
    // Gamma_2: genus-one vertex, leaf at height 0, dilaton leaf at height 2.
    total += W.Delta[i] * W.leaf_factor[i][0] * W.dil_factor[i][2] * Scalar(Rational(1, 24));
    // Gamma_3: genus-zero vertex with a loop, leaf at height 0; |Aut| = 2.
    total += W.sqrtDelta[i] * W.leaf_factor[i][0] * W.edge_factor[i][i][0][0] *
             Scalar(Rational(1, 2));
  }
  return total;
}

}  // namespace gkm
