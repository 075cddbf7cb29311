// Copyright 2026 The attdisc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "attdisc/clique.hpp"

#include <algorithm>

namespace attdisc {

int AgreementGraph::edge_count() const {
  int twice = 0;
  for (const Bitset& row : adjacency) twice += row.count();
  return twice / 2;
}

AgreementGraph build_agreement_graph(const PairDistanceMatrix& d, const PairIndex& poa,
                                     std::span<const int> subset) {
  if (subset.size() < 2) {
    throw std::invalid_argument("build_agreement_graph: need at least 2 nodes");
  }
  AgreementGraph g;
  g.vertices.assign(subset.begin(), subset.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  const int k = g.order();
  g.adjacency.assign(k, Bitset(k));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const PairIndex pair = triangular_index(g.vertices[a], g.vertices[b], d.node_count());
      if (d.at(poa.flat, pair.flat) == 0) {
        g.adjacency[a].set(b);
        g.adjacency[b].set(a);
      }
    }
  }
  return g;
}

namespace {

struct CliqueSearch {
  const std::vector<Bitset>& adj;
  int best = 0;

  void expand(int clique_size, Bitset candidates, Bitset excluded) {
    if (candidates.none() && excluded.none()) {
      best = std::max(best, clique_size);
      return;
    }
    if (clique_size + candidates.count() <= best) return;  // cannot improve

    // pivot: vertex of P u X with the most candidate neighbours
    int pivot = -1;
    int pivot_degree = -1;
    auto consider = [&](int v) {
      const int deg = adj[v].count_and(candidates);
      if (deg > pivot_degree) {
        pivot_degree = deg;
        pivot = v;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    Bitset branch = candidates;
    if (pivot >= 0) branch.and_not(adj[pivot]);
    branch.for_each([&](int v) {
      Bitset next_candidates = candidates & adj[v];
      Bitset next_excluded = excluded & adj[v];
      expand(clique_size + 1, std::move(next_candidates), std::move(next_excluded));
      candidates.reset(v);
      excluded.set(v);
    });
  }
};

// smallest-last (degeneracy) order of the vertices
std::vector<int> degeneracy_order(const std::vector<Bitset>& adj) {
  const int k = static_cast<int>(adj.size());
  std::vector<int> degree(k);
  Bitset alive = Bitset::full(k);
  for (int v = 0; v < k; ++v) degree[v] = adj[v].count();
  std::vector<int> order;
  order.reserve(k);
  for (int step = 0; step < k; ++step) {
    int best_v = -1;
    alive.for_each([&](int v) {
      if (best_v < 0 || degree[v] < degree[best_v]) best_v = v;
    });
    order.push_back(best_v);
    alive.reset(best_v);
    adj[best_v].for_each([&](int u) {
      if (alive.test(u)) --degree[u];
    });
  }
  return order;
}

}  // namespace

int max_clique_size(const AgreementGraph& g) {
  const int k = g.order();
  if (k == 0) {
    throw std::invalid_argument("max_clique_size: empty vertex set");
  }
  const std::vector<int> order = degeneracy_order(g.adjacency);
  CliqueSearch search{g.adjacency};
  search.best = 1;  // a lone vertex is a clique
  Bitset later = Bitset::full(k);
  Bitset earlier(k);
  for (int v : order) {
    later.reset(v);
    Bitset candidates = g.adjacency[v] & later;
    Bitset excluded = g.adjacency[v] & earlier;
    search.expand(1, std::move(candidates), std::move(excluded));
    earlier.set(v);
  }
  return search.best;
}

int clique_dist(const PairDistanceMatrix& d, const PairIndex& poa, std::span<const int> subset) {
  const int k = static_cast<int>(subset.size());
  if (k < 2) {
    throw std::invalid_argument("clique_dist: need at least 2 nodes");
  }
  int pair_sum = 0;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const PairIndex pair = triangular_index(std::min(subset[a], subset[b]),
                                              std::max(subset[a], subset[b]), d.node_count());
      pair_sum += d.at(poa.flat, pair.flat);
    }
  }
  // every pair at the maximum distance 2: no node ever agrees, gamma = 0
  if (pair_sum == k * (k - 1)) return k;
  return k - max_clique_size(build_agreement_graph(d, poa, subset));
}

}  // namespace attdisc
