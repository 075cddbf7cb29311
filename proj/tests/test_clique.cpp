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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "attdisc/bench.hpp"
#include "attdisc/clique.hpp"
#include "attdisc/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace attdisc;

namespace {

Instance example1() { return parse_instance(fixtures::kExample1, 1); }

AgreementGraph graph_from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  AgreementGraph g;
  g.vertices.resize(order);
  for (int v = 0; v < order; ++v) g.vertices[v] = v + 1;
  g.adjacency.assign(order, Bitset(order));
  for (auto [a, b] : edges) {
    g.adjacency[a].set(b);
    g.adjacency[b].set(a);
  }
  return g;
}

}  // namespace

TEST_CASE("agreement graphs of the worked instance") {
  const Instance instance = example1();
  const PairDistanceMatrix d = build_pair_distance_matrix(instance);
  const std::vector<int> all{1, 2, 3, 4, 5};

  // (Att_2, Att_3): the only zero entry is (v_1, v_4)
  const AgreementGraph g23 = build_agreement_graph(d, triangular_index(2, 3, 3), all);
  CHECK(g23.order() == 5);
  CHECK(g23.edge_count() == 1);
  CHECK(g23.adjacent(0, 3));

  // (Att_1, Att_2): no node pair agrees
  const AgreementGraph g12 = build_agreement_graph(d, triangular_index(1, 2, 3), all);
  CHECK(g12.edge_count() == 0);

  // a two-node subset with a nonzero entry has no edge
  const AgreementGraph g2 =
      build_agreement_graph(d, triangular_index(1, 2, 3), std::vector<int>{1, 4});
  CHECK(g2.order() == 2);
  CHECK(g2.edge_count() == 0);

  CHECK_THROWS_AS(build_agreement_graph(d, triangular_index(1, 2, 3), std::vector<int>{1}),
                  std::invalid_argument);
}

TEST_CASE("maximum clique on hand graphs") {
  CHECK(max_clique_size(graph_from_edges(5, {})) == 1);  // isolated vertices
  CHECK(max_clique_size(graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) ==
        4);  // K_4
  // the 5-vertex graph with the single edge v_1 - v_4
  CHECK(max_clique_size(graph_from_edges(5, {{0, 3}})) == 2);
  CHECK_THROWS_AS(max_clique_size(AgreementGraph{}), std::invalid_argument);
}

TEST_CASE("maximum clique is invariant under vertex relabeling") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = 3 + static_cast<int>(rng() % 8);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < order; ++a) {
      for (int b = a + 1; b < order; ++b) {
        if (rng() & 1) edges.emplace_back(a, b);
      }
    }
    const int size = max_clique_size(graph_from_edges(order, edges));

    std::vector<int> relabel(order);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<std::pair<int, int>> permuted;
    for (auto [a, b] : edges) permuted.emplace_back(relabel[a], relabel[b]);
    CHECK(max_clique_size(graph_from_edges(order, permuted)) == size);
  }
}

TEST_CASE("clique reduction reproduces the worked cases") {
  const Instance instance = example1();
  const PairDistanceMatrix d = build_pair_distance_matrix(instance);
  // case 1: 3 - |MC| = 1
  CHECK(clique_dist(d, triangular_index(2, 3, 3), std::vector<int>{1, 2, 4}) == 1);
  // case 2: every pair at distance 2, exceptional branch
  CHECK(clique_dist(d, triangular_index(1, 2, 3), std::vector<int>{1, 2, 3}) == 3);
  // case 3: edgeless but not exceptional, 3 - 1 = 2
  CHECK(clique_dist(d, triangular_index(2, 3, 3), std::vector<int>{1, 2, 3}) == 2);
  CHECK_THROWS_AS(clique_dist(d, triangular_index(1, 2, 3), std::vector<int>{2}),
                  std::invalid_argument);
}

TEST_CASE("exceptional branch triggers exactly when every pair is at distance 2") {
  const Instance instance = parse_instance("2 3\n1\n000\n1\n111\n", 1);
  const PairDistanceMatrix d = build_pair_distance_matrix(instance);
  const std::vector<int> all{1, 2, 3};
  int pair_sum = 0;
  for (int c = 1; c <= d.cols(); ++c) pair_sum += d.at(1, c);
  CHECK(pair_sum == 3 * 2);
  CHECK(clique_dist(d, triangular_index(1, 2, 2), all) == 3);
}

TEST_CASE("clique route equals the definition on random instances") {
  // executable statement of the distance-to-clique reduction, including its
  // exceptional branch; any counterexample is printed verbatim
  int checked = 0;
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    ExperimentConfig config;
    config.n = 3 + static_cast<int>(seed % 6);  // up to 8
    config.m = 2 + static_cast<int>(seed % 3);  // up to 4
    config.max_period = 1 + static_cast<int>(seed % 4);
    config.seed = 31000 + seed;
    const Instance instance = generate_instance(config, 0);
    const int n = instance.node_count();
    const int m = instance.attractor_count();
    const PairDistanceMatrix d = build_pair_distance_matrix(instance);
    for (int i1 = 1; i1 <= m; ++i1) {
      for (int i2 = i1 + 1; i2 <= m; ++i2) {
        const PairIndex poa = triangular_index(i1, i2, m);
        for (int mask = 1; mask < (1 << n); ++mask) {
          std::vector<int> subset;
          for (int j = 0; j < n; ++j) {
            if (mask & (1 << j)) subset.push_back(j + 1);
          }
          if (subset.size() < 2) continue;
          const int via_clique = clique_dist(d, poa, subset);
          const int via_definition =
              dist(instance.attractor(i1), instance.attractor(i2), subset);
          if (via_clique != via_definition) {
            CAPTURE(seed);
            CAPTURE(i1);
            CAPTURE(i2);
            CAPTURE(mask);
          }
          REQUIRE(via_clique == via_definition);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 10000);
}
