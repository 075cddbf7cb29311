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

#pragma once

#include <span>
#include <vector>

#include "attdisc/distance.hpp"
#include "attdisc/types.hpp"

namespace attdisc {

/**
 * Agreement graph of one POA restricted to a node subset: vertices are the
 * observed nodes, and two nodes are adjacent iff their two-node distance for
 * the POA is zero (observing just the two cannot tell the attractors apart).
 */
struct AgreementGraph {
  std::vector<int> vertices;     // 1-based node ids, ascending
  std::vector<Bitset> adjacency;  // over local vertex indices, no self-loops

  int order() const { return static_cast<int>(vertices.size()); }
  bool adjacent(int a, int b) const { return adjacency[a].test(b); }
  int edge_count() const;
};

/// Builds the agreement graph for the POA `poa` over `subset` (>= 2 nodes).
AgreementGraph build_agreement_graph(const PairDistanceMatrix& d, const PairIndex& poa,
                                     std::span<const int> subset);

/// Size of a maximum clique, via Bron-Kerbosch with pivoting over a
/// degeneracy vertex order. Always >= 1 for a non-empty graph.
int max_clique_size(const AgreementGraph& g);

/**
 * Distance of one POA over `subset`, computed through the clique reduction:
 * |subset| - max clique of the agreement graph, with the exceptional branch
 * when every node pair sits at the maximum distance 2 (then the whole subset
 * counts). Requires |subset| >= 2; callers fall back to the definition-based
 * distance for singletons.
 */
int clique_dist(const PairDistanceMatrix& d, const PairIndex& poa, std::span<const int> subset);

}  // namespace attdisc
