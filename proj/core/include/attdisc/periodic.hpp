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

#include <vector>

#include "attdisc/types.hpp"

namespace attdisc {

/// One iteration of the pair-addition greedy, recorded for replay checks.
struct GreedyPeriodicStep {
  PairIndex chosen;              // node pair added in this step
  int gain = 0;                  // |s_chosen ∩ U| when it was picked
  std::vector<int> lower_bounds;  // r after the update, by POA flat index - 1
  int uncovered_after = 0;
  int candidates_after = 0;
};

struct GreedyPeriodicTrace {
  std::vector<GreedyPeriodicStep> steps;
  bool fell_back_to_all_nodes = false;
};

/**
 * Exact solver: enumerates node subsets of size max(1, 2K+1), then larger,
 * in lexicographic order, testing every POA through the clique reduction
 * (definition-based distance for single-node subsets) and returning the
 * first feasible subset in enumeration order.
 *
 * With budget.threads > 1 the combination stream of each size is processed
 * by a worker pool; the result is still the first feasible subset in
 * enumeration order.
 */
SolveResult solve_exact_periodic(const Instance& instance, const Budget& budget = {});

/**
 * Pair-addition greedy: repeatedly picks the node pair separating the most
 * still-uncovered POAs (ties: smallest flat pair index), drops every
 * candidate pair sharing a node with it, and credits each covered POA with
 * the pair's matrix entry. If the candidate pool empties before all POAs are
 * covered, the full node set is returned. Reported distances are recomputed
 * from the definition.
 */
SolveResult solve_greedy_periodic(const Instance& instance, const Budget& budget = {},
                                  GreedyPeriodicTrace* trace = nullptr);

/**
 * Post-hoc check of the hypothesis the greedy's approximation guarantee
 * rests on, for a finished
 * greedy run: at every iteration j and for every POA, the distance already
 * secured plus the distance available from the unused part of the optimal
 * set must reach 2K+1. Returns the number of (iteration, POA) violations;
 * the ratio bound is only guaranteed on runs where this returns 0.
 */
int greedy_hypothesis_violations(const Instance& instance, const GreedyPeriodicTrace& trace,
                                 const std::vector<int>& optimal_nodes);

}  // namespace attdisc
