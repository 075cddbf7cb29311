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

#include "attdisc/distance.hpp"
#include "attdisc/types.hpp"

namespace attdisc {

/**
 * The singleton discrimination problem as a set multi-cover: rows of the
 * difference matrix are the POAs, columns are candidate nodes, and every row
 * must be covered 2K+1 times. Feasible iff every row sum reaches the demand.
 */
struct MultiCoverProblem {
  DiffMatrix coverage;
  int demand;

  bool feasible() const {
    for (int row = 1; row <= coverage.rows(); ++row) {
      if (coverage.row_sum(row) < demand) return false;
    }
    return true;
  }
};

/// Builds the multi-cover view of a singleton instance (all periods 1).
MultiCoverProblem make_multi_cover(const Instance& instance);

/// One iteration of the column greedy, recorded for replay checks.
struct GreedySingletonStep {
  int chosen_column = 0;          // 1-based node index
  int gain = 0;                   // |s_j ∩ U| when the column was picked
  std::vector<int> coverage_counts;  // r after the update
  int uncovered_after = 0;
};

struct GreedySingletonTrace {
  std::vector<GreedySingletonStep> steps;
};

/**
 * Exact minimum multi-cover by branch and bound on columns: identical
 * columns are grouped, groups are branched in order of residual coverage,
 * bounds come from the maximum residual row demand and from total demand
 * over best column coverage, and the incumbent is seeded with the greedy
 * result. Among all optimal node sets the lexicographically smallest is
 * returned.
 */
SolveResult solve_exact_singleton(const Instance& instance, const Budget& budget = {});

/**
 * Greedy multi-cover: repeatedly adds the column separating the most
 * still-uncovered POAs (ties: smallest column index), crediting each by one,
 * until every POA reaches the 2K+1 demand. Reported distances are
 * recomputed Hamming distances.
 */
SolveResult solve_greedy_singleton(const Instance& instance,
                                   GreedySingletonTrace* trace = nullptr);

/**
 * Exhaustive minimum over all column subsets in size-then-lexicographic
 * order; the test oracle for the exact solver. Refuses instances with more
 * than `max_nodes` nodes.
 */
SolveResult brute_force_singleton(const Instance& instance, int max_nodes = 20);

/**
 * Replays a finished greedy run against a known optimum size and counts the
 * iterations whose average price exceeds
 * |J*| / (M(2K+1) - sum of earlier gains). Zero for every run is what the
 * approximation guarantee rests on.
 */
int price_inequality_violations(const GreedySingletonTrace& trace, int pair_count_m,
                                int noise_bound, int optimum_size);

}  // namespace attdisc
