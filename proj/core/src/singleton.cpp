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

#include "attdisc/singleton.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

namespace attdisc {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_of(const Budget& budget) {
  if (budget.max_seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget.max_seconds));
}

bool advance_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + 1 + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// column masks over the POA rows, 1-based column index
std::vector<Bitset> column_masks(const DiffMatrix& coverage) {
  const int n = coverage.node_count();
  const int rows = coverage.rows();
  std::vector<Bitset> cols(n + 1, Bitset(rows));
  for (int flat = 1; flat <= rows; ++flat) {
    coverage.row(flat).for_each([&](int j0) { cols[j0 + 1].set(flat - 1); });
  }
  return cols;
}

struct ColumnGroup {
  Bitset mask;               // covered rows
  std::vector<int> members;  // ascending column indices
};

// Lower bound on the columns still needed: walk candidate coverages in
// descending order, charging each copy its full current coverage, until the
// outstanding total demand is paid. Any real completion reduces the total by
// at most that much per column, so this never overestimates. Returns -1 when
// even all candidates cannot pay.
int coverage_sum_bound(std::vector<std::pair<int, int>>& cover_copies, int total_residual) {
  std::sort(cover_copies.begin(), cover_copies.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  int need = total_residual;
  int used = 0;
  for (const auto& [cover, copies] : cover_copies) {
    for (int c = 0; c < copies; ++c) {
      need -= cover;
      ++used;
      if (need <= 0) return used;
    }
  }
  return need <= 0 ? used : -1;
}

// Branch and bound over column groups, used two ways: as the optimizer that
// proves the minimum cardinality (phase 1) and as a decision procedure that
// asks whether some residual system can be finished within a budget (the
// lexicographic extraction of phase 2). Branching always picks the undecided
// group covering the most rows with demand left, taking many copies first,
// so feasible completions surface greedily fast.
struct GroupSearch {
  const std::vector<ColumnGroup>& groups;
  const std::vector<int>& copies;  // available copies per group
  int row_count;
  std::atomic<int>& incumbent;  // exclusive prune at chosen + bound >= incumbent
  const std::optional<Clock::time_point>& deadline;
  std::atomic<bool>& timed_out;
  int stop_at = -1;  // decision mode: stop once a completion of this size exists

  std::vector<int> residual{};  // per row, outstanding demand
  std::vector<int> avail{};     // per row, copies left among undecided groups
  std::vector<char> decided{};
  bool satisfied = false;
  long long ticks = 0;

  bool time_ok() {
    if (timed_out.load(std::memory_order_relaxed)) return false;
    if (deadline && (++ticks & 1023) == 0 && Clock::now() > *deadline) {
      timed_out.store(true, std::memory_order_relaxed);
    }
    return !timed_out.load(std::memory_order_relaxed);
  }

  void improve(int value) {
    int cur = incumbent.load();
    while (value < cur && !incumbent.compare_exchange_weak(cur, value)) {
    }
    if (stop_at >= 0 && value <= stop_at) satisfied = true;
  }

  void reset(const std::vector<int>& initial_residual) {
    residual = initial_residual;
    avail.assign(row_count, 0);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (copies[g] > 0) {
        groups[g].mask.for_each([&](int i) { avail[i] += copies[g]; });
      }
    }
    decided.assign(groups.size(), 0);
    satisfied = false;
  }

  void dfs(int chosen) {
    if (satisfied || !time_ok()) return;
    int total_residual = 0;
    int max_residual = 0;
    for (int i = 0; i < row_count; ++i) {
      total_residual += residual[i];
      max_residual = std::max(max_residual, residual[i]);
      if (residual[i] > avail[i]) return;  // unsatisfiable down this branch
    }
    if (total_residual == 0) {
      improve(chosen);
      return;
    }

    Bitset active(row_count);
    for (int i = 0; i < row_count; ++i) {
      if (residual[i] > 0) active.set(i);
    }
    int branch = -1;
    int branch_cover = 0;
    std::vector<std::pair<int, int>> cover_copies;
    cover_copies.reserve(groups.size());
    for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
      if (decided[g] || copies[g] == 0) continue;
      const int cover = groups[g].mask.count_and(active);
      if (cover == 0) continue;
      cover_copies.emplace_back(cover, copies[g]);
      if (cover > branch_cover) {
        branch_cover = cover;
        branch = g;
      }
    }
    if (branch < 0) return;

    const int sum_bound = coverage_sum_bound(cover_copies, total_residual);
    if (sum_bound < 0) return;
    const int bound = std::max(max_residual, sum_bound);
    if (chosen + bound >= incumbent.load(std::memory_order_relaxed)) return;

    const ColumnGroup& group = groups[branch];
    const int available = copies[branch];
    decided[branch] = 1;
    std::vector<std::pair<int, int>> saved;  // (row, residual before)
    int useful_max = 0;
    group.mask.for_each([&](int i) {
      avail[i] -= available;
      saved.emplace_back(i, residual[i]);
      useful_max = std::max(useful_max, residual[i]);
    });

    for (int take = std::min(available, useful_max); take >= 0; --take) {
      for (const auto& [row, before] : saved) residual[row] = std::max(0, before - take);
      dfs(chosen + take);
      if (satisfied || timed_out.load(std::memory_order_relaxed)) break;
    }

    for (const auto& [row, before] : saved) residual[row] = before;
    group.mask.for_each([&](int i) { avail[i] += available; });
    decided[branch] = 0;
  }
};

}  // namespace

MultiCoverProblem make_multi_cover(const Instance& instance) {
  return MultiCoverProblem{build_diff_matrix(instance), instance.required_distance()};
}

SolveResult solve_greedy_singleton(const Instance& instance, GreedySingletonTrace* trace) {
  const MultiCoverProblem problem = make_multi_cover(instance);
  if (!problem.feasible()) {
    return SolveResult{SolveStatus::kInfeasible, {}};
  }
  if (trace) *trace = {};

  const int n = problem.coverage.node_count();
  const int rows = problem.coverage.rows();
  const std::vector<Bitset> col = column_masks(problem.coverage);

  std::vector<int> coverage_counts(rows, 0);  // the r vector
  Bitset uncovered = Bitset::full(rows);
  std::vector<char> used(n + 1, 0);
  std::vector<int> chosen;

  while (uncovered.any()) {
    int best_column = -1;
    int best_gain = -1;
    for (int j = 1; j <= n; ++j) {
      if (used[j]) continue;
      const int gain = col[j].count_and(uncovered);
      if (gain > best_gain) {  // ties resolve to the smallest column index
        best_gain = gain;
        best_column = j;
      }
    }
    used[best_column] = 1;
    chosen.push_back(best_column);
    col[best_column].for_each([&](int l) {
      if (uncovered.test(l)) {
        if (++coverage_counts[l] == problem.demand) uncovered.reset(l);
      }
    });
    if (trace) {
      trace->steps.push_back(GreedySingletonStep{best_column, best_gain, coverage_counts,
                                                 uncovered.count()});
    }
  }

  return SolveResult{SolveStatus::kSolved,
                     evaluate_nodes(instance, chosen, Method::kGreedySingleton)};
}

SolveResult solve_exact_singleton(const Instance& instance, const Budget& budget) {
  const MultiCoverProblem problem = make_multi_cover(instance);
  if (!problem.feasible()) {
    return SolveResult{SolveStatus::kInfeasible, {}};
  }
  const auto deadline = deadline_of(budget);
  const int n = problem.coverage.node_count();
  const int rows = problem.coverage.rows();
  const std::vector<Bitset> col = column_masks(problem.coverage);

  // the greedy solution seeds the incumbent
  const SolveResult seed = solve_greedy_singleton(instance, nullptr);
  std::atomic<int> incumbent{seed.discriminator.cardinality()};
  std::atomic<bool> timed_out{false};

  // group identical columns; empty columns can never help
  std::vector<ColumnGroup> groups;
  {
    std::map<std::vector<uint64_t>, int> index_of;
    for (int j = 1; j <= n; ++j) {
      if (col[j].none()) continue;
      auto [it, inserted] = index_of.try_emplace(col[j].words(), static_cast<int>(groups.size()));
      if (inserted) groups.push_back(ColumnGroup{col[j], {}});
      groups[it->second].members.push_back(j);
    }
  }

  std::vector<int> full_copies(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    full_copies[g] = static_cast<int>(groups[g].members.size());
  }
  const std::vector<int> full_demand(rows, problem.demand);

  if (budget.threads <= 1 || groups.size() < 2) {
    GroupSearch search{groups, full_copies, rows, incumbent, deadline, timed_out};
    search.reset(full_demand);
    search.dfs(0);
  } else {
    // parallel exploration: split the root group's multiplicity branches
    // across workers; the incumbent is shared
    Bitset active = Bitset::full(rows);
    int root = 0;
    int root_cover = -1;
    for (int g = 0; g < static_cast<int>(groups.size()); ++g) {
      const int cover = groups[g].mask.count_and(active);
      if (cover > root_cover) {
        root_cover = cover;
        root = g;
      }
    }
    const int copies = full_copies[root];
    const int take_max = std::min(copies, problem.demand);
    std::atomic<int> next_take{0};
    std::vector<std::thread> pool;
    const int workers = std::min(budget.threads, take_max + 1);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int offset = next_take.fetch_add(1); offset <= take_max;
             offset = next_take.fetch_add(1)) {
          const int take = take_max - offset;  // larger takes first, like the serial order
          GroupSearch search{groups, full_copies, rows, incumbent, deadline, timed_out};
          search.reset(full_demand);
          search.decided[root] = 1;
          groups[root].mask.for_each([&](int i) {
            search.avail[i] -= copies;
            search.residual[i] = std::max(0, search.residual[i] - take);
          });
          search.dfs(take);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  if (timed_out.load()) {
    return SolveResult{SolveStatus::kBudgetExceeded, {}};
  }
  const int optimum = incumbent.load();

  // Lexicographically smallest optimal set: scan columns in ascending order
  // and keep column j whenever the rest can still be finished within the
  // remaining budget using columns beyond j. Each such question is a
  // decision run of the same branch and bound, restricted to the suffix.
  std::vector<int> group_of(n + 1, -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int member : groups[g].members) group_of[member] = static_cast<int>(g);
  }
  // suffix_copies[g] is maintained as columns scan left to right
  std::vector<int> suffix_copies = full_copies;
  std::vector<int> residual = full_demand;
  int total_residual = rows * problem.demand;
  int remaining = optimum;
  std::vector<int> chosen;

  auto finishable = [&](const std::vector<int>& state, int budget_left) {
    std::atomic<int> probe{budget_left + 1};
    GroupSearch search{groups, suffix_copies, rows, probe, deadline, timed_out};
    search.stop_at = budget_left;
    search.reset(state);
    search.dfs(0);
    return search.satisfied;
  };

  for (int j = 1; j <= n && total_residual > 0; ++j) {
    const int g = group_of[j];
    if (g < 0) continue;  // empty column
    --suffix_copies[g];   // the query may only use columns beyond j
    int gain = 0;
    groups[g].mask.for_each([&](int i) {
      if (residual[i] > 0) ++gain;
    });
    if (gain == 0) continue;  // no effect, never part of a minimum set
    std::vector<int> after = residual;
    groups[g].mask.for_each([&](int i) {
      if (after[i] > 0) --after[i];
    });
    const bool take_j = total_residual - gain == 0 || finishable(after, remaining - 1);
    if (timed_out.load()) {
      return SolveResult{SolveStatus::kBudgetExceeded, {}};
    }
    if (take_j) {
      chosen.push_back(j);
      residual = std::move(after);
      total_residual -= gain;
      --remaining;
    }
  }
  if (total_residual != 0) {
    // only reachable when a deadline cut the extraction short
    return SolveResult{SolveStatus::kBudgetExceeded, {}};
  }
  return SolveResult{SolveStatus::kSolved,
                     evaluate_nodes(instance, chosen, Method::kExactSingleton)};
}

SolveResult brute_force_singleton(const Instance& instance, int max_nodes) {
  const int n = instance.node_count();
  if (n > max_nodes) {
    return SolveResult{SolveStatus::kBudgetExceeded, {}};
  }
  const MultiCoverProblem problem = make_multi_cover(instance);
  if (!problem.feasible()) {
    return SolveResult{SolveStatus::kInfeasible, {}};
  }
  const int rows = problem.coverage.rows();

  for (int size = 1; size <= n; ++size) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 1);
    do {
      Bitset mask(n);
      for (int j : comb) mask.set(j - 1);
      bool feasible = true;
      for (int flat = 1; flat <= rows && feasible; ++flat) {
        feasible = problem.coverage.row(flat).count_and(mask) >= problem.demand;
      }
      if (feasible) {
        return SolveResult{SolveStatus::kSolved,
                           evaluate_nodes(instance, comb, Method::kBruteForce)};
      }
    } while (advance_combination(comb, n));
  }
  // feasibility precheck guarantees the full set works, so this is unreachable
  return SolveResult{SolveStatus::kInfeasible, {}};
}

int price_inequality_violations(const GreedySingletonTrace& trace, int pair_count_m,
                                int noise_bound, int optimum_size) {
  const long long total = static_cast<long long>(pair_count_m) * (2 * noise_bound + 1);
  long long prefix = 0;  // sum of earlier gains
  int violations = 0;
  for (const GreedySingletonStep& step : trace.steps) {
    const long long denom = total - prefix;
    // price 1/gain <= optimum/denom  <=>  denom <= optimum * gain
    if (denom <= 0 || step.gain <= 0 ||
        denom > static_cast<long long>(optimum_size) * step.gain) {
      ++violations;
    }
    prefix += step.gain;
  }
  return violations;
}

}  // namespace attdisc
