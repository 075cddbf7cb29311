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

#include "attdisc/periodic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "attdisc/clique.hpp"
#include "attdisc/distance.hpp"

namespace attdisc {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_of(const Budget& budget) {
  if (budget.max_seconds <= 0) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(budget.max_seconds));
}

// next k-combination of {1..n} in lexicographic order; false when done
bool advance_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + 1 + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// Hands out consecutive blocks of the combination stream to workers, keeping
// the block sequence number so the first feasible subset in enumeration
// order can be identified.
class CombinationDispenser {
 public:
  CombinationDispenser(int n, int k, int block_size)
      : n_(n), block_size_(block_size), current_(k) {
    std::iota(current_.begin(), current_.end(), 1);
  }

  // claims the next block; returns false when the stream is exhausted or a
  // feasible subset in an earlier block makes later blocks irrelevant
  bool claim(long long best_block, long long& block_no,
             std::vector<std::vector<int>>& combos) {
    std::scoped_lock lock(mu_);
    if (exhausted_) return false;
    if (best_block >= 0 && best_block < next_block_) return false;
    block_no = next_block_++;
    combos.clear();
    combos.reserve(block_size_);
    for (int i = 0; i < block_size_; ++i) {
      combos.push_back(current_);
      if (!advance_combination(current_, n_)) {
        exhausted_ = true;
        break;
      }
    }
    return true;
  }

 private:
  int n_;
  int block_size_;
  std::vector<int> current_;
  long long next_block_ = 0;
  bool exhausted_ = false;
  std::mutex mu_;
};

}  // namespace

SolveResult solve_exact_periodic(const Instance& instance, const Budget& budget) {
  const int n = instance.node_count();
  const int m = instance.attractor_count();
  const int M = pair_count(m);
  const int req = instance.required_distance();

  // one full-observation pass rules out hopeless instances before the
  // exponential enumeration starts
  const std::vector<int> full = full_distances(instance);
  if (*std::min_element(full.begin(), full.end()) < req) {
    return SolveResult{SolveStatus::kInfeasible, {}};
  }

  const auto deadline = deadline_of(budget);
  const PairDistanceMatrix d = build_pair_distance_matrix(
      instance, std::max(1, budget.threads));

  std::vector<PairIndex> poas;
  poas.reserve(M);
  for (int flat = 1; flat <= M; ++flat) poas.push_back(pair_from_flat(flat, m));

  // per-POA indicator tables, needed only for single-node subsets (K = 0)
  std::vector<ShiftDiffTable> tables;
  auto single_node_feasible = [&](int node) {
    if (tables.empty()) {
      tables.reserve(M);
      for (const PairIndex& poa : poas) {
        tables.push_back(build_shift_table(instance.attractor(poa.first),
                                           instance.attractor(poa.second)));
      }
    }
    Bitset mask(n);
    mask.set(node - 1);
    for (const ShiftDiffTable& table : tables) {
      if (table.dist(mask) < req) return false;
    }
    return true;
  };

  auto subset_feasible = [&](std::span<const int> subset) {
    if (subset.size() == 1) return single_node_feasible(subset[0]);
    for (const PairIndex& poa : poas) {
      if (clique_dist(d, poa, subset) < req) return false;  // early break
    }
    return true;
  };

  const int start = std::max(1, req);
  const int size_cap = budget.max_subset_size > 0 ? std::min(n, budget.max_subset_size) : n;
  if (start > size_cap) {
    return SolveResult{SolveStatus::kBudgetExceeded, {}};
  }

  for (int k = start; k <= size_cap; ++k) {
    std::optional<std::vector<int>> found;

    if (budget.threads <= 1) {
      std::vector<int> comb(k);
      std::iota(comb.begin(), comb.end(), 1);
      long long tested = 0;
      do {
        if (deadline && (++tested & 255) == 0 && Clock::now() > *deadline) {
          return SolveResult{SolveStatus::kBudgetExceeded, {}};
        }
        if (subset_feasible(comb)) {
          found = comb;
          break;
        }
      } while (advance_combination(comb, n));
    } else {
      CombinationDispenser dispenser(n, k, 1024);
      std::mutex best_mu;
      long long best_block = -1;
      long long best_offset = 0;
      std::vector<int> best_subset;
      std::atomic<bool> out_of_time{false};

      auto worker = [&] {
        long long block_no = 0;
        std::vector<std::vector<int>> combos;
        while (!out_of_time.load(std::memory_order_relaxed)) {
          {
            std::scoped_lock lock(best_mu);
            if (!dispenser.claim(best_block, block_no, combos)) break;
          }
          for (std::size_t i = 0; i < combos.size(); ++i) {
            if (deadline && (i & 255) == 0 && Clock::now() > *deadline) {
              out_of_time.store(true, std::memory_order_relaxed);
              return;
            }
            if (subset_feasible(combos[i])) {
              std::scoped_lock lock(best_mu);
              if (best_block < 0 || block_no < best_block ||
                  (block_no == best_block && static_cast<long long>(i) < best_offset)) {
                best_block = block_no;
                best_offset = static_cast<long long>(i);
                best_subset = combos[i];
              }
              break;  // later subsets in this block cannot precede this one
            }
          }
        }
      };

      std::vector<std::thread> pool;
      const int workers = std::max(2, budget.threads);
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
      for (auto& t : pool) t.join();

      if (out_of_time.load()) {
        return SolveResult{SolveStatus::kBudgetExceeded, {}};
      }
      if (best_block >= 0) found = best_subset;
    }

    if (found) {
      return SolveResult{SolveStatus::kSolved,
                         evaluate_nodes(instance, *found, Method::kExactPeriodic)};
    }
  }
  // the full node set passed the precheck, so an uncapped search cannot get
  // here; a user-set size cap can
  return SolveResult{SolveStatus::kBudgetExceeded, {}};
}

SolveResult solve_greedy_periodic(const Instance& instance, const Budget& budget,
                                  GreedyPeriodicTrace* trace) {
  const int n = instance.node_count();
  const int m = instance.attractor_count();
  const int M = pair_count(m);
  const int P = pair_count(n);
  const int req = instance.required_distance();

  const std::vector<int> full = full_distances(instance);
  if (*std::min_element(full.begin(), full.end()) < req) {
    return SolveResult{SolveStatus::kInfeasible, {}};
  }
  if (trace) *trace = {};

  const PairDistanceMatrix d = build_pair_distance_matrix(
      instance, std::max(1, budget.threads));

  // flat pair index -> members, precomputed once
  std::vector<int> pair_first(P + 1), pair_second(P + 1);
  {
    int flat = 1;
    for (int j1 = 1; j1 <= n; ++j1) {
      for (int j2 = j1 + 1; j2 <= n; ++j2, ++flat) {
        pair_first[flat] = j1;
        pair_second[flat] = j2;
      }
    }
  }

  std::vector<int> lower_bounds(M, 0);          // the r vector
  std::vector<char> covered(M, 0);
  int uncovered = M;
  std::vector<char> pair_alive(P + 1, 1);
  int candidates = P;
  std::vector<char> node_used(n + 1, 0);
  std::vector<int> chosen_nodes;

  while (uncovered > 0 && candidates > 0) {
    int best_flat = -1;
    int best_gain = -1;
    for (int flat = 1; flat <= P; ++flat) {
      if (!pair_alive[flat]) continue;
      int gain = 0;
      for (int l = 1; l <= M; ++l) {
        if (!covered[l - 1] && d.at(l, flat) != 0) ++gain;
      }
      if (gain > best_gain) {  // ties resolve to the smallest flat index
        best_gain = gain;
        best_flat = flat;
      }
    }

    const PairIndex chosen = pair_from_flat(best_flat, n);
    chosen_nodes.push_back(chosen.first);
    chosen_nodes.push_back(chosen.second);
    node_used[chosen.first] = node_used[chosen.second] = 1;
    for (int flat = 1; flat <= P; ++flat) {
      if (pair_alive[flat] && (node_used[pair_first[flat]] || node_used[pair_second[flat]])) {
        pair_alive[flat] = 0;
        --candidates;
      }
    }
    for (int l = 1; l <= M; ++l) {
      if (covered[l - 1]) continue;
      const int entry = d.at(l, best_flat);
      if (entry != 0) {
        lower_bounds[l - 1] += entry;
        if (lower_bounds[l - 1] >= req) {
          covered[l - 1] = 1;
          --uncovered;
        }
      }
    }
    if (trace) {
      trace->steps.push_back(
          GreedyPeriodicStep{chosen, best_gain, lower_bounds, uncovered, candidates});
    }
  }

  bool fell_back = false;
  if (uncovered > 0) {  // candidate pool exhausted: fall back to all nodes
    fell_back = true;
    chosen_nodes.resize(n);
    std::iota(chosen_nodes.begin(), chosen_nodes.end(), 1);
  }
  if (trace) trace->fell_back_to_all_nodes = fell_back;

  return SolveResult{SolveStatus::kSolved,
                     evaluate_nodes(instance, chosen_nodes, Method::kGreedyPeriodic)};
}

int greedy_hypothesis_violations(const Instance& instance, const GreedyPeriodicTrace& trace,
                                 const std::vector<int>& optimal_nodes) {
  const int m = instance.attractor_count();
  const int req = instance.required_distance();
  int violations = 0;
  std::vector<int> prefix;  // discriminator before the j-th iteration
  for (const GreedyPeriodicStep& step : trace.steps) {
    std::vector<int> remaining;
    for (int node : optimal_nodes) {
      if (std::find(prefix.begin(), prefix.end(), node) == prefix.end()) {
        remaining.push_back(node);
      }
    }
    for (int i1 = 1; i1 <= m; ++i1) {
      for (int i2 = i1 + 1; i2 <= m; ++i2) {
        const Attractor& a = instance.attractor(i1);
        const Attractor& b = instance.attractor(i2);
        const int secured = prefix.empty() ? 0 : dist(a, b, prefix);
        const int available = remaining.empty() ? 0 : dist(a, b, remaining);
        if (secured + available < req) ++violations;
      }
    }
    prefix.push_back(step.chosen.first);
    prefix.push_back(step.chosen.second);
  }
  return violations;
}

}  // namespace attdisc
