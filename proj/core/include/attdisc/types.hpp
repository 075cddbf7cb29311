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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "attdisc/bitset.hpp"

// Convention used throughout the public interface: node ids and attractor ids
// are 1-based (v_1..v_n, Att_1..Att_m), as is standard for this problem
// family. Implementation code converts to 0-based storage offsets locally.

namespace attdisc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the instance file parser; the message names the offending line
/// or attractor.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Method {
  kExactPeriodic,
  kGreedyPeriodic,
  kExactSingleton,
  kGreedySingleton,
  kBruteForce,
};

const char* method_name(Method m);

enum class SolveStatus {
  kSolved,
  kInfeasible,
  kBudgetExceeded,
};

const char* status_name(SolveStatus s);

/**
 * Ordered pair (first < second) over {1..size} together with its row index
 * in the triangular enumeration of all such pairs. Both the pair members and
 * the flat index are 1-based; flat runs over [1, size*(size-1)/2].
 */
struct PairIndex {
  int first = 0;
  int second = 0;
  int size = 0;
  int flat = 0;

  bool operator==(const PairIndex&) const = default;
};

/// Number of unordered pairs over {1..size}.
int pair_count(int size);

/// Flat triangular index of (i1, i2) with 1 <= i1 < i2 <= size.
/// Throws std::invalid_argument when the precondition fails.
PairIndex triangular_index(int i1, int i2, int size);

/// Inverse of triangular_index.
PairIndex pair_from_flat(int flat, int size);

/**
 * One periodic attractor: p states of n binary values each. Singleton
 * attractors have p = 1. States are additionally kept as per-node bit
 * sequences (node-major layout) since every distance computation walks one
 * node's time series.
 *
 * Construction validates that no two states within the attractor are equal;
 * distinct states make p the least period of the cyclic sequence.
 */
class Attractor {
 public:
  Attractor(int id, std::vector<std::vector<uint8_t>> states);

  int id() const { return id_; }
  int period() const { return static_cast<int>(states_.size()); }
  int node_count() const { return static_cast<int>(states_[0].size()); }

  /// Value of `node` (1-based) at time step `step` in [0, period).
  uint8_t state(int step, int node) const { return states_[step][node - 1]; }

  /// The node's time series as period() bits, bit t = value at step t.
  const Bitset& node_series(int node) const { return series_[node - 1]; }

  const std::vector<std::vector<uint8_t>>& states() const { return states_; }

  /// True when the two attractors are equal as cyclic state sequences.
  bool cyclic_equal(const Attractor& other) const;

  bool operator==(const Attractor& other) const {
    return states_ == other.states_;
  }

 private:
  int id_;
  std::vector<std::vector<uint8_t>> states_;
  std::vector<Bitset> series_;
};

/**
 * A discrimination problem: m >= 2 attractors over a shared node set plus the
 * noise bound K. Every pair of attractors must end up at distance >= 2K+1
 * under the chosen discriminator.
 *
 * Construction rejects attractors that are duplicates as cyclic sequences
 * (their distance is 0 under any observation, so no discriminator exists)
 * and instances whose pairwise period LCM exceeds `lcm_cap`.
 */
class Instance {
 public:
  static constexpr int kDefaultLcmCap = 4096;

  Instance(std::vector<Attractor> attractors, int noise_bound,
           int lcm_cap = kDefaultLcmCap);

  int attractor_count() const { return static_cast<int>(attractors_.size()); }
  int node_count() const { return attractors_[0].node_count(); }
  int noise_bound() const { return noise_bound_; }
  int required_distance() const { return 2 * noise_bound_ + 1; }
  int pair_count() const;  // M = C(m, 2)
  bool all_singleton() const;
  int max_pair_lcm() const { return max_pair_lcm_; }

  const Attractor& attractor(int i) const { return attractors_[i - 1]; }
  const std::vector<Attractor>& attractors() const { return attractors_; }

  bool operator==(const Instance& other) const {
    return attractors_ == other.attractors_ &&
           noise_bound_ == other.noise_bound_;
  }

 private:
  std::vector<Attractor> attractors_;
  int noise_bound_;
  int max_pair_lcm_;
};

/**
 * A solver answer: the selected node set plus the achieved per-pair
 * distances. Distances are always recomputed from the distance definition,
 * never taken from solver-internal bookkeeping, and `feasible` reflects that
 * recomputation.
 */
struct Discriminator {
  std::vector<int> nodes;              // sorted, 1-based
  std::vector<int> per_pair_distance;  // indexed by POA flat index - 1
  bool feasible = false;
  Method method = Method::kBruteForce;

  int cardinality() const { return static_cast<int>(nodes.size()); }
};

/// Resource limits for the exponential-time solvers. Zero means "no limit".
struct Budget {
  double max_seconds = 0.0;
  int max_subset_size = 0;
  int threads = 1;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kInfeasible;
  Discriminator discriminator;  // meaningful only when solved

  bool solved() const { return status == SolveStatus::kSolved; }
};

}  // namespace attdisc
