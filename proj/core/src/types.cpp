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

#include "attdisc/types.hpp"

#include <numeric>
#include <string>

namespace attdisc {

const char* method_name(Method m) {
  switch (m) {
    case Method::kExactPeriodic:
      return "exact-periodic";
    case Method::kGreedyPeriodic:
      return "greedy-periodic";
    case Method::kExactSingleton:
      return "exact-singleton";
    case Method::kGreedySingleton:
      return "greedy-singleton";
    case Method::kBruteForce:
      return "brute-force";
  }
  return "unknown";
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved:
      return "solved";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

int pair_count(int size) { return size * (size - 1) / 2; }

PairIndex triangular_index(int i1, int i2, int size) {
  if (i1 < 1 || i1 >= i2 || i2 > size) {
    throw std::invalid_argument("triangular_index: need 1 <= i1 < i2 <= size, got (" +
                                std::to_string(i1) + ", " + std::to_string(i2) +
                                ", " + std::to_string(size) + ")");
  }
  int flat = (i1 - 1) * size - i1 * (i1 - 1) / 2 + i2 - i1;
  return PairIndex{i1, i2, size, flat};
}

PairIndex pair_from_flat(int flat, int size) {
  if (flat < 1 || flat > pair_count(size)) {
    throw std::invalid_argument("pair_from_flat: flat index " + std::to_string(flat) +
                                " out of range for size " + std::to_string(size));
  }
  // rows of the triangle shrink by one as i1 grows
  int i1 = 1;
  int remaining = flat;
  while (remaining > size - i1) {
    remaining -= size - i1;
    ++i1;
  }
  return PairIndex{i1, i1 + remaining, size, flat};
}

Attractor::Attractor(int id, std::vector<std::vector<uint8_t>> states)
    : id_(id), states_(std::move(states)) {
  if (states_.empty()) {
    throw Error("attractor " + std::to_string(id_) + ": empty state list");
  }
  const std::size_t n = states_[0].size();
  if (n == 0) {
    throw Error("attractor " + std::to_string(id_) + ": zero nodes");
  }
  for (std::size_t t = 0; t < states_.size(); ++t) {
    if (states_[t].size() != n) {
      throw Error("attractor " + std::to_string(id_) + ": state " +
                  std::to_string(t + 1) + " has " + std::to_string(states_[t].size()) +
                  " entries, expected " + std::to_string(n));
    }
    for (uint8_t v : states_[t]) {
      if (v > 1) {
        throw Error("attractor " + std::to_string(id_) + ": non-binary entry in state " +
                    std::to_string(t + 1));
      }
    }
    for (std::size_t u = 0; u < t; ++u) {
      if (states_[u] == states_[t]) {
        throw Error("attractor " + std::to_string(id_) + ": states " +
                    std::to_string(u + 1) + " and " + std::to_string(t + 1) +
                    " are identical (a cycle never repeats a state within its period)");
      }
    }
  }
  series_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Bitset col(static_cast<int>(states_.size()));
    for (std::size_t t = 0; t < states_.size(); ++t) {
      if (states_[t][j]) col.set(static_cast<int>(t));
    }
    series_.push_back(std::move(col));
  }
}

bool Attractor::cyclic_equal(const Attractor& other) const {
  // distinct in-cycle states make the period minimal, so sequences of unequal
  // period can never coincide
  if (period() != other.period() || node_count() != other.node_count()) {
    return false;
  }
  const int p = period();
  for (int shift = 0; shift < p; ++shift) {
    bool equal = true;
    for (int t = 0; t < p && equal; ++t) {
      equal = states_[t] == other.states_[(t + shift) % p];
    }
    if (equal) return true;
  }
  return false;
}

Instance::Instance(std::vector<Attractor> attractors, int noise_bound, int lcm_cap)
    : attractors_(std::move(attractors)), noise_bound_(noise_bound), max_pair_lcm_(1) {
  if (attractors_.size() < 2) {
    throw Error("m < 2: nothing to discriminate");
  }
  if (noise_bound_ < 0) {
    throw Error("noise bound K must be non-negative");
  }
  const int n = attractors_[0].node_count();
  for (const Attractor& a : attractors_) {
    if (a.node_count() != n) {
      throw Error("attractor " + std::to_string(a.id()) + " has " +
                  std::to_string(a.node_count()) + " nodes, expected " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < attractors_.size(); ++i) {
    for (std::size_t j = i + 1; j < attractors_.size(); ++j) {
      const long long l =
          std::lcm<long long>(attractors_[i].period(), attractors_[j].period());
      if (lcm_cap > 0 && l > lcm_cap) {
        throw Error("period LCM of attractors " + std::to_string(attractors_[i].id()) +
                    " and " + std::to_string(attractors_[j].id()) + " is " +
                    std::to_string(l) + ", exceeding the cap of " + std::to_string(lcm_cap));
      }
      max_pair_lcm_ = std::max<int>(max_pair_lcm_, static_cast<int>(l));
      if (attractors_[i].cyclic_equal(attractors_[j])) {
        throw Error("attractors " + std::to_string(attractors_[i].id()) + " and " +
                    std::to_string(attractors_[j].id()) +
                    " are identical as cyclic sequences; no discriminator exists");
      }
    }
  }
}

int Instance::pair_count() const { return attdisc::pair_count(attractor_count()); }

bool Instance::all_singleton() const {
  for (const Attractor& a : attractors_) {
    if (a.period() != 1) return false;
  }
  return true;
}

}  // namespace attdisc
