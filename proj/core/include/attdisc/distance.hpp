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
#include <iosfwd>
#include <span>
#include <vector>

#include "attdisc/types.hpp"

namespace attdisc {

/**
 * True when the infinite per-node sequences of `a` (from time 0) and `b`
 * (from time `offset`) differ on `node`. Two eventually-periodic sequences
 * with joint period LCM(p(a), p(b)) are equal iff they agree on one LCM
 * window, so only positions 0..LCM-1 are compared.
 */
bool node_sequence_differs(const Attractor& a, const Attractor& b, int node, int offset);

/**
 * Distance between two attractors when observing `subset` (1-based node
 * ids): the minimum over all time shifts of the number of observed nodes
 * whose sequences differ. This is the reference implementation, computed
 * straight from the definition; solvers use precomputed tables instead.
 * Throws std::invalid_argument on an empty subset.
 */
int dist(const Attractor& a, const Attractor& b, std::span<const int> subset);

/**
 * Per-pair-of-attractors indicator table: which nodes differ at which time
 * shift. Kept in both orientations so that subset distances are masked
 * popcounts per shift and two-node distances are word scans per node pair.
 */
struct ShiftDiffTable {
  int lcm = 1;
  int node_count = 0;
  std::vector<Bitset> by_shift;  // lcm masks of node_count bits (bit = node-1)
  std::vector<Bitset> by_node;   // node_count masks of lcm bits (bit = shift)

  /// min over shifts of |differing nodes within mask| (mask bit j = node j+1).
  int dist(const Bitset& node_mask) const;

  /// Distance when observing exactly {node1, node2}; always in {0, 1, 2}.
  int pair_dist(int node1, int node2) const;
};

ShiftDiffTable build_shift_table(const Attractor& a, const Attractor& b);

/**
 * M x P distance matrix: rows are pairs of attractors (POAs), columns are
 * node pairs, entry = distance of the POA when observing the two nodes.
 * Entries are bounded by 2.
 */
class PairDistanceMatrix {
 public:
  PairDistanceMatrix(int attractor_count, int node_count, std::vector<uint8_t> values);

  int attractor_count() const { return m_; }
  int node_count() const { return n_; }
  int rows() const { return pair_count(m_); }
  int cols() const { return pair_count(n_); }

  /// Entry by 1-based flat indices.
  uint8_t at(int poa_flat, int node_pair_flat) const {
    return values_[static_cast<std::size_t>(poa_flat - 1) * cols() + node_pair_flat - 1];
  }

  const std::vector<uint8_t>& values() const { return values_; }

 private:
  int m_;
  int n_;
  std::vector<uint8_t> values_;
};

/// Fills all M*P entries; rows are independent and computed in parallel when
/// threads > 1.
PairDistanceMatrix build_pair_distance_matrix(const Instance& instance, int threads = 1);

/**
 * M x n binary difference matrix for singleton attractors: entry (poa, j) is
 * 1 iff the two attractors of the POA disagree on node j. Row sums equal the
 * pairwise Hamming distances.
 */
class DiffMatrix {
 public:
  DiffMatrix(int attractor_count, int node_count, std::vector<Bitset> rows);

  int attractor_count() const { return m_; }
  int node_count() const { return n_; }
  int rows() const { return pair_count(m_); }

  bool at(int poa_flat, int node) const { return rows_[poa_flat - 1].test(node - 1); }
  const Bitset& row(int poa_flat) const { return rows_[poa_flat - 1]; }
  int row_sum(int poa_flat) const { return rows_[poa_flat - 1].count(); }

 private:
  int m_;
  int n_;
  std::vector<Bitset> rows_;
};

/// Throws Error when any attractor has period > 1.
DiffMatrix build_diff_matrix(const Instance& instance);

/// CSV dumps with one header row naming node pairs / nodes (debug surface).
void write_pair_distance_csv(const PairDistanceMatrix& d, std::ostream& out);
void write_diff_csv(const DiffMatrix& c, std::ostream& out);

/// Definition-based distance of every POA when observing `nodes`; this is
/// the verification path shared by all solvers and by the verify command.
Discriminator evaluate_nodes(const Instance& instance, std::vector<int> nodes, Method method);

/// Distance of every POA when observing all nodes, by ascending flat index.
std::vector<int> full_distances(const Instance& instance);

}  // namespace attdisc
