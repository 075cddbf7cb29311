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

#include "attdisc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <numeric>
#include <ostream>
#include <thread>

namespace attdisc {

bool node_sequence_differs(const Attractor& a, const Attractor& b, int node, int offset) {
  const int pa = a.period();
  const int pb = b.period();
  const int window = static_cast<int>(std::lcm(pa, pb));
  if (offset < 0 || offset >= window) {
    throw std::invalid_argument("node_sequence_differs: offset " + std::to_string(offset) +
                                " outside [0, " + std::to_string(window) + ")");
  }
  for (int s = 0; s < window; ++s) {
    if (a.state(s % pa, node) != b.state((s + offset) % pb, node)) return true;
  }
  return false;
}

int dist(const Attractor& a, const Attractor& b, std::span<const int> subset) {
  if (subset.empty()) {
    throw std::invalid_argument("dist: empty node subset");
  }
  const int window = static_cast<int>(std::lcm(a.period(), b.period()));
  int best = static_cast<int>(subset.size());
  for (int t = 0; t < window && best > 0; ++t) {
    int differing = 0;
    for (int node : subset) {
      differing += node_sequence_differs(a, b, node, t) ? 1 : 0;
    }
    best = std::min(best, differing);
  }
  return best;
}

int ShiftDiffTable::dist(const Bitset& node_mask) const {
  int best = node_mask.count();
  for (const Bitset& shift_mask : by_shift) {
    best = std::min(best, shift_mask.count_and(node_mask));
    if (best == 0) break;
  }
  return best;
}

int ShiftDiffTable::pair_dist(int node1, int node2) const {
  // min over shifts of d1[t] + d2[t]: 0 if some shift has neither bit set,
  // 2 if every shift has both, 1 otherwise
  const auto& w1 = by_node[node1 - 1].words();
  const auto& w2 = by_node[node2 - 1].words();
  const int tail_bits = lcm & 63;
  bool some_shift_clear = false;
  bool every_shift_both = true;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    const bool last = i + 1 == w1.size();
    const uint64_t valid = (last && tail_bits) ? (~0ull >> (64 - tail_bits)) : ~0ull;
    if (~(w1[i] | w2[i]) & valid) {
      some_shift_clear = true;
      break;
    }
    if ((w1[i] & w2[i] & valid) != valid) every_shift_both = false;
  }
  if (some_shift_clear) return 0;
  if (every_shift_both) return 2;
  return 1;
}

ShiftDiffTable build_shift_table(const Attractor& a, const Attractor& b) {
  const int pa = a.period();
  const int pb = b.period();
  const int window = static_cast<int>(std::lcm(pa, pb));
  const int n = a.node_count();

  ShiftDiffTable table;
  table.lcm = window;
  table.node_count = n;
  table.by_node.assign(n, Bitset(window));
  table.by_shift.assign(window, Bitset(n));

  // byte-expanded node series: ext_a is one window, ext_b two windows so
  // that the comparison at shift t is a single contiguous memcmp
  std::vector<uint8_t> ext_a(window);
  std::vector<uint8_t> ext_b(2 * window);
  for (int j = 1; j <= n; ++j) {
    const Bitset& series_a = a.node_series(j);
    const Bitset& series_b = b.node_series(j);
    for (int s = 0; s < window; ++s) ext_a[s] = series_a.test(s % pa);
    for (int s = 0; s < 2 * window; ++s) ext_b[s] = series_b.test(s % pb);
    for (int t = 0; t < window; ++t) {
      if (std::memcmp(ext_a.data(), ext_b.data() + t, window) != 0) {
        table.by_node[j - 1].set(t);
        table.by_shift[t].set(j - 1);
      }
    }
  }
  return table;
}

PairDistanceMatrix::PairDistanceMatrix(int attractor_count, int node_count,
                                       std::vector<uint8_t> values)
    : m_(attractor_count), n_(node_count), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(rows()) * cols()) {
    throw Error("PairDistanceMatrix: value buffer does not match M x P");
  }
}

PairDistanceMatrix build_pair_distance_matrix(const Instance& instance, int threads) {
  const int m = instance.attractor_count();
  const int n = instance.node_count();
  const int rows = pair_count(m);
  const std::size_t cols = static_cast<std::size_t>(pair_count(n));
  std::vector<uint8_t> values(rows * cols, 0);

  auto fill_row = [&](int flat) {
    const PairIndex poa = pair_from_flat(flat, m);
    const ShiftDiffTable table =
        build_shift_table(instance.attractor(poa.first), instance.attractor(poa.second));
    uint8_t* row = values.data() + static_cast<std::size_t>(flat - 1) * cols;
    std::size_t c = 0;
    for (int j1 = 1; j1 <= n; ++j1) {
      for (int j2 = j1 + 1; j2 <= n; ++j2) {
        row[c++] = static_cast<uint8_t>(table.pair_dist(j1, j2));
      }
    }
  };

  if (threads <= 1 || rows <= 1) {
    for (int flat = 1; flat <= rows; ++flat) fill_row(flat);
  } else {
    const int workers = std::min(threads, rows);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<int> next{1};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int flat = next.fetch_add(1); flat <= rows; flat = next.fetch_add(1)) {
          fill_row(flat);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return PairDistanceMatrix(m, n, std::move(values));
}

DiffMatrix::DiffMatrix(int attractor_count, int node_count, std::vector<Bitset> rows)
    : m_(attractor_count), n_(node_count), rows_(std::move(rows)) {
  if (rows_.size() != static_cast<std::size_t>(pair_count(m_))) {
    throw Error("DiffMatrix: row count does not match C(m, 2)");
  }
}

DiffMatrix build_diff_matrix(const Instance& instance) {
  if (!instance.all_singleton()) {
    throw Error("singleton method on periodic instance: C_att is defined for period-1 attractors only");
  }
  const int m = instance.attractor_count();
  const int n = instance.node_count();
  std::vector<Bitset> rows;
  rows.reserve(pair_count(m));
  for (int i1 = 1; i1 <= m; ++i1) {
    for (int i2 = i1 + 1; i2 <= m; ++i2) {
      Bitset row(n);
      const Attractor& a = instance.attractor(i1);
      const Attractor& b = instance.attractor(i2);
      for (int j = 1; j <= n; ++j) {
        if (a.state(0, j) != b.state(0, j)) row.set(j - 1);
      }
      rows.push_back(std::move(row));
    }
  }
  return DiffMatrix(m, n, std::move(rows));
}

void write_pair_distance_csv(const PairDistanceMatrix& d, std::ostream& out) {
  out << "poa";
  const int n = d.node_count();
  for (int j1 = 1; j1 <= n; ++j1) {
    for (int j2 = j1 + 1; j2 <= n; ++j2) {
      out << ",v" << j1 << "-v" << j2;
    }
  }
  out << '\n';
  const int m = d.attractor_count();
  for (int flat = 1; flat <= d.rows(); ++flat) {
    const PairIndex poa = pair_from_flat(flat, m);
    out << "Att" << poa.first << "-Att" << poa.second;
    for (int c = 1; c <= d.cols(); ++c) {
      out << ',' << static_cast<int>(d.at(flat, c));
    }
    out << '\n';
  }
}

void write_diff_csv(const DiffMatrix& c, std::ostream& out) {
  out << "poa";
  for (int j = 1; j <= c.node_count(); ++j) out << ",v" << j;
  out << '\n';
  for (int flat = 1; flat <= c.rows(); ++flat) {
    const PairIndex poa = pair_from_flat(flat, c.attractor_count());
    out << "Att" << poa.first << "-Att" << poa.second;
    for (int j = 1; j <= c.node_count(); ++j) {
      out << ',' << (c.at(flat, j) ? 1 : 0);
    }
    out << '\n';
  }
}

Discriminator evaluate_nodes(const Instance& instance, std::vector<int> nodes, Method method) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int node : nodes) {
    if (node < 1 || node > instance.node_count()) {
      throw std::invalid_argument("node index " + std::to_string(node) + " out of range [1, " +
                                  std::to_string(instance.node_count()) + "]");
    }
  }
  Bitset mask(instance.node_count());
  for (int node : nodes) mask.set(node - 1);

  const int m = instance.attractor_count();
  Discriminator disc;
  disc.nodes = std::move(nodes);
  disc.method = method;
  disc.per_pair_distance.reserve(pair_count(m));
  bool feasible = !disc.nodes.empty();
  for (int i1 = 1; i1 <= m; ++i1) {
    for (int i2 = i1 + 1; i2 <= m; ++i2) {
      const ShiftDiffTable table =
          build_shift_table(instance.attractor(i1), instance.attractor(i2));
      const int d = disc.nodes.empty() ? 0 : table.dist(mask);
      disc.per_pair_distance.push_back(d);
      feasible = feasible && d >= instance.required_distance();
    }
  }
  disc.feasible = feasible;
  return disc;
}

std::vector<int> full_distances(const Instance& instance) {
  const int m = instance.attractor_count();
  std::vector<int> out;
  out.reserve(pair_count(m));
  const Bitset all = Bitset::full(instance.node_count());
  for (int i1 = 1; i1 <= m; ++i1) {
    for (int i2 = i1 + 1; i2 <= m; ++i2) {
      out.push_back(build_shift_table(instance.attractor(i1), instance.attractor(i2)).dist(all));
    }
  }
  return out;
}

}  // namespace attdisc
