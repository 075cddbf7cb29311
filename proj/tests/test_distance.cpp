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

#include <numeric>
#include <sstream>

#include "attdisc/bench.hpp"
#include "attdisc/distance.hpp"
#include "attdisc/io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace attdisc;

namespace {

Instance example1() { return parse_instance(fixtures::kExample1, 1); }
Instance example3() { return parse_instance(fixtures::kExample3, 1); }

}  // namespace

TEST_CASE("node sequences: worked cases") {
  const Instance instance = example1();
  const Attractor& att2 = instance.attractor(2);
  const Attractor& att3 = instance.attractor(3);
  // Att_2 and Att_3 look the same through v_1 (both constantly 1)
  CHECK_FALSE(node_sequence_differs(att2, att3, 1, 0));
  CHECK(node_sequence_differs(att2, att3, 2, 0));
  // identical attractors never differ
  CHECK_FALSE(node_sequence_differs(att2, att2, 3, 0));
  CHECK_THROWS_AS(node_sequence_differs(att2, att3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(node_sequence_differs(att2, att3, 1, -1), std::invalid_argument);
}

TEST_CASE("pairs with v4: minimum-shift indicator sums reproduce the matrix row") {
  const Instance instance = example1();
  const Attractor& a = instance.attractor(1);
  const Attractor& b = instance.attractor(2);
  const int window = 2;  // LCM(2, 1)
  // brute force over both shifts for each pair (v_j, v_4)
  for (int j : {1, 2, 3}) {
    int best = 2;
    for (int t = 0; t < window; ++t) {
      const int sum = (node_sequence_differs(a, b, j, t) ? 1 : 0) +
                      (node_sequence_differs(a, b, 4, t) ? 1 : 0);
      best = std::min(best, sum);
    }
    CHECK(best == 1);  // printed row (Att_1, Att_2): columns with v_4 are all 1
  }
}

TEST_CASE("dist: worked cases") {
  const Instance instance = example1();
  const std::vector<int> case1{1, 2, 4};
  CHECK(dist(instance.attractor(2), instance.attractor(3), case1) == 1);
  const std::vector<int> case2{1, 2, 3};
  CHECK(dist(instance.attractor(1), instance.attractor(2), case2) == 3);
  CHECK(dist(instance.attractor(2), instance.attractor(2), case2) == 0);
  CHECK_THROWS_AS(dist(instance.attractor(1), instance.attractor(2), std::vector<int>{}),
                  std::invalid_argument);
}

TEST_CASE("dist: the pair-addition counterexample instance") {
  const Instance instance = parse_instance(fixtures::kProp1, 0);
  const Attractor& a = instance.attractor(1);
  const Attractor& b = instance.attractor(2);
  CHECK(dist(a, b, std::vector<int>{1, 2, 3}) == 1);
  CHECK(dist(a, b, std::vector<int>{1, 2, 3, 4}) == 1);
  CHECK(dist(a, b, std::vector<int>{1, 2, 3, 5}) == 1);
}

TEST_CASE("pair distance matrix reproduces the printed block") {
  const Instance instance = example1();
  const PairDistanceMatrix d = build_pair_distance_matrix(instance);
  REQUIRE(d.rows() == 3);
  REQUIRE(d.cols() == 10);
  // printed columns: pairs among v_1..v_4
  const std::vector<int> printed_cols = {
      triangular_index(1, 2, 5).flat, triangular_index(1, 3, 5).flat,
      triangular_index(1, 4, 5).flat, triangular_index(2, 3, 5).flat,
      triangular_index(2, 4, 5).flat, triangular_index(3, 4, 5).flat};
  const int expected[3][6] = {{2, 2, 1, 2, 1, 1}, {2, 2, 1, 2, 1, 1}, {1, 1, 0, 2, 1, 1}};
  for (int row = 1; row <= 3; ++row) {
    for (int c = 0; c < 6; ++c) {
      CHECK(d.at(row, printed_cols[c]) == expected[row - 1][c]);
    }
  }
  CHECK(d.at(triangular_index(2, 3, 3).flat, triangular_index(1, 4, 5).flat) == 0);
}

TEST_CASE("two singleton attractors differing everywhere give an all-2 row") {
  const Instance instance = parse_instance("2 4\n1\n0000\n1\n1111\n", 0);
  const PairDistanceMatrix d = build_pair_distance_matrix(instance);
  for (int c = 1; c <= d.cols(); ++c) CHECK(d.at(1, c) == 2);
}

TEST_CASE("difference matrix reproduces the printed C_att") {
  const Instance instance = example3();
  const DiffMatrix c = build_diff_matrix(instance);
  const int expected[3][8] = {{0, 1, 1, 0, 1, 0, 0, 0},
                              {0, 0, 0, 0, 1, 1, 1, 1},
                              {0, 1, 1, 0, 0, 1, 1, 1}};
  for (int row = 1; row <= 3; ++row) {
    for (int j = 1; j <= 8; ++j) {
      CHECK(static_cast<int>(c.at(row, j)) == expected[row - 1][j - 1]);
    }
  }
}

TEST_CASE("difference matrix row sums are Hamming distances") {
  ExperimentConfig config;
  config.n = 12;
  config.m = 5;
  config.max_period = 1;
  config.seed = 77;
  const Instance instance = generate_instance(config, 0);
  const DiffMatrix c = build_diff_matrix(instance);
  int flat = 0;
  for (int i1 = 1; i1 <= 5; ++i1) {
    for (int i2 = i1 + 1; i2 <= 5; ++i2) {
      ++flat;
      int hamming = 0;
      for (int j = 1; j <= 12; ++j) {
        hamming += instance.attractor(i1).state(0, j) != instance.attractor(i2).state(0, j);
      }
      CHECK(c.row_sum(flat) == hamming);
    }
  }
}

TEST_CASE("difference matrix refuses periodic instances") {
  const Instance instance = example1();
  CHECK_THROWS_WITH_AS(build_diff_matrix(instance),
                       doctest::Contains("singleton method on periodic instance"), Error);
}

TEST_CASE("distance properties on random small instances") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    ExperimentConfig config;
    config.n = 3 + static_cast<int>(seed % 6);  // up to 8
    config.m = 2 + static_cast<int>(seed % 3);  // up to 4
    config.max_period = 1 + static_cast<int>(seed % 4);
    config.seed = 1000 + seed;
    const Instance instance = generate_instance(config, 0);
    const int n = instance.node_count();
    const PairDistanceMatrix d = build_pair_distance_matrix(instance);

    for (int i1 = 1; i1 <= instance.attractor_count(); ++i1) {
      for (int i2 = i1 + 1; i2 <= instance.attractor_count(); ++i2) {
        const Attractor& a = instance.attractor(i1);
        const Attractor& b = instance.attractor(i2);
        const ShiftDiffTable table = build_shift_table(a, b);

        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 1);
        for (int mask = 1; mask < (1 << n); ++mask) {
          std::vector<int> subset;
          Bitset bits(n);
          for (int j = 0; j < n; ++j) {
            if (mask & (1 << j)) {
              subset.push_back(j + 1);
              bits.set(j);
            }
          }
          const int reference = dist(a, b, subset);
          // symmetry over attractor order
          CHECK(dist(b, a, subset) == reference);
          // the bit-table route agrees with the definition
          CHECK(table.dist(bits) == reference);
          // monotone under adding any node
          for (int extra = 1; extra <= n; ++extra) {
            if (bits.test(extra - 1)) continue;
            std::vector<int> bigger = subset;
            bigger.push_back(extra);
            CHECK(dist(a, b, bigger) >= reference);
          }
          // superadditivity when a disjoint pair joins the subset
          for (int j1 = 1; j1 <= n; ++j1) {
            for (int j2 = j1 + 1; j2 <= n; ++j2) {
              if (bits.test(j1 - 1) || bits.test(j2 - 1)) continue;
              std::vector<int> bigger = subset;
              bigger.push_back(j1);
              bigger.push_back(j2);
              const int entry = d.at(triangular_index(i1, i2, instance.attractor_count()).flat,
                                     triangular_index(j1, j2, n).flat);
              CHECK(dist(a, b, bigger) >= reference + entry);
            }
          }
        }
        // degeneration to Hamming distance for singleton pairs
        if (a.period() == 1 && b.period() == 1) {
          for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> subset;
            int hamming = 0;
            for (int j = 0; j < n; ++j) {
              if (mask & (1 << j)) {
                subset.push_back(j + 1);
                hamming += a.state(0, j + 1) != b.state(0, j + 1);
              }
            }
            CHECK(dist(a, b, subset) == hamming);
          }
        }
      }
    }
  }
}

TEST_CASE("matrix entries are symmetric in attractor order") {
  ExperimentConfig config;
  config.n = 6;
  config.m = 3;
  config.max_period = 3;
  config.seed = 5;
  const Instance instance = generate_instance(config, 0);
  std::vector<Attractor> swapped;
  swapped.emplace_back(1, instance.attractor(2).states());
  swapped.emplace_back(2, instance.attractor(1).states());
  swapped.emplace_back(3, instance.attractor(3).states());
  const Instance mirrored(std::move(swapped), instance.noise_bound());
  const PairDistanceMatrix d1 = build_pair_distance_matrix(instance);
  const PairDistanceMatrix d2 = build_pair_distance_matrix(mirrored);
  // the (Att_1, Att_2) row is unchanged by swapping the two attractors
  for (int c = 1; c <= d1.cols(); ++c) {
    CHECK(d1.at(1, c) == d2.at(1, c));
  }
}

TEST_CASE("parallel matrix construction matches the serial result") {
  ExperimentConfig config;
  config.n = 10;
  config.m = 5;
  config.max_period = 4;
  config.seed = 11;
  const Instance instance = generate_instance(config, 0);
  const PairDistanceMatrix serial = build_pair_distance_matrix(instance, 1);
  const PairDistanceMatrix parallel = build_pair_distance_matrix(instance, 4);
  CHECK(serial.values() == parallel.values());
}

TEST_CASE("csv dumps carry labeled headers") {
  const Instance instance = example3();
  std::ostringstream d_csv;
  write_pair_distance_csv(build_pair_distance_matrix(instance), d_csv);
  CHECK(d_csv.str().substr(0, 14) == "poa,v1-v2,v1-v");
  std::ostringstream c_csv;
  write_diff_csv(build_diff_matrix(instance), c_csv);
  CHECK(c_csv.str().substr(0, 9) == "poa,v1,v2");
  CHECK(c_csv.str().find("Att2-Att3,0,1,1,0,0,1,1,1") != std::string::npos);
}

TEST_CASE("evaluate_nodes recomputes distances and rejects bad nodes") {
  const Instance instance = example1();
  const Discriminator disc = evaluate_nodes(instance, {1, 2, 3, 5}, Method::kBruteForce);
  CHECK(disc.feasible);
  for (int value : disc.per_pair_distance) {
    CHECK(value >= 3);
    CHECK(value <= 4);
  }
  CHECK_THROWS_AS(evaluate_nodes(instance, {0}, Method::kBruteForce), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_nodes(instance, {6}, Method::kBruteForce), std::invalid_argument);
}
