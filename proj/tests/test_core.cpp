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

#include "attdisc/bench.hpp"
#include "attdisc/io.hpp"
#include "attdisc/types.hpp"
#include "fixtures.hpp"

using namespace attdisc;

TEST_CASE("triangular index follows the row-major pair order") {
  CHECK(triangular_index(1, 2, 3).flat == 1);  // x_1 is (Att_1, Att_2)
  CHECK(triangular_index(2, 3, 3).flat == 3);  // last pair of 3
  // enumerate all C(3,2) pairs in row-major order and match position
  int expected = 0;
  for (int i1 = 1; i1 <= 3; ++i1) {
    for (int i2 = i1 + 1; i2 <= 3; ++i2) {
      ++expected;
      if (i1 == 1 && i2 == 3) CHECK(triangular_index(1, 3, 3).flat == expected);
    }
  }
  CHECK(triangular_index(1, 3, 3).flat == 2);
}

TEST_CASE("triangular index rejects bad arguments") {
  CHECK_THROWS_AS(triangular_index(2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(triangular_index(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(triangular_index(1, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_flat(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_flat(4, 3), std::invalid_argument);
}

TEST_CASE("flat <-> pair round trip is the identity, exhaustively") {
  for (int size = 2; size <= 100; ++size) {
    int flat = 0;
    for (int i1 = 1; i1 <= size; ++i1) {
      for (int i2 = i1 + 1; i2 <= size; ++i2) {
        ++flat;
        const PairIndex forward = triangular_index(i1, i2, size);
        REQUIRE(forward.flat == flat);
        const PairIndex back = pair_from_flat(flat, size);
        REQUIRE(back.first == i1);
        REQUIRE(back.second == i2);
      }
    }
    REQUIRE(flat == pair_count(size));
  }
}

TEST_CASE("parsing the worked periodic instance") {
  const Instance instance = parse_instance(fixtures::kExample1, 1);
  CHECK(instance.attractor_count() == 3);
  CHECK(instance.node_count() == 5);
  CHECK(instance.attractor(1).period() == 2);
  CHECK(instance.attractor(2).period() == 1);
  CHECK(instance.attractor(3).period() == 1);
  CHECK(instance.attractor(1).state(0, 5) == 1);
  CHECK(instance.attractor(1).state(1, 1) == 1);
  CHECK(instance.required_distance() == 3);
  CHECK(instance.required_distance() % 2 == 1);
}

TEST_CASE("parser diagnostics") {
  SUBCASE("single attractor") {
    CHECK_THROWS_WITH_AS(parse_instance("1 4\n1\n0110\n"),
                         doctest::Contains("m < 2"), ParseError);
  }
  SUBCASE("non-binary symbol") {
    CHECK_THROWS_WITH_AS(parse_instance("2 5\n1\n0010a\n1\n11111\n"),
                         doctest::Contains("non-binary"), ParseError);
  }
  SUBCASE("ragged row spills into the next token") {
    // a short row consumes the next attractor's period line as row bits
    CHECK_THROWS_AS(parse_instance("2 5\n1\n0010\n1\n11111\n"), ParseError);
  }
  SUBCASE("duplicate state within one attractor") {
    CHECK_THROWS_WITH_AS(parse_instance("2 3\n2\n010\n010\n1\n111\n"),
                         doctest::Contains("identical"), ParseError);
  }
  SUBCASE("duplicate attractors, rotated") {
    // second attractor is the first one shifted by one step
    CHECK_THROWS_WITH_AS(parse_instance("2 3\n2\n010\n101\n2\n101\n010\n"),
                         doctest::Contains("cyclic"), Error);
  }
  SUBCASE("trailing garbage") {
    CHECK_THROWS_WITH_AS(parse_instance("2 3\n1\n010\n1\n101\n111\n"),
                         doctest::Contains("trailing"), ParseError);
  }
  SUBCASE("comments and spacing are tolerated") {
    const Instance instance =
        parse_instance("# header\n 2 3 # m n\n1\n0 1 0\n1 # singleton\n101\n");
    CHECK(instance.attractor_count() == 2);
    CHECK(instance.attractor(1).state(0, 2) == 1);
  }
}

TEST_CASE("instance rejects mismatched node counts") {
  std::vector<Attractor> attractors;
  attractors.emplace_back(1, std::vector<std::vector<uint8_t>>{{0, 1}});
  attractors.emplace_back(2, std::vector<std::vector<uint8_t>>{{1, 0, 1}});
  CHECK_THROWS_AS(Instance(std::move(attractors), 0), Error);
}

TEST_CASE("period LCM cap") {
  // two attractors with coprime periods 64 and 65: LCM 4160 > 4096
  auto counting_states = [](int period, int id) {
    std::vector<std::vector<uint8_t>> states;
    for (int t = 0; t < period; ++t) {
      std::vector<uint8_t> row(13, 0);
      for (int b = 0; b < 13; ++b) row[b] = ((t + id) >> b) & 1;
      states.push_back(row);
    }
    return states;
  };
  std::vector<Attractor> attractors;
  attractors.emplace_back(1, counting_states(64, 0));
  attractors.emplace_back(2, counting_states(65, 100));
  CHECK_THROWS_WITH_AS(Instance(std::move(attractors), 0), doctest::Contains("LCM"), Error);

  std::vector<Attractor> relaxed;
  relaxed.emplace_back(1, counting_states(64, 0));
  relaxed.emplace_back(2, counting_states(65, 100));
  CHECK_NOTHROW(Instance(std::move(relaxed), 0, 8192));
}

TEST_CASE("serialize/parse round trip on random instances") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    ExperimentConfig config;
    config.n = 3 + static_cast<int>(seed % 9);
    config.m = 2 + static_cast<int>(seed % 3);
    config.max_period = 1 + static_cast<int>(seed % 4);
    config.seed = seed;
    const Instance original = generate_instance(config, 0);
    const Instance reparsed = parse_instance(serialize_instance(original), original.noise_bound());
    CHECK(original == reparsed);
  }
}

TEST_CASE("attractor state validation") {
  CHECK_THROWS_AS(Attractor(1, {}), Error);
  CHECK_THROWS_AS(Attractor(1, {{0, 1}, {0}}), Error);
  CHECK_THROWS_AS(Attractor(1, {{0, 2}}), Error);
  const Attractor a(7, {{0, 1, 1}, {1, 0, 0}});
  CHECK(a.period() == 2);
  CHECK(a.node_count() == 3);
  CHECK(a.node_series(2).test(0));
  CHECK_FALSE(a.node_series(2).test(1));
}
