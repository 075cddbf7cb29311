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

#include "attdisc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "attdisc/distance.hpp"
#include "attdisc/periodic.hpp"
#include "attdisc/singleton.hpp"

namespace attdisc {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxRedraws = 1000;

// splitmix64; used to derive independent per-repetition streams
uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d4a4e1f9519171ull;
  return x ^ (x >> 31);
}

struct Rng {
  uint64_t state;
  uint64_t next() {
    state = mix(state);
    return state;
  }
  int bit() { return static_cast<int>(next() & 1); }
  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
};

std::vector<uint8_t> random_row(Rng& rng, int n) {
  std::vector<uint8_t> row(n);
  for (int j = 0; j < n; ++j) row[j] = static_cast<uint8_t>(rng.bit());
  return row;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

const char* pipeline_name(Pipeline p) {
  return p == Pipeline::kSingleton ? "singleton" : "periodic";
}

double greedy_ratio_bound(int pair_count_m, int noise_bound) {
  return std::log(static_cast<double>(pair_count_m) * (2 * noise_bound + 1)) + 1.0;
}

Instance generate_instance(const ExperimentConfig& config, int rep) {
  Rng rng{mix(config.seed ^ mix(static_cast<uint64_t>(rep) + 1))};

  std::vector<Attractor> attractors;
  attractors.reserve(config.m);
  for (int id = 1; id <= config.m; ++id) {
    int redraws = 0;
    while (true) {
      if (++redraws > kMaxRedraws) {
        throw Error("instance generation: redraw cap exceeded (n too small for m distinct attractors?)");
      }
      const int period = config.max_period <= 1 ? 1 : rng.uniform(1, config.max_period);
      std::vector<std::vector<uint8_t>> states;
      states.reserve(period);
      bool states_distinct = true;
      for (int t = 0; t < period && states_distinct; ++t) {
        std::vector<uint8_t> row = random_row(rng, config.n);
        int row_redraws = 0;
        while (std::find(states.begin(), states.end(), row) != states.end()) {
          if (++row_redraws > kMaxRedraws) {
            states_distinct = false;
            break;
          }
          row = random_row(rng, config.n);
        }
        if (states_distinct) states.push_back(std::move(row));
      }
      if (!states_distinct) continue;
      Attractor candidate(id, std::move(states));
      const bool duplicate =
          std::any_of(attractors.begin(), attractors.end(),
                      [&](const Attractor& a) { return a.cyclic_equal(candidate); });
      if (!duplicate) {
        attractors.push_back(std::move(candidate));
        break;
      }
    }
  }
  return Instance(std::move(attractors), config.noise_bound);
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  ExperimentReport report;
  report.config = config;
  report.repetitions.resize(config.repetitions);

  auto run_one = [&](int rep) {
    RepetitionResult result;
    result.rep = rep + 1;

    // redraw until the generated instance is feasible at this K
    int attempt = 0;
    std::optional<Instance> instance;
    while (true) {
      Instance candidate = generate_instance(config, (rep << 16) + attempt);
      const std::vector<int> full = full_distances(candidate);
      if (*std::min_element(full.begin(), full.end()) >= candidate.required_distance()) {
        instance = std::move(candidate);
        break;
      }
      ++result.discarded;
      if (++attempt > kMaxRedraws) {
        throw Error("instance generation: could not draw a feasible instance");
      }
    }

    // the timers wrap the solver calls only
    SolveResult exact;
    {
      const auto start = Clock::now();
      exact = config.pipeline == Pipeline::kSingleton
                  ? solve_exact_singleton(*instance, config.budget)
                  : solve_exact_periodic(*instance, config.budget);
      result.exact_ms = elapsed_ms(start);
    }
    SolveResult greedy;
    {
      const auto start = Clock::now();
      greedy = config.pipeline == Pipeline::kSingleton
                   ? solve_greedy_singleton(*instance, nullptr)
                   : solve_greedy_periodic(*instance, Budget{});
      result.greedy_ms = elapsed_ms(start);
    }

    result.greedy_size = greedy.discriminator.cardinality();
    if (exact.status == SolveStatus::kSolved) {
      result.exact_size = exact.discriminator.cardinality();
      result.ratio = static_cast<double>(result.greedy_size) / result.exact_size;
      result.ratio_known = true;
      result.status = "ok";
    } else {
      result.status = "exact-budget";
    }
    report.repetitions[result.rep - 1] = std::move(result);
  };

  if (config.parallel_repetitions && config.repetitions > 1) {
    const int workers = std::min<int>(std::max(1u, std::thread::hardware_concurrency()),
                                      config.repetitions);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int rep = next.fetch_add(1); rep < config.repetitions; rep = next.fetch_add(1)) {
          try {
            run_one(rep);
          } catch (const Error& e) {
            report.repetitions[rep].rep = rep + 1;
            report.repetitions[rep].status = std::string("error: ") + e.what();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (int rep = 0; rep < config.repetitions; ++rep) run_one(rep);
  }

  double exact_total = 0;
  double greedy_total = 0;
  for (const RepetitionResult& r : report.repetitions) {
    exact_total += r.exact_ms;
    greedy_total += r.greedy_ms;
    report.total_discarded += r.discarded;
    if (r.ratio_known) report.max_ratio = std::max(report.max_ratio, r.ratio);
  }
  report.mean_exact_ms = exact_total / config.repetitions;
  report.mean_greedy_ms = greedy_total / config.repetitions;
  return report;
}

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  const ExperimentConfig& c = report.config;
  out << "rep,n,m,K,len,exact_time_ms,greedy_time_ms,exact_size,greedy_size,ratio,status\n";
  auto ratio_text = [](bool known, double ratio) {
    if (!known) return std::string("na");
    std::ostringstream s;
    s << ratio;
    return s.str();
  };
  for (const RepetitionResult& r : report.repetitions) {
    out << r.rep << ',' << c.n << ',' << c.m << ',' << c.noise_bound << ',' << c.max_period
        << ',' << r.exact_ms << ',' << r.greedy_ms << ',';
    if (r.ratio_known) {
      out << r.exact_size;
    }
    out << ',' << r.greedy_size << ',' << ratio_text(r.ratio_known, r.ratio) << ','
        << r.status << '\n';
  }
  const bool any_ratio = std::any_of(report.repetitions.begin(), report.repetitions.end(),
                                     [](const RepetitionResult& r) { return r.ratio_known; });
  out << "summary," << c.n << ',' << c.m << ',' << c.noise_bound << ',' << c.max_period << ','
      << report.mean_exact_ms << ',' << report.mean_greedy_ms << ",,,"
      << ratio_text(any_ratio, report.max_ratio) << ",discards=" << report.total_discarded
      << '\n';
}

}  // namespace attdisc
