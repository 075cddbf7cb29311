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
#include <string>
#include <vector>

#include "attdisc/types.hpp"

namespace attdisc {

/// Which exact/greedy solver pair an experiment compares.
enum class Pipeline { kSingleton, kPeriodic };

const char* pipeline_name(Pipeline p);

/**
 * Parameters of one synthetic experiment: random instances of the given
 * shape, solved by both the exact and the greedy method of the selected
 * pipeline, repeated `repetitions` times. Reported are the mean solver times
 * and the maximum approximation ratio over the repetitions.
 */
struct ExperimentConfig {
  int n = 10;
  int m = 3;
  int noise_bound = 1;   // K
  int max_period = 1;    // len; 1 selects singleton-shaped attractors
  int repetitions = 10;
  uint64_t seed = 1;
  Pipeline pipeline = Pipeline::kSingleton;
  Budget budget;             // per exact-solver run
  bool parallel_repetitions = false;
};

/**
 * Deterministic random instance for a config: node values are i.i.d. uniform
 * bits, periods are uniform on [1, max_period], and rejected redraws enforce
 * state distinctness within an attractor and cyclic distinctness across
 * attractors. `rep` selects the repetition-specific stream.
 */
Instance generate_instance(const ExperimentConfig& config, int rep = 0);

struct RepetitionResult {
  int rep = 0;
  double exact_ms = 0;
  double greedy_ms = 0;
  int exact_size = 0;
  int greedy_size = 0;
  double ratio = 0;        // meaningful only when ratio_known
  bool ratio_known = false;
  std::string status;      // "ok" or "exact-budget"
  int discarded = 0;       // infeasible instances redrawn before this run
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<RepetitionResult> repetitions;
  double mean_exact_ms = 0;
  double mean_greedy_ms = 0;
  double max_ratio = 0;    // over repetitions with a known ratio
  int total_discarded = 0;
};

/// Runs the full experiment. Budget exhaustion of the exact solver is data
/// (ratio reported as unavailable), not a failure.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// CSV with columns rep,n,m,K,len,exact_time_ms,greedy_time_ms,exact_size,
/// greedy_size,ratio,status and one trailing summary row.
void write_report_csv(const ExperimentReport& report, std::ostream& out);

/// The proven greedy approximation guarantee, ln(M(2K+1)) + 1.
double greedy_ratio_bound(int pair_count_m, int noise_bound);

}  // namespace attdisc
