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

#include "cli_app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "attdisc/bench.hpp"
#include "attdisc/distance.hpp"
#include "attdisc/io.hpp"
#include "attdisc/periodic.hpp"
#include "attdisc/singleton.hpp"

namespace attdisc::cli {

namespace {

using nlohmann::json;

struct SolveOptions {
  std::string input;
  int k = 0;
  std::string format = "human";
  double max_seconds = 0;
  int max_size = 0;
  int max_brute_nodes = 20;
  int threads = 0;  // 0: machine parallelism
  int lcm_cap = Instance::kDefaultLcmCap;
  bool show_trace = false;
};

Budget budget_of(const SolveOptions& opt) {
  Budget b;
  b.max_seconds = opt.max_seconds;
  b.max_subset_size = opt.max_size;
  b.threads = opt.threads > 0 ? opt.threads
                              : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return b;
}

json discriminator_json(const Discriminator& disc, int k, double wall_ms) {
  json per_pair = json::array();
  // per_pair_distance rows follow the flat POA order; recover (i1, i2) from
  // the row count
  int m = 2;
  while (pair_count(m) < static_cast<int>(disc.per_pair_distance.size())) ++m;
  for (std::size_t l = 0; l < disc.per_pair_distance.size(); ++l) {
    const PairIndex poa = pair_from_flat(static_cast<int>(l) + 1, m);
    per_pair.push_back(
        {{"i1", poa.first}, {"i2", poa.second}, {"dist", disc.per_pair_distance[l]}});
  }
  return json{{"method", method_name(disc.method)},
              {"k", k},
              {"nodes", disc.nodes},
              {"cardinality", disc.cardinality()},
              {"per_pair", per_pair},
              {"feasible", disc.feasible},
              {"wall_ms", wall_ms}};
}

void print_human_solution(const Instance& instance, const Discriminator& disc, double wall_ms,
                          std::ostream& out) {
  out << "method: " << method_name(disc.method) << "\n";
  out << "k: " << instance.noise_bound() << " (required distance " << instance.required_distance()
      << ")\n";
  out << "nodes (" << disc.cardinality() << "):";
  for (int node : disc.nodes) out << " v" << node;
  out << "\n";
  out << "per-pair distances:";
  const int m = instance.attractor_count();
  for (std::size_t l = 0; l < disc.per_pair_distance.size(); ++l) {
    const PairIndex poa = pair_from_flat(static_cast<int>(l) + 1, m);
    out << " (Att" << poa.first << ",Att" << poa.second << ")=" << disc.per_pair_distance[l];
  }
  out << "\n";
  out << "feasible: " << (disc.feasible ? "yes" : "no") << "\n";
  out << "wall_ms: " << wall_ms << "\n";
}

void print_csv_solution(const Discriminator& disc, int k, double wall_ms, std::ostream& out) {
  out << "method,k,cardinality,nodes,feasible,wall_ms\n";
  out << method_name(disc.method) << ',' << k << ',' << disc.cardinality() << ',';
  for (std::size_t i = 0; i < disc.nodes.size(); ++i) {
    if (i) out << ';';
    out << disc.nodes[i];
  }
  out << ',' << (disc.feasible ? "true" : "false") << ',' << wall_ms << '\n';
}

int emit_solution(const Instance& instance, const SolveOptions& opt, const SolveResult& result,
                  double wall_ms, std::ostream& out, std::ostream& err) {
  if (result.status == SolveStatus::kInfeasible) {
    if (opt.format == "json") {
      out << json{{"status", "infeasible"}, {"k", opt.k}}.dump(2) << "\n";
    } else {
      err << "INFEASIBLE: some attractor pair cannot reach distance "
          << instance.required_distance() << " even under full observation\n";
    }
    return kExitInfeasible;
  }
  if (result.status == SolveStatus::kBudgetExceeded) {
    if (opt.format == "json") {
      out << json{{"status", "budget-exceeded"}, {"k", opt.k}}.dump(2) << "\n";
    } else {
      err << "BUDGET_EXCEEDED: raise --max-seconds/--max-size to continue the search\n";
    }
    return kExitBudget;
  }
  if (opt.format == "json") {
    out << discriminator_json(result.discriminator, opt.k, wall_ms).dump(2) << "\n";
  } else if (opt.format == "csv") {
    print_csv_solution(result.discriminator, opt.k, wall_ms, out);
  } else {
    print_human_solution(instance, result.discriminator, wall_ms, out);
  }
  return kExitOk;
}

std::vector<int> parse_node_list(const std::string& text) {
  std::vector<int> nodes;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::string digits = cur;
    if (digits.front() == 'v' || digits.front() == 'V') digits.erase(0, 1);
    nodes.push_back(std::stoi(digits));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return nodes;
}

std::string read_stream_or_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write file: " + path);
  file << content;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"minimum sensor-node selection for discriminating Boolean-network attractors "
               "with up to K noisy nodes per attractor"};
  app.require_subcommand(1);

  // ---- solve ----------------------------------------------------------
  auto solve = app.add_subcommand("solve", "solve an instance file");
  solve->require_subcommand(1);
  auto opt = std::make_shared<SolveOptions>();
  std::vector<std::pair<CLI::App*, Method>> solver_cmds;
  auto add_solver = [&](const std::string& name, const std::string& desc, Method method) {
    CLI::App* cmd = solve->add_subcommand(name, desc);
    cmd->add_option("input", opt->input, "attractor file")->required();
    cmd->add_option("--k", opt->k, "noise bound K (per-attractor noisy nodes)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", opt->format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--max-seconds", opt->max_seconds, "wall-clock budget for the solver");
    cmd->add_option("--threads", opt->threads, "worker threads (default: machine parallelism)");
    cmd->add_option("--lcm-cap", opt->lcm_cap, "largest accepted pairwise period LCM");
    if (method == Method::kExactPeriodic) {
      cmd->add_option("--max-size", opt->max_size, "largest subset size to enumerate");
    }
    if (method == Method::kBruteForce) {
      cmd->add_option("--max-n", opt->max_brute_nodes, "node-count cap for exhaustive search");
    }
    if (method == Method::kGreedyPeriodic || method == Method::kGreedySingleton) {
      cmd->add_flag("--trace", opt->show_trace, "print the greedy iteration table");
    }
    solver_cmds.emplace_back(cmd, method);
  };
  add_solver("exact-periodic", "subset enumeration with the clique reduction", Method::kExactPeriodic);
  add_solver("greedy-periodic", "pair-addition greedy", Method::kGreedyPeriodic);
  add_solver("exact-singleton", "branch-and-bound set multi-cover", Method::kExactSingleton);
  add_solver("greedy-singleton", "column greedy for singleton attractors", Method::kGreedySingleton);
  add_solver("brute-force", "exhaustive column-subset search (singleton)", Method::kBruteForce);

  // ---- verify ---------------------------------------------------------
  auto verify = app.add_subcommand("verify", "check a proposed node set against an instance");
  std::string verify_input;
  std::string verify_nodes;
  std::string verify_json;
  int verify_k = 0;
  bool verify_k_set = false;
  std::string verify_format = "human";
  verify->add_option("input", verify_input, "attractor file")->required();
  verify->add_option("--nodes", verify_nodes, "comma-separated node indices, e.g. 1,2,3 or v1,v2");
  verify->add_option("--k", verify_k, "noise bound K")->check(CLI::NonNegativeNumber);
  verify->add_option("--from-json", verify_json,
                     "read nodes (and k) from a solve --format json document; '-' for stdin");
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"human", "json"}));

  // ---- dump -----------------------------------------------------------
  auto dump = app.add_subcommand("dump", "emit the distance matrix D or C_att as CSV");
  std::string dump_input;
  std::string dump_matrix = "d";
  std::string dump_output;
  int dump_threads = 0;
  dump->add_option("input", dump_input, "attractor file")->required();
  dump->add_option("--matrix", dump_matrix, "which matrix to dump")
      ->check(CLI::IsMember({"d", "catt"}));
  dump->add_option("-o,--output", dump_output, "output path (default: stdout)");
  dump->add_option("--threads", dump_threads, "worker threads for building D");

  // ---- gen ------------------------------------------------------------
  auto gen = app.add_subcommand("gen", "generate a random instance file");
  ExperimentConfig gen_config;
  std::string gen_output;
  gen->add_option("--n", gen_config.n, "node count")->required();
  gen->add_option("--m", gen_config.m, "attractor count")->required();
  gen->add_option("--len", gen_config.max_period, "maximum attractor period");
  gen->add_option("--seed", gen_config.seed, "RNG seed");
  gen->add_option("-o,--output", gen_output, "output path (default: stdout)");

  // ---- bench ----------------------------------------------------------
  auto bench = app.add_subcommand("bench", "run the synthetic experiment harness");
  ExperimentConfig bench_config;
  std::string bench_pipeline = "singleton";
  std::string bench_output;
  bool bench_parallel = false;
  bench->add_option("--n", bench_config.n, "node count")->required();
  bench->add_option("--m", bench_config.m, "attractor count")->required();
  bench->add_option("--k", bench_config.noise_bound, "noise bound K")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--len", bench_config.max_period, "maximum attractor period");
  bench->add_option("--reps", bench_config.repetitions, "repetitions per config");
  bench->add_option("--seed", bench_config.seed, "RNG seed");
  bench->add_option("--pipeline", bench_pipeline, "which solver pair to compare")
      ->check(CLI::IsMember({"singleton", "periodic"}));
  bench->add_option("--max-seconds", bench_config.budget.max_seconds,
                    "per-run budget for the exact solver");
  bench->add_option("--threads", bench_config.budget.threads, "exact-solver worker threads");
  bench->add_flag("--parallel", bench_parallel, "run repetitions concurrently");
  bench->add_option("-o,--output", bench_output, "CSV output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      Method method = Method::kBruteForce;
      for (const auto& [cmd, cmd_method] : solver_cmds) {
        if (cmd->parsed()) method = cmd_method;
      }
      const Instance instance = load_instance(opt->input, opt->k, opt->lcm_cap);
      const Budget budget = budget_of(*opt);
      GreedyPeriodicTrace periodic_trace;
      GreedySingletonTrace singleton_trace;

      const auto start = std::chrono::steady_clock::now();
      SolveResult result;
      switch (method) {
        case Method::kExactPeriodic:
          result = solve_exact_periodic(instance, budget);
          break;
        case Method::kGreedyPeriodic:
          result = solve_greedy_periodic(instance, budget,
                                         opt->show_trace ? &periodic_trace : nullptr);
          break;
        case Method::kExactSingleton:
          result = solve_exact_singleton(instance, budget);
          break;
        case Method::kGreedySingleton:
          result = solve_greedy_singleton(instance,
                                          opt->show_trace ? &singleton_trace : nullptr);
          break;
        case Method::kBruteForce:
          result = brute_force_singleton(instance, opt->max_brute_nodes);
          break;
      }
      const double wall_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();

      if (opt->show_trace && result.solved() && opt->format == "human") {
        if (method == Method::kGreedyPeriodic) {
          out << "step | pair | gain | r\n";
          for (std::size_t s = 0; s < periodic_trace.steps.size(); ++s) {
            const auto& step = periodic_trace.steps[s];
            out << s + 1 << " | (v" << step.chosen.first << ",v" << step.chosen.second
                << ") | " << step.gain << " |";
            for (int r : step.lower_bounds) out << ' ' << r;
            out << "\n";
          }
          if (periodic_trace.fell_back_to_all_nodes) {
            out << "candidate pairs exhausted; returned the full node set\n";
          }
        } else if (method == Method::kGreedySingleton) {
          out << "step | column | gain | r\n";
          for (std::size_t s = 0; s < singleton_trace.steps.size(); ++s) {
            const auto& step = singleton_trace.steps[s];
            out << s + 1 << " | v" << step.chosen_column << " | " << step.gain << " |";
            for (int r : step.coverage_counts) out << ' ' << r;
            out << "\n";
          }
        }
      }
      return emit_solution(instance, *opt, result, wall_ms, out, err);
    }

    if (verify->parsed()) {
      verify_k_set = verify->count("--k") > 0;
      std::vector<int> nodes;
      if (!verify_json.empty()) {
        const json doc = json::parse(read_stream_or_file(verify_json));
        nodes = doc.at("nodes").get<std::vector<int>>();
        // the document's k applies unless --k was given explicitly
        if (!verify_k_set && doc.contains("k")) verify_k = doc.at("k").get<int>();
      }
      if (!verify_nodes.empty()) nodes = parse_node_list(verify_nodes);
      if (nodes.empty()) {
        err << "verify: provide --nodes or --from-json\n";
        return kExitUsage;
      }
      const Instance instance = load_instance(verify_input, verify_k);
      const Discriminator disc = evaluate_nodes(instance, nodes, Method::kBruteForce);
      const int min_dist =
          *std::min_element(disc.per_pair_distance.begin(), disc.per_pair_distance.end());
      if (verify_format == "json") {
        json doc = discriminator_json(disc, verify_k, 0.0);
        doc.erase("method");
        doc.erase("wall_ms");
        doc["min_dist"] = min_dist;
        out << doc.dump(2) << "\n";
      } else {
        out << "nodes (" << disc.cardinality() << "):";
        for (int node : disc.nodes) out << " v" << node;
        out << "\n";
        const int m = instance.attractor_count();
        out << "per-pair distances:";
        for (std::size_t l = 0; l < disc.per_pair_distance.size(); ++l) {
          const PairIndex poa = pair_from_flat(static_cast<int>(l) + 1, m);
          out << " (Att" << poa.first << ",Att" << poa.second << ")="
              << disc.per_pair_distance[l];
        }
        out << "\nmin distance: " << min_dist << " (required " << instance.required_distance()
            << ")\n";
        out << "feasible: " << (disc.feasible ? "yes" : "no") << "\n";
      }
      return disc.feasible ? kExitOk : kExitInfeasible;
    }

    if (dump->parsed()) {
      std::ostringstream csv;
      if (dump_matrix == "catt") {
        const Instance instance = load_instance(dump_input, 0);
        write_diff_csv(build_diff_matrix(instance), csv);
      } else {
        const Instance instance = load_instance(dump_input, 0);
        const int threads = dump_threads > 0
                                ? dump_threads
                                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
        write_pair_distance_csv(build_pair_distance_matrix(instance, threads), csv);
      }
      write_output(dump_output, csv.str(), out);
      return kExitOk;
    }

    if (gen->parsed()) {
      const Instance instance = generate_instance(gen_config, 0);
      std::ostringstream text;
      text << "# generated: n=" << gen_config.n << " m=" << gen_config.m
           << " len=" << gen_config.max_period << " seed=" << gen_config.seed << "\n";
      text << serialize_instance(instance);
      write_output(gen_output, text.str(), out);
      return kExitOk;
    }

    if (bench->parsed()) {
      bench_config.pipeline =
          bench_pipeline == "periodic" ? Pipeline::kPeriodic : Pipeline::kSingleton;
      bench_config.parallel_repetitions = bench_parallel;
      if (bench_config.budget.threads <= 0) bench_config.budget.threads = 1;
      const ExperimentReport report = run_experiment(bench_config);
      std::ostringstream csv;
      write_report_csv(report, csv);
      write_output(bench_output, csv.str(), out);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace attdisc::cli
