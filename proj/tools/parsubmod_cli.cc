// Copyright 2026 The Authors.
//
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

// Command-line front end: solve, gen, verify.
//
// Exit status: 0 success, 1 input error, 2 assertion failure.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parsubmod/datasets.h"
#include "parsubmod/element_set.h"
#include "parsubmod/experiment.h"
#include "parsubmod/property_suite.h"

namespace {

constexpr int kInputError = 1;
constexpr int kAssertionFailure = 2;

int RunSolve(parsubmod::ExperimentConfig& config, const std::string& search,
             const std::string& out, const std::string& data) {
  config.search_mode = search == "binary" ? parsubmod::SearchMode::kBinary
                                          : parsubmod::SearchMode::kLinear;
  if (!data.empty()) config.data_dir = std::filesystem::path(data);
  std::vector<parsubmod::ResultRow> rows = parsubmod::RunExperiment(config);
  parsubmod::NormalizeUtilities(rows);
  parsubmod::WriteCsv(rows, out);
  std::cout << parsubmod::Summarize(rows);
  std::cout << "wrote " << rows.size() << " rows to " << out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-adaptivity parallel submodular maximization"};
  app.require_subcommand(1);

  parsubmod::ExperimentConfig config;
  std::string search = "linear";
  std::string out;
  std::string data;
  double epsilon = 0.0;
  double p = 0.0;
  CLI::App* solve = app.add_subcommand("solve", "Run an experiment, write CSV");
  solve->add_option("--problem", config.problem,
                    "revenue | image | movie | synthetic-cut")
      ->required();
  solve->add_option("--algorithm", config.algorithms,
                    "parskp | parssp | usm | greedy | bruteforce (comma list)")
      ->required()
      ->delimiter(',');
  auto* eps_opt = solve->add_option("--epsilon", epsilon,
                                    "Accuracy (default 0.1 SKP, 0.4 SSP)");
  solve->add_option("--alpha", config.alpha, "ParSKP alpha")
      ->capture_default_str();
  auto* p_opt = solve->add_option("--p", p, "ParSSP acceptance probability");
  auto* budget_opt =
      solve->add_option("--budget", config.budgets, "Budget sweep (comma list)")
          ->delimiter(',');
  solve->add_option("--m", config.cardinalities, "Cardinality sweep (comma list)")
      ->delimiter(',')
      ->excludes(budget_opt);
  solve->add_option("--repeats", config.repeats, "Runs per sweep point")
      ->capture_default_str();
  solve->add_option("--seed", config.seed, "Master seed")->capture_default_str();
  solve->add_option("--search", search, "t* search mode")
      ->check(CLI::IsMember({"linear", "binary"}))
      ->capture_default_str();
  solve->add_option("--out", out, "Output CSV")->required();
  solve->add_option("--data", data, "Data directory (synthetic if absent)");
  solve->add_option("--n", config.synthetic_n, "Synthetic instance size")
      ->capture_default_str();
  solve->add_flag("--record-time", config.record_time,
                  "Fill wall_ms (breaks byte-identical reruns)");

  std::string kind;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Write a synthetic instance");
  gen->add_option("--kind", kind, "revenue | cut | image | movie")->required();
  gen->add_option("--n", gen_n, "Number of nodes / items")->required();
  gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output directory")->required();

  std::uint64_t verify_seed = 1;
  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--seed", verify_seed, "Seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve) {
      if (*eps_opt) config.epsilon = epsilon;
      if (*p_opt) config.p = p;
      return RunSolve(config, search, out, data);
    }
    if (*gen) {
      for (const auto& path :
           parsubmod::GenerateSynthetic(kind, gen_n, gen_seed, gen_out)) {
        std::cout << "wrote " << path.string() << '\n';
      }
      return 0;
    }
    const auto results = parsubmod::RunPropertySuite(verify_seed, std::cout);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << results.size() - failed << "/" << results.size()
              << " properties hold\n";
    return failed == 0 ? 0 : kAssertionFailure;
  } catch (const parsubmod::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const parsubmod::AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return kAssertionFailure;
  }
}
