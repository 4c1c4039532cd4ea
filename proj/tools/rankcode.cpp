/*
 * Copyright 2026 The rankcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rankcode/error.hpp"
#include "rankcode/experiment.hpp"

namespace {

constexpr int kConfigError = 2;

void add_common(CLI::App& sub, rankcode::ExperimentConfig& c) {
  sub.add_option("--q", c.q, "Base field order (prime power)")->capture_default_str();
  sub.add_option("--m", c.m, "Extension degree")->capture_default_str();
  sub.add_option("--n", c.n, "Code length (defaults to m)");
  sub.add_option("--k", c.k, "Code dimension")->capture_default_str();
  sub.add_option("--seed", c.seed, "Run seed")->capture_default_str();
  sub.add_option("--format", c.format, "Output format: csv or json")->capture_default_str();
  sub.add_option("--out", c.out, "Output file (stdout when empty)");
}

void add_trials(CLI::App& sub, rankcode::ExperimentConfig& c) {
  sub.add_option("--u", c.u, "Interleaving order")->capture_default_str();
  sub.add_option("--t", c.t, "Single decoding radius");
  sub.add_option("--t-min", c.t_min, "Smallest radius of the sweep");
  sub.add_option("--t-max", c.t_max, "Largest radius of the sweep");
  sub.add_option("--trials", c.trials, "Trials per point")->capture_default_str();
  sub.add_option("--jobs", c.jobs, "Worker threads")->capture_default_str();
  sub.add_flag("--retry", c.retry, "Retry failed decodings with smaller radii");
}

}  // namespace

int main(int argc, char** argv) {
  rankcode::ExperimentConfig cfg;
  CLI::App app{"Gabidulin and interleaved Gabidulin decoding experiments"};
  app.require_subcommand(1);

  auto* roundtrip = app.add_subcommand("roundtrip", "Encode, add a rank-t error, decode");
  auto* isim = app.add_subcommand("interleaved-sim", "Interleaved decoding success rates over t");
  auto* liga = app.add_subcommand("liga-boundary", "Compare the failure predicate with observed failures");
  auto* mindist = app.add_subcommand("mindist", "Exhaustive minimum rank distance");
  for (auto* sub : {roundtrip, isim, liga, mindist}) add_common(*sub, cfg);
  for (auto* sub : {roundtrip, isim, liga}) add_trials(*sub, cfg);
  liga->add_option("--zeta", cfg.zeta, "F_{q^m}-ranks of the error (space or comma separated)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  rankcode::ExperimentResult result;
  try {
    result = rankcode::run_experiment(cfg);
  } catch (const rankcode::Error& e) {
    std::cerr << "rankcode: " << e.what() << '\n';
    return kConfigError;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "rankcode: cannot open " << cfg.out << '\n';
      return kConfigError;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  if (cfg.format == "json")
    rankcode::write_jsonl(os, result.records);
  else
    rankcode::write_csv(os, result.records);
  return result.exit_code;
}
