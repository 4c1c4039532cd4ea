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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace rankcode {

/// Parameters shared by every CLI subcommand. Unset optionals take
/// per-command defaults documented in the README.
struct ExperimentConfig {
  std::string command;
  std::uint32_t q = 2;
  std::size_t m = 8;
  std::optional<std::size_t> n;  // defaults to m
  std::size_t k = 2;
  std::size_t u = 1;
  std::optional<std::size_t> t;
  std::optional<std::size_t> t_min;
  std::optional<std::size_t> t_max;
  std::vector<std::size_t> zeta;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool retry = false;
  std::string format = "csv";
  std::string out;
  std::size_t jobs = 1;

  std::size_t length() const { return n.value_or(m); }
};

using Record = nlohmann::ordered_json;

struct ExperimentResult {
  std::vector<Record> records;
  /// 0 ok, 1 a decoding guarantee was violated.
  int exit_code = 0;
};

/// Throws Errc::InvalidArgument describing the first bad parameter.
void validate(const ExperimentConfig& cfg);

/// The config as echoed into every record.
Record config_record(const ExperimentConfig& cfg);

/// Runs cfg.command after validation.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_csv(std::ostream& os, const std::vector<Record>& records);
void write_jsonl(std::ostream& os, const std::vector<Record>& records);

/// Calls body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body);

}  // namespace rankcode
