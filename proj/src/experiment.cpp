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

#include "rankcode/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "rankcode/channel.hpp"
#include "rankcode/error.hpp"
#include "rankcode/interleaved.hpp"
#include "rankcode/oracle.hpp"

namespace rankcode {

namespace {

constexpr std::uint64_t kCodeStream = 0xc0de;

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::InvalidArgument, msg); }

bool is_command(const std::string& c) {
  return c == "roundtrip" || c == "interleaved-sim" || c == "liga-boundary" || c == "mindist";
}

std::size_t unique_radius(const ExperimentConfig& c) { return (c.length() - c.k) / 2; }
std::size_t interleaved_radius(const ExperimentConfig& c) { return c.u * (c.length() - c.k) / (c.u + 1); }

std::vector<std::size_t> t_values(const ExperimentConfig& c, std::size_t lo, std::size_t hi) {
  if (c.t) return {*c.t};
  lo = c.t_min.value_or(lo);
  hi = c.t_max.value_or(hi);
  std::vector<std::size_t> out;
  for (std::size_t t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

std::size_t liga_t_max(const ExperimentConfig& c) {
  const std::size_t nk = c.length() - c.k;
  return std::min(interleaved_radius(c), nk == 0 ? 0 : nk - 1);
}

std::vector<std::size_t> zeta_values(const ExperimentConfig& c) {
  if (!c.zeta.empty()) return c.zeta;
  std::vector<std::size_t> out;
  for (std::size_t z = 1; z <= c.u; ++z) out.push_back(z);
  return out;
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t t, std::size_t zeta) {
  return derive_seed(seed, 1 + t + (static_cast<std::uint64_t>(zeta) << 16));
}

enum class Verdict { Correct, Wrong, Failed };

struct TrialResult {
  Verdict verdict = Verdict::Failed;
  bool underdetermined = false;
  std::size_t kernel_dim = 0;
};

Verdict judge(const DecodeOutcome& out, const std::vector<QPoly>& sent) {
  if (!out.success()) return Verdict::Failed;
  return out.messages == sent ? Verdict::Correct : Verdict::Wrong;
}

struct Tally {
  std::size_t correct = 0, wrong = 0, failed = 0, underdetermined = 0;
  double mean_kernel_dim = 0;
};

Tally tally(const std::vector<TrialResult>& results) {
  Tally s;
  double kernel = 0;
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::Correct: ++s.correct; break;
      case Verdict::Wrong: ++s.wrong; break;
      case Verdict::Failed: ++s.failed; break;
    }
    if (r.underdetermined) ++s.underdetermined;
    kernel += static_cast<double>(r.kernel_dim);
  }
  if (!results.empty()) s.mean_kernel_dim = kernel / static_cast<double>(results.size());
  return s;
}

void put_tally(Record& rec, const Tally& s, std::size_t trials) {
  rec["successes"] = s.correct;
  rec["failures"] = s.failed;
  rec["wrong_decodings"] = s.wrong;
  rec["success_rate"] = static_cast<double>(s.correct) / static_cast<double>(trials);
  rec["underdetermined"] = s.underdetermined;
  rec["mean_kernel_dim"] = s.mean_kernel_dim;
}

std::vector<TrialResult> run_trials(const ExperimentConfig& c, std::uint64_t seed,
                                    const std::function<TrialResult(Rng&)>& trial) {
  std::vector<TrialResult> results(c.trials);
  parallel_for(c.trials, c.jobs, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    results[i] = trial(rng);
  });
  return results;
}

ExperimentResult run_roundtrip(const ExperimentConfig& c, const FieldPtr& f) {
  const GabidulinCode code = random_code(f, c.length(), c.k, derive_seed(c.seed, kCodeStream));
  ExperimentResult res;
  for (std::size_t t : t_values(c, 0, unique_radius(c))) {
    const std::uint64_t ps = point_seed(c.seed, t, 0);
    auto results = run_trials(c, ps, [&](Rng& rng) {
      std::vector<QPoly> sent{random_message(*f, c.k, rng)};
      Word y = encode(code, sent[0]);
      const Word e = random_error_vector(*f, c.length(), t, rng);
      for (std::size_t j = 0; j < y.size(); ++j) y[j] = f->add(y[j], e[j]);
      const DecodeOutcome out = decode_general(code, y, t);
      return TrialResult{judge(out, sent), out.reason == FailureReason::UnderdeterminedSystem, out.stats.kernel_dim};
    });
    const Tally s = tally(results);
    Record rec = config_record(c);
    rec["t"] = t;
    rec["unique_radius"] = unique_radius(c);
    rec["point_seed"] = ps;
    put_tally(rec, s, c.trials);
    if (s.correct != c.trials) res.exit_code = 1;
    res.records.push_back(std::move(rec));
  }
  return res;
}

TrialResult interleaved_trial(const ExperimentConfig& c, const FieldCtx& f, const InterleavedCode& code,
                              std::size_t t, std::optional<std::size_t> zeta, Rng& rng) {
  std::vector<QPoly> sent;
  for (std::size_t i = 0; i < c.u; ++i) sent.push_back(random_message(f, c.k, rng));
  InterleavedWord y = iencode(code, sent);
  const InterleavedWord e = random_burst_error(f, c.u, c.length(), t, zeta, rng);
  for (std::size_t i = 0; i < c.u; ++i)
    for (std::size_t j = 0; j < c.length(); ++j) y[i][j] = f.add(y[i][j], e[i][j]);
  InterleavedDecodeOptions opts;
  opts.retry = c.retry;
  const DecodeOutcome out = idecode(code, y, t, opts);
  return TrialResult{judge(out, sent), out.reason == FailureReason::UnderdeterminedSystem, out.stats.kernel_dim};
}

ExperimentResult run_interleaved(const ExperimentConfig& c, const FieldPtr& f) {
  const InterleavedCode code(random_code(f, c.length(), c.k, derive_seed(c.seed, kCodeStream)), c.u);
  ExperimentResult res;
  for (std::size_t t : t_values(c, 0, interleaved_radius(c))) {
    const std::size_t zeta = std::min(c.u, t);
    const std::uint64_t ps = point_seed(c.seed, t, 0);
    auto results = run_trials(c, ps, [&](Rng& rng) { return interleaved_trial(c, *f, code, t, zeta, rng); });
    const Tally s = tally(results);
    Record rec = config_record(c);
    rec["t"] = t;
    rec["zeta_used"] = zeta;
    rec["max_radius"] = interleaved_radius(c);
    rec["point_seed"] = ps;
    put_tally(rec, s, c.trials);
    if (t <= unique_radius(c) && s.correct != c.trials) res.exit_code = 1;
    res.records.push_back(std::move(rec));
  }
  return res;
}

ExperimentResult run_liga(const ExperimentConfig& c, const FieldPtr& f) {
  const InterleavedCode code(random_code(f, c.length(), c.k, derive_seed(c.seed, kCodeStream)), c.u);
  const std::size_t n = c.length(), nk = n - c.k;
  ExperimentResult res;
  for (std::size_t zeta : zeta_values(c))
    for (std::size_t t : t_values(c, 1, liga_t_max(c))) {
      if (zeta > t || t > zeta * c.m) continue;  // no burst error with these ranks
      const std::uint64_t ps = point_seed(c.seed, t, zeta);
      auto results = run_trials(c, ps, [&](Rng& rng) { return interleaved_trial(c, *f, code, t, zeta, rng); });
      const Tally s = tally(results);
      const long long deficit = static_cast<long long>(t) + 1 - static_cast<long long>(zeta * (nk - t));
      Record rec = config_record(c);
      rec["zeta_used"] = zeta;
      rec["t"] = t;
      rec["predicted_fail"] = failure_predicate(n, c.k, t, zeta);
      rec["observed_fail_rate"] = static_cast<double>(s.failed + s.wrong) / static_cast<double>(c.trials);
      rec["effective_equations"] = zeta * n;
      rec["predicted_kernel_dim"] = c.m * static_cast<std::size_t>(std::max(1LL, deficit));
      rec["point_seed"] = ps;
      put_tally(rec, s, c.trials);
      res.records.push_back(std::move(rec));
    }
  return res;
}

ExperimentResult run_mindist(const ExperimentConfig& c, const FieldPtr& f) {
  const GabidulinCode code = random_code(f, c.length(), c.k, derive_seed(c.seed, kCodeStream));
  const std::size_t d = brute_min_distance(code);
  Record rec = config_record(c);
  rec["d_min"] = d;
  rec["singleton_bound"] = c.length() - c.k + 1;
  rec["mrd"] = d == c.length() - c.k + 1;
  ExperimentResult res;
  res.records.push_back(std::move(rec));
  return res;
}

std::string csv_cell(const Record& v) {
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
    return s;
  }
  if (!v.is_string()) return v.dump();
  const auto& s = v.get_ref<const std::string&>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

void validate(const ExperimentConfig& c) {
  if (!is_command(c.command)) bad("unknown command '" + c.command + "'");
  if (c.m < 1 || c.m > kMaxExtensionDegree) bad("m must be in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  if (c.length() < 1 || c.length() > c.m) bad("n must satisfy 1 <= n <= m");
  if (c.k < 1 || c.k > c.length()) bad("k must satisfy 1 <= k <= n");
  if (c.u < 1) bad("u must be at least 1");
  if (c.trials < 1) bad("trials must be at least 1");
  if (c.jobs < 1) bad("jobs must be at least 1");
  if (c.format != "csv" && c.format != "json") bad("format must be csv or json");
  if (c.t && (c.t_min || c.t_max)) bad("--t cannot be combined with --t-min/--t-max");
  if (c.t_min && c.t_max && *c.t_min > *c.t_max) bad("t-min exceeds t-max");
  for (std::size_t z : c.zeta)
    if (z < 1 || z > c.u) bad("every zeta must lie in [1, u]");

  auto check_upper = [&](std::size_t limit, const char* what) {
    const std::size_t hi = c.t ? *c.t : c.t_max.value_or(limit);
    if (hi > limit) bad(std::string("t exceeds ") + what + " " + std::to_string(limit));
  };
  if (c.command == "roundtrip") check_upper(unique_radius(c), "the unique decoding radius");
  if (c.command == "interleaved-sim") check_upper(interleaved_radius(c), "the interleaved radius");
  if (c.command == "liga-boundary") {
    if (c.length() - c.k < 2) bad("liga-boundary needs n - k >= 2");
    check_upper(liga_t_max(c), "min(max_radius, n - k - 1) =");
    if (c.t.value_or(1) < 1 || c.t_min.value_or(1) < 1) bad("liga-boundary needs t >= 1");
  }
}

Record config_record(const ExperimentConfig& c) {
  Record r;
  r["command"] = c.command;
  r["q"] = c.q;
  r["m"] = c.m;
  r["n"] = c.length();
  r["k"] = c.k;
  r["u"] = c.u;
  r["trials"] = c.trials;
  r["seed"] = c.seed;
  r["retry"] = c.retry;
  r["t_arg"] = c.t ? Record(*c.t) : Record();
  r["t_min"] = c.t_min ? Record(*c.t_min) : Record();
  r["t_max"] = c.t_max ? Record(*c.t_max) : Record();
  r["zeta"] = Record(c.zeta);
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& c) {
  validate(c);
  const FieldPtr f = FieldCtx::create(c.q, c.m);
  if (c.command == "roundtrip") return run_roundtrip(c, f);
  if (c.command == "interleaved-sim") return run_interleaved(c, f);
  if (c.command == "liga-boundary") return run_liga(c, f);
  return run_mindist(c, f);
}

void write_csv(std::ostream& os, const std::vector<Record>& records) {
  if (records.empty()) return;
  bool first = true;
  for (const auto& [key, _] : records.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << '\n';
  for (const auto& rec : records) {
    first = true;
    for (const auto& [key, value] : rec.items()) {
      os << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    os << '\n';
  }
}

void write_jsonl(std::ostream& os, const std::vector<Record>& records) {
  for (const auto& rec : records) os << rec.dump() << '\n';
}

void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace rankcode
