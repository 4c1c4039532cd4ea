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

#include "rankcode/channel.hpp"

#include <algorithm>
#include <string>

#include "rankcode/error.hpp"
#include "rankcode/support.hpp"

namespace rankcode {

namespace {

constexpr int kMaxAttempts = 100;

FqElem random_base(const BaseField& f, Rng& rng) { return static_cast<FqElem>(rng.below(f.order())); }

}  // namespace

FqmElem random_element(const FieldCtx& f, Rng& rng) {
  FqmElem x;
  for (std::size_t i = 0; i < f.m(); ++i) x[i] = random_base(f.base(), rng);
  return x;
}

Word random_independent(const FieldCtx& f, std::size_t count, Rng& rng) {
  if (count > f.m()) throw Error(Errc::RankInfeasible, "cannot pick more than m independent elements");
  Word out;
  out.reserve(count);
  while (out.size() < count) {
    out.push_back(random_element(f, rng));
    if (rank_weight(f, out) != out.size()) out.pop_back();
  }
  return out;
}

FqMatrix random_full_rank(const BaseField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows > cols) throw Error(Errc::RankInfeasible, "full row rank needs rows <= cols");
  FqMatrix a(0, cols);
  std::vector<FqElem> row(cols);
  while (a.rows() < rows) {
    for (auto& v : row) v = random_base(f, rng);
    FqMatrix trial = a;
    trial.append_row(row);
    if (rank(f, trial) == trial.rows()) a = std::move(trial);
  }
  return a;
}

Word random_error_vector(const FieldCtx& f, std::size_t n, std::size_t t, Rng& rng) {
  if (t > std::min(n, f.m()))
    throw Error(Errc::RankInfeasible, "rank " + std::to_string(t) + " exceeds min(n, m)");
  Word e(n);
  if (t == 0) return e;
  const Word a = random_independent(f, t, rng);
  const FqMatrix b = random_full_rank(f.base(), t, n, rng);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < t; ++l) e[j] = f.add(e[j], f.scale(b(l, j), a[l]));
  return e;
}

Word random_error_vector(const FieldCtx& f, std::size_t n, std::size_t t, std::uint64_t seed) {
  Rng rng(seed);
  return random_error_vector(f, n, t, rng);
}

InterleavedWord random_burst_error(const FieldCtx& f, std::size_t u, std::size_t n, std::size_t t,
                                   std::optional<std::size_t> zeta, Rng& rng) {
  const std::size_t m = f.m();
  const std::size_t z = zeta.value_or(std::min(u, t));
  if (u == 0) throw Error(Errc::InvalidArgument, "interleaving order must be at least 1");
  if (t > n || t > u * m) throw Error(Errc::RankInfeasible, "rank exceeds min(n, u m)");
  if (z > std::min(u, t)) throw Error(Errc::RankInfeasible, "zeta must not exceed min(u, t)");
  if (t > 0 && z == 0) throw Error(Errc::RankInfeasible, "a nonzero error has zeta >= 1");
  if (t > z * m) throw Error(Errc::RankInfeasible, "F_q-rank t needs t <= zeta m");
  InterleavedWord e(u, Word(n));
  if (t == 0) return e;

  const FqMatrix b = random_full_rank(f.base(), t, n, rng);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // A = P Q with P (u x zeta) and Q (zeta x t) has F_{q^m}-rank <= zeta.
    InterleavedWord p(u, Word(z)), q(z, Word(t)), a(u, Word(t));
    for (auto& row : p)
      for (auto& x : row) x = random_element(f, rng);
    for (auto& row : q)
      for (auto& x : row) x = random_element(f, rng);
    for (std::size_t i = 0; i < u; ++i)
      for (std::size_t l = 0; l < t; ++l)
        for (std::size_t s = 0; s < z; ++s) a[i][l] = f.add(a[i][l], f.mul(p[i][s], q[s][l]));
    if (fqm_rank(f, a) != z) continue;
    if (stacked_rank_weight(f, a) != t) continue;
    for (std::size_t i = 0; i < u; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < t; ++l) e[i][j] = f.add(e[i][j], f.scale(b(l, j), a[i][l]));
    return e;
  }
  throw Error(Errc::RankInfeasible, "resampling cap exceeded while drawing the burst error");
}

InterleavedWord random_burst_error(const FieldCtx& f, std::size_t u, std::size_t n, const ErrorSpec& spec) {
  Rng rng(spec.seed);
  return random_burst_error(f, u, n, spec.t, spec.zeta, rng);
}

GabidulinCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng) {
  if (n > f->m()) throw Error(Errc::DependentEvaluationPoints, "n must not exceed m");
  return GabidulinCode(f, random_independent(*f, n, rng), k);
}

GabidulinCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_code(f, n, k, rng);
}

QPoly random_message(const FieldCtx& f, std::size_t k, Rng& rng) {
  std::vector<FqmElem> c(k);
  for (auto& x : c) x = random_element(f, rng);
  return QPoly(std::move(c));
}

QPoly random_message(const FieldCtx& f, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_message(f, k, rng);
}

}  // namespace rankcode
