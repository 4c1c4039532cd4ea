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

#include "rankcode/interleaved.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rankcode/error.hpp"
#include "rankcode/rhs_system.hpp"

namespace rankcode {

InterleavedCode::InterleavedCode(GabidulinCode base, std::size_t u) : base_(std::move(base)), u_(u) {
  if (u_ == 0) throw Error(Errc::InvalidArgument, "interleaving order must be at least 1");
}

std::size_t max_radius(const InterleavedCode& code) noexcept {
  const std::size_t u = code.interleaving();
  return u * (code.length() - code.dimension()) / (u + 1);
}

InterleavedWord iencode(const InterleavedCode& code, std::span<const QPoly> messages) {
  if (messages.size() != code.interleaving())
    throw Error(Errc::WrongCount, "expected " + std::to_string(code.interleaving()) + " messages");
  InterleavedWord out;
  out.reserve(messages.size());
  for (const auto& msg : messages) out.push_back(encode(code.base(), msg));
  return out;
}

std::size_t fqm_rank(const FieldCtx& f, const InterleavedWord& e) {
  if (e.empty()) return 0;
  InterleavedWord a = e;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const FqmElem inv = f.inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      const FqmElem factor = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    ++r;
  }
  return r;
}

std::size_t stacked_rank_weight(const FieldCtx& f, const InterleavedWord& e) {
  if (e.empty()) return 0;
  const std::size_t m = f.m(), n = e.front().size();
  FqMatrix a(e.size() * m, n);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r) a(i * m + r, j) = e[i][j][r];
  return rank(f.base(), std::move(a));
}

namespace {

void check_shape(const InterleavedCode& code, const InterleavedWord& y) {
  if (y.size() != code.interleaving())
    throw Error(Errc::WrongCount, "expected " + std::to_string(code.interleaving()) + " rows");
  for (const auto& row : y)
    if (row.size() != code.length()) throw Error(Errc::InvalidArgument, "row length differs from the code length");
}

}  // namespace

DecodeOutcome idecode(const InterleavedCode& code, const InterleavedWord& y, std::size_t t,
                      const InterleavedDecodeOptions& opts) {
  check_shape(code, y);
  const std::size_t limit = max_radius(code);
  if (t > limit)
    throw Error(Errc::RadiusTooLarge, "t = " + std::to_string(t) + " exceeds the interleaved radius " + std::to_string(limit));
  DecodeOutcome out = detail::decode_rows(code.base(), y, t, opts.base);
  if (!opts.retry) return out;
  const std::size_t floor_radius = code.base().unique_radius();
  for (std::size_t s = t; !out.success() && s > floor_radius;) {
    --s;
    out = detail::decode_rows(code.base(), y, s, opts.base);
  }
  return out;
}

bool failure_predicate(std::size_t n, std::size_t k, std::size_t t, std::size_t zeta) {
  if (k > n || t >= n - k) throw Error(Errc::InvalidRegime, "the failure condition needs t < n - k");
  // zeta < t / (n - k - t), cleared of the denominator.
  return zeta * (n - k - t) < t;
}

std::size_t effective_equations(const InterleavedCode& code, const InterleavedWord& error) {
  return fqm_rank(code.field(), error) * code.length();
}

SystemMeasurement measure_system(const InterleavedCode& code, const InterleavedWord& y, std::size_t t) {
  check_shape(code, y);
  const FieldCtx& f = code.field();
  const GabidulinCode& base = code.base();
  if (!base.full_length()) throw Error(Errc::InvalidArgument, "system measurement is defined for n = m");
  const std::size_t n = base.length(), k = base.dimension(), m = f.m();
  if (t >= n - k) throw Error(Errc::InvalidRegime, "measurement needs t < n - k");

  std::vector<QPoly> interpolators;
  for (const auto& row : y) interpolators.push_back(interpolate(f, base.points(), row));
  const RhsSystem system(f, base.points(), k, t, interpolators);

  SystemMeasurement out;
  out.rows = system.matrix().rows();
  out.cols = system.matrix().cols();
  out.rank = rank(f.base(), system.matrix());
  out.kernel_dim = out.cols - out.rank;

  // Codeword rows add exactly k to the rank, so what remains is the error's rank.
  InterleavedWord stacked = y;
  for (std::size_t i = 0; i < k; ++i) {
    Word gi(n);
    for (std::size_t j = 0; j < n; ++j) gi[j] = f.frobenius(base.points()[j], i);
    stacked.push_back(std::move(gi));
  }
  out.inferred_zeta = fqm_rank(f, stacked) - k;
  out.effective_equations = out.inferred_zeta * n;
  const long long deficit =
      static_cast<long long>(t) + 1 - static_cast<long long>(out.inferred_zeta * (n - k - t));
  out.predicted_kernel_dim = m * static_cast<std::size_t>(std::max(1LL, deficit));
  return out;
}

}  // namespace rankcode
