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
#include <span>
#include <vector>

#include "rankcode/gabidulin.hpp"

namespace rankcode {

/// u x n matrix over F_{q^m}; row i belongs to the base code's ambient space.
using InterleavedWord = std::vector<Word>;

/// u codewords of one Gabidulin code sent in parallel.
class InterleavedCode {
 public:
  InterleavedCode(GabidulinCode base, std::size_t u);

  const GabidulinCode& base() const noexcept { return base_; }
  const FieldCtx& field() const noexcept { return base_.field(); }
  std::size_t interleaving() const noexcept { return u_; }
  std::size_t length() const noexcept { return base_.length(); }
  std::size_t dimension() const noexcept { return base_.dimension(); }

 private:
  GabidulinCode base_;
  std::size_t u_;
};

/// floor(u (n - k) / (u + 1))
std::size_t max_radius(const InterleavedCode& code) noexcept;

/// Row i is encode(base, messages[i]). Throws Errc::WrongCount / Errc::DegreeTooLarge.
InterleavedWord iencode(const InterleavedCode& code, std::span<const QPoly> messages);

/// Rank over F_{q^m} (not F_q) of a u x n matrix.
std::size_t fqm_rank(const FieldCtx& f, const InterleavedWord& e);

/// F_q-rank of the um x n expansion obtained by extending every row.
std::size_t stacked_rank_weight(const FieldCtx& f, const InterleavedWord& e);

struct InterleavedDecodeOptions {
  DecodeOptions base;
  /// On failure, retry with t - 1, t - 2, ... down to floor((n - k) / 2).
  bool retry = false;
};

/// Decodes all rows with one shared locator. Beyond floor((n-k)/2) a Failure
/// outcome is legitimate. Throws Errc::RadiusTooLarge for t > max_radius.
DecodeOutcome idecode(const InterleavedCode& code, const InterleavedWord& y, std::size_t t,
                      const InterleavedDecodeOptions& opts = {});

/// True iff zeta < t / (n - k - t). Throws Errc::InvalidRegime when t >= n - k.
bool failure_predicate(std::size_t n, std::size_t k, std::size_t t, std::size_t zeta);

/// zeta * n with zeta = fqm_rank(error).
std::size_t effective_equations(const InterleavedCode& code, const InterleavedWord& error);

/// Quantities measured on a received word alone.
struct SystemMeasurement {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  /// F_{q^m}-rank of the syndrome matrix Y H^T, equal to zeta whenever t < n - k + 1.
  std::size_t inferred_zeta = 0;
  std::size_t effective_equations = 0;
  /// Kernel dimension the equation count predicts: m * max(1, t + 1 - zeta (n - k - t)).
  std::size_t predicted_kernel_dim = 0;
};

/// Assembles the interleaved system for y at radius t (n = m only) and
/// reports its rank next to the equation count inferred from y.
SystemMeasurement measure_system(const InterleavedCode& code, const InterleavedWord& y, std::size_t t);

}  // namespace rankcode
