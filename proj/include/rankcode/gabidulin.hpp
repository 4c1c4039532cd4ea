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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rankcode/field.hpp"
#include "rankcode/qpoly.hpp"

namespace rankcode {

using Word = std::vector<FqmElem>;

/// Gab_k(g): evaluations at g of all q-polynomials of q-degree < k.
class GabidulinCode {
 public:
  /// Throws Errc::DependentEvaluationPoints or Errc::DimensionTooLarge.
  GabidulinCode(FieldPtr field, Word g, std::size_t k);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::span<const FqmElem> points() const noexcept { return g_; }
  std::size_t length() const noexcept { return g_.size(); }
  std::size_t dimension() const noexcept { return k_; }
  std::size_t unique_radius() const noexcept { return (length() - k_) / 2; }
  bool full_length() const noexcept { return length() == field_->m(); }

 private:
  FieldPtr field_;
  Word g_;
  std::size_t k_;
};

/// Throws Errc::DegreeTooLarge when qdeg(message) >= k.
Word encode(const GabidulinCode& code, const QPoly& message);

enum class DecodeStatus { Success, Failure };

enum class FailureReason {
  None,
  /// Every kernel vector with a nonzero locator failed validation.
  NoValidCandidate,
  /// Same, and the kernel was larger than m: the system is underdetermined.
  UnderdeterminedSystem,
};

std::string_view failure_reason_name(FailureReason r) noexcept;

/// Shape and outcome counters of the linearised system actually solved.
/// `length` and `dimension` are those of the full-length problem, which
/// differ from the code's when n < m.
struct SystemStats {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t length = 0;
  std::size_t dimension = 0;
  std::size_t candidates_tried = 0;
  std::size_t zero_locator_vectors = 0;
  std::size_t zero_locator_nonzero_numerator = 0;
  std::size_t co_interpolator_remainders = 0;
};

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::Failure;
  FailureReason reason = FailureReason::NoValidCandidate;
  std::size_t radius = 0;
  /// One entry per interleaved row (a single one for plain Gabidulin decoding).
  std::vector<QPoly> messages;
  std::vector<Word> codewords;
  std::vector<Word> errors;
  QPoly locator;
  SystemStats stats;

  bool success() const noexcept { return status == DecodeStatus::Success; }
};

struct DecodeOptions {
  /// Try kernel vectors last-to-first instead of in echelon order.
  bool reverse_candidates = false;
};

/// Right-hand Berlekamp-Welch decoding for n = m. `t` defaults to the unique
/// radius; larger values throw Errc::RadiusTooLarge.
DecodeOutcome decode_full(const GabidulinCode& code, std::span<const FqmElem> y, std::optional<std::size_t> t = {},
                          const DecodeOptions& opts = {});

/// Any n <= m. For n < m the word is lifted through the co-interpolator of
/// span(g) to a length-m code of dimension k + m - n and decoded there.
DecodeOutcome decode_general(const GabidulinCode& code, std::span<const FqmElem> y,
                             std::optional<std::size_t> t = {}, const DecodeOptions& opts = {});

namespace detail {

/// Shared engine: decodes u received rows with one common locator. The
/// caller checks the radius.
DecodeOutcome decode_rows(const GabidulinCode& code, std::span<const Word> rows, std::size_t t,
                          const DecodeOptions& opts);

}  // namespace detail

}  // namespace rankcode
