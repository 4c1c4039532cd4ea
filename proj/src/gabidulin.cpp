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

#include "rankcode/gabidulin.hpp"

#include <string>
#include <utility>

#include "rankcode/error.hpp"
#include "rankcode/rhs_system.hpp"
#include "rankcode/support.hpp"

namespace rankcode {

std::string_view failure_reason_name(FailureReason r) noexcept {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::NoValidCandidate: return "no_valid_candidate";
    case FailureReason::UnderdeterminedSystem: return "underdetermined_system";
  }
  return "unknown";
}

GabidulinCode::GabidulinCode(FieldPtr field, Word g, std::size_t k)
    : field_(std::move(field)), g_(std::move(g)), k_(k) {
  if (!field_) throw Error(Errc::InvalidArgument, "null field");
  if (g_.empty()) throw Error(Errc::InvalidArgument, "evaluation vector is empty");
  if (k_ == 0) throw Error(Errc::InvalidArgument, "dimension must be at least 1");
  if (g_.size() > field_->m())
    throw Error(Errc::DependentEvaluationPoints, "more than m evaluation points cannot be independent");
  if (k_ > g_.size()) throw Error(Errc::DimensionTooLarge, "k exceeds the code length");
  if (rank_weight(*field_, g_) != g_.size())
    throw Error(Errc::DependentEvaluationPoints, "evaluation points are F_q-linearly dependent");
}

Word encode(const GabidulinCode& code, const QPoly& message) {
  if (message.qdeg() >= code.dimension())
    throw Error(Errc::DegreeTooLarge, "message q-degree must be below " + std::to_string(code.dimension()));
  return eval(code.field(), message, code.points());
}

namespace {

void check_radius(const GabidulinCode& code, std::size_t t) {
  if (t > code.unique_radius())
    throw Error(Errc::RadiusTooLarge,
                "t = " + std::to_string(t) + " exceeds floor((n-k)/2) = " + std::to_string(code.unique_radius()));
}

std::size_t stacked_rank(const FieldCtx& f, std::span<const Word> rows) {
  const std::size_t m = f.m();
  const std::size_t n = rows.front().size();
  FqMatrix a(rows.size() * m, n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r) a(i * m + r, j) = rows[i][j][r];
  return rank(f.base(), std::move(a));
}

}  // namespace

DecodeOutcome decode_full(const GabidulinCode& code, std::span<const FqmElem> y, std::optional<std::size_t> t,
                          const DecodeOptions& opts) {
  if (!code.full_length()) throw Error(Errc::InvalidArgument, "decode_full requires n = m");
  const std::size_t radius = t.value_or(code.unique_radius());
  check_radius(code, radius);
  const Word row(y.begin(), y.end());
  return detail::decode_rows(code, std::span<const Word>(&row, 1), radius, opts);
}

DecodeOutcome decode_general(const GabidulinCode& code, std::span<const FqmElem> y, std::optional<std::size_t> t,
                             const DecodeOptions& opts) {
  if (code.full_length()) return decode_full(code, y, t, opts);
  const std::size_t radius = t.value_or(code.unique_radius());
  check_radius(code, radius);
  const Word row(y.begin(), y.end());
  return detail::decode_rows(code, std::span<const Word>(&row, 1), radius, opts);
}

namespace detail {

DecodeOutcome decode_rows(const GabidulinCode& code, std::span<const Word> rows, std::size_t t,
                          const DecodeOptions& opts) {
  const FieldCtx& f = code.field();
  const std::size_t m = f.m(), n = code.length(), k = code.dimension();
  if (rows.empty()) throw Error(Errc::WrongCount, "no received rows");
  for (const auto& r : rows)
    if (r.size() != n) throw Error(Errc::InvalidArgument, "received row length differs from the code length");

  std::vector<QPoly> interpolators;
  interpolators.reserve(rows.size());
  for (const auto& r : rows) interpolators.push_back(interpolate(f, code.points(), r));

  // For n < m, Y o G with Im G = span(g) turns the problem into a length-m
  // one of dimension k + m - n whose error still has rank t.
  std::optional<QPoly> lift;
  Word full_points;
  std::size_t k_eff = k;
  if (n < m) {
    lift = co_interpolator(f, col_support(f, code.points()));
    for (auto& y : interpolators) y = compose(f, y, *lift);
    for (std::size_t l = 0; l < m; ++l) full_points.push_back(f.basis(l));
    k_eff = k + m - n;
  }
  const std::span<const FqmElem> points = lift ? std::span<const FqmElem>(full_points) : code.points();

  const RhsSystem system(f, points, k_eff, t, interpolators);
  if (system.matrix().rows() != system.expected_rows() || system.matrix().cols() != system.expected_cols())
    throw Error(Errc::InternalInconsistency, "linearised system has the wrong shape");
  const FqMatrix kernel = kernel_basis(f.base(), system.matrix());

  DecodeOutcome out;
  out.radius = t;
  out.stats.rows = system.matrix().rows();
  out.stats.cols = system.matrix().cols();
  out.stats.kernel_dim = kernel.rows();
  out.stats.rank = out.stats.cols - out.stats.kernel_dim;
  out.stats.length = points.size();
  out.stats.dimension = k_eff;

  const std::size_t count = kernel.rows();
  for (std::size_t idx = 0; idx < count; ++idx) {
    const std::size_t v = opts.reverse_candidates ? count - 1 - idx : idx;
    auto cand = system.split(kernel.row(v));
    if (cand.locator.is_zero()) {
      ++out.stats.zero_locator_vectors;
      for (const auto& num : cand.numerators)
        if (!num.is_zero()) {
          ++out.stats.zero_locator_nonzero_numerator;
          break;
        }
      continue;
    }
    ++out.stats.candidates_tried;

    std::vector<QPoly> messages;
    bool ok = true;
    for (const auto& num : cand.numerators) {
      auto [quot, rem] = rdiv(f, num, cand.locator);
      if (!rem.is_zero() || quot.qdeg() >= k_eff) {
        ok = false;
        break;
      }
      if (lift) {
        auto [msg, lift_rem] = rdiv(f, quot, *lift);
        if (!lift_rem.is_zero()) {
          ++out.stats.co_interpolator_remainders;
          ok = false;
          break;
        }
        quot = std::move(msg);
      }
      if (quot.qdeg() >= k) {
        ok = false;
        break;
      }
      messages.push_back(std::move(quot));
    }
    if (!ok) continue;

    std::vector<Word> codewords, errors;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Word c = encode(code, messages[i]);
      Word e(n);
      for (std::size_t j = 0; j < n; ++j) e[j] = f.sub(rows[i][j], c[j]);
      codewords.push_back(std::move(c));
      errors.push_back(std::move(e));
    }
    if (stacked_rank(f, errors) > t) continue;

    out.status = DecodeStatus::Success;
    out.reason = FailureReason::None;
    out.messages = std::move(messages);
    out.codewords = std::move(codewords);
    out.errors = std::move(errors);
    out.locator = std::move(cand.locator);
    return out;
  }
  out.reason = out.stats.kernel_dim > m ? FailureReason::UnderdeterminedSystem : FailureReason::NoValidCandidate;
  return out;
}

}  // namespace detail

}  // namespace rankcode
