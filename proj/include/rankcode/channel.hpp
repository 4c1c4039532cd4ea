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
#include <optional>

#include "rankcode/gabidulin.hpp"
#include "rankcode/interleaved.hpp"

namespace rankcode {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for stream `index` of a run seeded with `seed`. Trial i of a run always
/// gets derive_seed(seed, i), whichever worker executes it.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

/// SplitMix64: a counter (Weyl sequence) pushed through mix64. Not
/// cryptographic; outputs are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }
  /// Uniform-ish value in [0, bound) by multiply-shift.
  std::uint64_t below(std::uint64_t bound) noexcept {
    __extension__ using Wide = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<Wide>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

struct ErrorSpec {
  std::size_t t = 0;
  std::optional<std::size_t> zeta;
  std::uint64_t seed = 0;
};

FqmElem random_element(const FieldCtx& f, Rng& rng);
/// `count` F_q-independent elements of F_{q^m}, sampled one at a time.
Word random_independent(const FieldCtx& f, std::size_t count, Rng& rng);
/// rows x cols matrix over F_q of full row rank (rows <= cols).
FqMatrix random_full_rank(const BaseField& f, std::size_t rows, std::size_t cols, Rng& rng);

/// e = a B with a of F_q-rank t and B a t x n F_q-matrix of rank t, so rank_weight(e) = t.
/// Throws Errc::RankInfeasible for t > min(n, m).
Word random_error_vector(const FieldCtx& f, std::size_t n, std::size_t t, Rng& rng);
Word random_error_vector(const FieldCtx& f, std::size_t n, std::size_t t, std::uint64_t seed);

/// E = A B: B a t x n F_q-matrix of rank t (the shared row support) and A a
/// u x t matrix over F_{q^m} of F_{q^m}-rank zeta whose columns are
/// F_q-independent, so E has F_q-rank t and F_{q^m}-rank zeta. `zeta`
/// defaults to min(u, t). Throws Errc::RankInfeasible.
InterleavedWord random_burst_error(const FieldCtx& f, std::size_t u, std::size_t n, std::size_t t,
                                   std::optional<std::size_t> zeta, Rng& rng);
InterleavedWord random_burst_error(const FieldCtx& f, std::size_t u, std::size_t n, const ErrorSpec& spec);

GabidulinCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, Rng& rng);
GabidulinCode random_code(const FieldPtr& f, std::size_t n, std::size_t k, std::uint64_t seed);

/// Uniform q-polynomial of q-degree < k.
QPoly random_message(const FieldCtx& f, std::size_t k, Rng& rng);
QPoly random_message(const FieldCtx& f, std::size_t k, std::uint64_t seed);

}  // namespace rankcode
