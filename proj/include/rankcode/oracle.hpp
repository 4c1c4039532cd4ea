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
#include <span>
#include <vector>

#include "rankcode/gabidulin.hpp"

namespace rankcode {

/// Largest search space the brute-force references accept.
inline constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 20;

/// Minimum rank weight over all nonzero codewords, by enumeration.
/// Throws Errc::TooLarge when q^{mk} > kOracleLimit.
std::size_t brute_min_distance(const GabidulinCode& code);

struct NearestCodeword {
  Word codeword;
  QPoly message;
  std::size_t distance = 0;
};

/// Every codeword at minimal rank distance from y, in enumeration order.
std::vector<NearestCodeword> brute_nearest(const GabidulinCode& code, std::span<const FqmElem> y);

/// The monic q-polynomial of q-degree <= t with compose(e, L) = 0, found by
/// trying all of them. Throws Errc::NoneFound, Errc::NotUnique, or
/// Errc::TooLarge when q^{m(t+1)} > kOracleLimit.
QPoly brute_right_annihilator(const FieldCtx& f, const QPoly& e, std::size_t t);

}  // namespace rankcode
