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

// Ordinary univariate polynomials over a BaseField, little-endian. Only used
// to pick and verify moduli, so nothing here is performance sensitive.

#pragma once

#include <cstdint>
#include <vector>

#include "rankcode/field.hpp"

namespace rankcode::detail {

using UPoly = std::vector<FqElem>;

inline void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly sub(const BaseField& f, const UPoly& a, const UPoly& b);
UPoly mul(const BaseField& f, const UPoly& a, const UPoly& b);
/// Remainder of a modulo b; b must be nonzero.
UPoly rem(const BaseField& f, UPoly a, const UPoly& b);
UPoly gcd(const BaseField& f, UPoly a, UPoly b);
/// a^e mod modulus.
UPoly powmod(const BaseField& f, UPoly a, std::uint64_t e, const UPoly& modulus);
/// Inverse of a modulo an irreducible modulus; a must be nonzero mod it.
UPoly invmod(const BaseField& f, const UPoly& a, const UPoly& modulus);

/// Ben-Or test: gcd(p, X^{q^i} - X) = 1 for all i <= deg/2.
bool is_irreducible(const BaseField& f, UPoly p);

/// Monic irreducible of the given degree whose lower coefficients, read as
/// base-q digits (constant term least significant), form the smallest integer.
UPoly smallest_irreducible(const BaseField& f, std::size_t degree);

}  // namespace rankcode::detail
