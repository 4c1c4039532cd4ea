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

#include <span>
#include <vector>

#include "rankcode/field.hpp"
#include "rankcode/linalg.hpp"

namespace rankcode {

/// m x n matrix whose column j holds the coordinates of x_j.
FqMatrix ext(const FieldCtx& f, std::span<const FqmElem> x);

std::size_t rank_weight(const FieldCtx& f, std::span<const FqmElem> x);
inline std::size_t rank_distance(const FieldCtx& f, std::span<const FqmElem> x, std::span<const FqmElem> y) {
  std::vector<FqmElem> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = f.sub(x[i], y[i]);
  return rank_weight(f, d);
}

/// F_q-span of the entries, as a subspace of F_q^m (coordinates in the polynomial basis).
Subspace col_support(const FieldCtx& f, std::span<const FqmElem> x);
/// Row space of ext(x), a subspace of F_q^n.
Subspace row_support(const FieldCtx& f, std::span<const FqmElem> x);

/// Orthogonal complement of V (inside F_{q^m}) under (x, y) -> Tr(xy).
Subspace subspace_perp(const FieldCtx& f, const Subspace& v);

/// Elements represented by the basis rows of a subspace of F_q^m.
std::vector<FqmElem> elements_of(const FieldCtx& f, const Subspace& v);

}  // namespace rankcode
