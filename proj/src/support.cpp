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

#include "rankcode/support.hpp"

#include "rankcode/error.hpp"

namespace rankcode {

FqMatrix ext(const FieldCtx& f, std::span<const FqmElem> x) {
  const std::size_t m = f.m();
  FqMatrix a(m, x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) a(i, j) = x[j][i];
  return a;
}

std::size_t rank_weight(const FieldCtx& f, std::span<const FqmElem> x) { return rank(f.base(), ext(f, x)); }

Subspace col_support(const FieldCtx& f, std::span<const FqmElem> x) {
  FqMatrix gens(x.size(), f.m());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t i = 0; i < f.m(); ++i) gens(j, i) = x[j][i];
  return Subspace::span(f.base(), std::move(gens));
}

Subspace row_support(const FieldCtx& f, std::span<const FqmElem> x) { return Subspace::span(f.base(), ext(f, x)); }

Subspace subspace_perp(const FieldCtx& f, const Subspace& v) {
  const std::size_t m = f.m();
  if (v.ambient_dim() != m) throw Error(Errc::InvalidArgument, "subspace must live in F_q^m");
  // Row i of the form matrix is y -> Tr(v_i y) in coordinates.
  FqMatrix form(v.dim(), m);
  const auto elems = elements_of(f, v);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) form(i, j) = f.trace(f.mul(elems[i], f.basis(j)));
  if (v.dim() == 0) return Subspace::full(m);
  return Subspace::span(f.base(), kernel_basis(f.base(), form));
}

std::vector<FqmElem> elements_of(const FieldCtx& f, const Subspace& v) {
  std::vector<FqmElem> out;
  out.reserve(v.dim());
  for (std::size_t r = 0; r < v.dim(); ++r) out.push_back(f.element(v.basis().row(r)));
  return out;
}

}  // namespace rankcode
