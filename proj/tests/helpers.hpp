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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rankcode/channel.hpp"
#include "rankcode/error.hpp"
#include "rankcode/linalg.hpp"
#include "rankcode/qpoly.hpp"
#include "rankcode/support.hpp"

namespace rankcode::testing {

/// Code of the Error thrown by fn, or nullopt when nothing was thrown.
inline std::optional<Errc> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline FqElem random_scalar(const FieldCtx& f, Rng& rng) { return static_cast<FqElem>(rng.below(f.q())); }

inline FqmElem random_nonzero(const FieldCtx& f, Rng& rng) {
  for (;;) {
    FqmElem x = random_element(f, rng);
    if (!x.is_zero()) return x;
  }
}

/// Coefficients below `size` uniform, so the q-degree is at most size - 1.
inline QPoly random_qpoly(const FieldCtx& f, std::size_t size, Rng& rng) {
  std::vector<FqmElem> c(size);
  for (auto& x : c) x = random_element(f, rng);
  return QPoly(std::move(c));
}

/// Exactly q-degree d.
inline QPoly random_qpoly_exact(const FieldCtx& f, std::size_t d, Rng& rng) {
  std::vector<FqmElem> c(d + 1);
  for (auto& x : c) x = random_element(f, rng);
  c[d] = random_nonzero(f, rng);
  return QPoly(std::move(c));
}

inline Subspace random_subspace(const FieldCtx& f, std::size_t dim, Rng& rng) {
  return col_support(f, random_independent(f, dim, rng));
}

inline Word add_words(const FieldCtx& f, const Word& a, const Word& b) {
  Word out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = f.add(a[j], b[j]);
  return out;
}

/// q-polynomial of rank exactly t: a random bijection composed with the
/// subspace polynomial of a random (m - t)-dimensional kernel.
inline QPoly random_rank_qpoly(const FieldCtx& f, std::size_t t, Rng& rng) {
  if (t == 0) return QPoly();
  const QPoly s = subspace_poly(f, random_subspace(f, f.m() - t, rng));
  for (;;) {
    QPoly a = random_qpoly(f, f.m(), rng);
    if (qpoly_rank(f, a) == f.m()) return compose(f, a, s);
  }
}

}  // namespace rankcode::testing
