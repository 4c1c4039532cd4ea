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

#include "rankcode/field.hpp"
#include "rankcode/linalg.hpp"
#include "rankcode/qpoly.hpp"

namespace rankcode {

/// Linearised key equations for u received rows sharing one locator:
///
///   (Y_i o L)(p_s) = N_i(p_s),  qdeg L <= t,  qdeg N_i < k + t.
///
/// Composition with the unknown L is only F_q-linear, so every F_{q^m}
/// unknown is expanded into its m coordinates. Columns hold L's coefficients
/// first, then N_1 ... N_u; rows are (row i, point s, coordinate r).
class RhsSystem {
 public:
  struct Candidate {
    QPoly locator;
    std::vector<QPoly> numerators;
  };

  RhsSystem(const FieldCtx& f, std::span<const FqmElem> points, std::size_t k, std::size_t t,
            std::span<const QPoly> interpolators);

  const FqMatrix& matrix() const noexcept { return matrix_; }
  std::size_t interleaving() const noexcept { return u_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return k_; }
  std::size_t radius() const noexcept { return t_; }

  /// u * n * m
  std::size_t expected_rows() const noexcept { return u_ * n_ * m_; }
  /// m * (t + 1 + u (k + t))
  std::size_t expected_cols() const noexcept { return m_ * (t_ + 1 + u_ * (k_ + t_)); }

  Candidate split(std::span<const FqElem> solution) const;

 private:
  const FieldCtx* field_;
  std::size_t m_, u_, n_, k_, t_;
  FqMatrix matrix_;
};

}  // namespace rankcode
