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

#include "rankcode/rhs_system.hpp"

#include <algorithm>

#include "rankcode/error.hpp"

namespace rankcode {

RhsSystem::RhsSystem(const FieldCtx& f, std::span<const FqmElem> points, std::size_t k, std::size_t t,
                     std::span<const QPoly> interpolators)
    : field_(&f), m_(f.m()), u_(interpolators.size()), n_(points.size()), k_(k), t_(t) {
  if (u_ == 0) throw Error(Errc::WrongCount, "at least one received row is required");
  const std::size_t m = m_;
  const std::size_t num_len = k_ + t_;
  matrix_ = FqMatrix(u_ * n_ * m, m * (t_ + 1 + u_ * num_len));

  // frob[s][j] = p_s^{q^j}
  const std::size_t max_pow = std::max(t_ + 1, num_len);
  std::vector<std::vector<FqmElem>> frob(n_, std::vector<FqmElem>(max_pow));
  for (std::size_t s = 0; s < n_; ++s)
    for (std::size_t j = 0; j < max_pow; ++j) frob[s][j] = f.frobenius(points[s], j);

  std::vector<FqMatrix> y_maps;
  y_maps.reserve(u_);
  for (const auto& y : interpolators) y_maps.push_back(matrix_of(f, y));

  const auto& base = f.base();
  auto row_of = [&](std::size_t i, std::size_t s) { return (i * n_ + s) * m; };

  // Locator unknown (j, l) is coordinate l of L's coefficient j, i.e. L = a^l X^{q^j}:
  // it contributes Y_i(a^l p_s^{q^j}) to equation (i, s).
  for (std::size_t j = 0; j <= t_; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      const std::size_t col = j * m + l;
      for (std::size_t s = 0; s < n_; ++s) {
        const FqmElem w = f.mul(f.basis(l), frob[s][j]);
        for (std::size_t i = 0; i < u_; ++i) {
          const FqMatrix& ym = y_maps[i];
          const std::size_t r0 = row_of(i, s);
          for (std::size_t r = 0; r < m; ++r) {
            FqElem acc = 0;
            for (std::size_t c = 0; c < m; ++c)
              if (w[c] != 0) acc = base.add(acc, base.mul(ym(r, c), w[c]));
            matrix_(r0 + r, col) = acc;
          }
        }
      }
    }
  }
  // Numerator unknowns only touch their own row: -a^l p_s^{q^j}.
  for (std::size_t i = 0; i < u_; ++i) {
    const std::size_t col0 = m * (t_ + 1) + i * m * num_len;
    for (std::size_t j = 0; j < num_len; ++j) {
      for (std::size_t l = 0; l < m; ++l) {
        const std::size_t col = col0 + j * m + l;
        for (std::size_t s = 0; s < n_; ++s) {
          const FqmElem w = f.neg(f.mul(f.basis(l), frob[s][j]));
          const std::size_t r0 = row_of(i, s);
          for (std::size_t r = 0; r < m; ++r) matrix_(r0 + r, col) = w[r];
        }
      }
    }
  }
}

RhsSystem::Candidate RhsSystem::split(std::span<const FqElem> solution) const {
  if (solution.size() != matrix_.cols()) throw Error(Errc::InvalidArgument, "solution length mismatch");
  auto coeff = [&](std::size_t offset) { return field_->element(solution.subspan(offset, m_)); };
  Candidate c;
  std::vector<FqmElem> lambda(t_ + 1);
  for (std::size_t j = 0; j <= t_; ++j) lambda[j] = coeff(j * m_);
  c.locator = QPoly(std::move(lambda));
  const std::size_t num_len = k_ + t_;
  for (std::size_t i = 0; i < u_; ++i) {
    const std::size_t col0 = m_ * (t_ + 1) + i * m_ * num_len;
    std::vector<FqmElem> num(num_len);
    for (std::size_t j = 0; j < num_len; ++j) num[j] = coeff(col0 + j * m_);
    c.numerators.emplace_back(std::move(num));
  }
  return c;
}

}  // namespace rankcode
