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
#include <vector>

#include "rankcode/field.hpp"

namespace rankcode {

/// Dense row-major matrix over F_q.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FqMatrix identity(std::size_t n) {
    FqMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
    return a;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FqElem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  FqElem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const FqElem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<FqElem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const FqElem> values);
  FqMatrix transpose() const;
  bool is_zero() const noexcept;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FqElem> data_;
};

/// In-place reduced row echelon form. Pivots are chosen as the first row with a
/// nonzero entry in the current column, so the result is deterministic and
/// canonical. Zero rows are dropped. Returns the pivot columns.
std::vector<std::size_t> row_reduce(const BaseField& f, FqMatrix& a);

std::size_t rank(const BaseField& f, FqMatrix a);

/// Rows form the reduced echelon basis of {x : A x = 0}. Empty (0 rows) when
/// the kernel is trivial.
FqMatrix kernel_basis(const BaseField& f, const FqMatrix& a);

/// Some x with A x = b, or nullopt when inconsistent.
std::optional<std::vector<FqElem>> solve(const BaseField& f, const FqMatrix& a, std::span<const FqElem> b);

FqMatrix multiply(const BaseField& f, const FqMatrix& a, const FqMatrix& b);
std::vector<FqElem> multiply(const BaseField& f, const FqMatrix& a, std::span<const FqElem> x);

/// Subspace of F_q^ambient held as its reduced echelon basis, so two equal
/// subspaces compare equal as data.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  /// Span of the rows of `generators`.
  static Subspace span(const BaseField& f, FqMatrix generators);
  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = FqMatrix::identity(ambient);
    return s;
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const FqMatrix& basis() const noexcept { return basis_; }

  bool contains(const BaseField& f, std::span<const FqElem> v) const;
  bool contains(const BaseField& f, const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  FqMatrix basis_;
};

}  // namespace rankcode
