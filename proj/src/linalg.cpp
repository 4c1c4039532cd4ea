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

#include "rankcode/linalg.hpp"

#include <algorithm>
#include <utility>

#include "rankcode/error.hpp"

namespace rankcode {

namespace {

// dst[from..] += c * src[from..]
void axpy(const BaseField& f, std::span<FqElem> dst, std::span<const FqElem> src, FqElem c, std::size_t from) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  if (f.characteristic() == 2 && c == 1) {
    FqElem* d = dst.data();
    const FqElem* s = src.data();
    for (std::size_t j = from; j < n; ++j) d[j] ^= s[j];
    return;
  }
  for (std::size_t j = from; j < n; ++j)
    if (src[j] != 0) dst[j] = f.add(dst[j], f.mul(c, src[j]));
}

}  // namespace

void FqMatrix::append_row(std::span<const FqElem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error(Errc::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool FqMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](FqElem v) { return v == 0; });
}

std::vector<std::size_t> row_reduce(const BaseField& f, FqMatrix& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      auto rp = a.row(p), rr = a.row(r);
      std::swap_ranges(rp.begin() + c, rp.end(), rr.begin() + c);
    }
    auto pivot_row = a.row(r);
    if (pivot_row[c] != 1) {
      const FqElem inv = f.inv(pivot_row[c]);
      for (std::size_t j = c; j < cols; ++j) pivot_row[j] = f.mul(pivot_row[j], inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const FqElem v = a(i, c);
      if (v != 0) axpy(f, a.row(i), pivot_row, f.neg(v), c);
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < rows) {
    FqMatrix trimmed(r, cols);
    for (std::size_t i = 0; i < r; ++i) std::copy(a.row(i).begin(), a.row(i).end(), trimmed.row(i).begin());
    a = std::move(trimmed);
  }
  return pivots;
}

std::size_t rank(const BaseField& f, FqMatrix a) { return row_reduce(f, a).size(); }

FqMatrix kernel_basis(const BaseField& f, const FqMatrix& a) {
  FqMatrix rref = a;
  const auto pivots = row_reduce(f, rref);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  // One vector per free column: 1 there, minus the pivot-row entries.
  FqMatrix kernel(cols - pivots.size(), cols);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    auto v = kernel.row(k++);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rref(i, free));
  }
  row_reduce(f, kernel);
  return kernel;
}

std::optional<std::vector<FqElem>> solve(const BaseField& f, const FqMatrix& a, std::span<const FqElem> b) {
  if (b.size() != a.rows()) throw Error(Errc::InvalidArgument, "right-hand side length mismatch");
  FqMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(f, aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<FqElem> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

FqMatrix multiply(const BaseField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::InvalidArgument, "matrix shape mismatch");
  FqMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) axpy(f, c.row(i), b.row(l), a(i, l), 0);
  return c;
}

std::vector<FqElem> multiply(const BaseField& f, const FqMatrix& a, std::span<const FqElem> x) {
  if (a.cols() != x.size()) throw Error(Errc::InvalidArgument, "matrix shape mismatch");
  std::vector<FqElem> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = f.add(y[i], f.mul(a(i, j), x[j]));
  return y;
}

Subspace Subspace::span(const BaseField& f, FqMatrix generators) {
  Subspace s(generators.cols());
  row_reduce(f, generators);
  if (generators.rows() == 0) generators = FqMatrix(0, s.ambient_);
  s.basis_ = std::move(generators);
  return s;
}

bool Subspace::contains(const BaseField& f, std::span<const FqElem> v) const {
  if (v.size() != ambient_) throw Error(Errc::InvalidArgument, "vector length does not match ambient dimension");
  FqMatrix stacked = basis_;
  stacked.append_row(v);
  return rank(f, std::move(stacked)) == dim();
}

bool Subspace::contains(const BaseField& f, const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  FqMatrix stacked = basis_;
  for (std::size_t r = 0; r < other.dim(); ++r) stacked.append_row(other.basis().row(r));
  return rank(f, std::move(stacked)) == dim();
}

}  // namespace rankcode
