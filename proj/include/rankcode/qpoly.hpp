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
#include "rankcode/linalg.hpp"

namespace rankcode {

/// q-degree of a q-polynomial. The zero polynomial has no degree (nullopt),
/// which orders below every engaged value, matching the usual -infinity.
using QDegree = std::optional<std::size_t>;

/// q-polynomial sum_i c_i X^{q^i}. Coefficient i multiplies X^{q^i}; trailing
/// zero coefficients are never stored. Ring operations return classes modulo
/// X^{q^m} - X, i.e. at most m coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<FqmElem> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The identity polynomial X.
  static QPoly identity() {
    FqmElem one;
    one[0] = 1;
    return QPoly({one});
  }
  static QPoly monomial(std::size_t i, const FqmElem& c) {
    std::vector<FqmElem> v(i + 1);
    v[i] = c;
    return QPoly(std::move(v));
  }

  QDegree qdeg() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }
  FqmElem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : FqmElem{}; }
  const FqmElem& leading() const noexcept { return c_.back(); }
  std::span<const FqmElem> coeffs() const noexcept { return c_; }

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<FqmElem> c_;
};

struct DivResult {
  QPoly quotient;
  QPoly remainder;
};

/// Folds exponents modulo m (X^{q^m} = X).
QPoly reduce(const FieldCtx& f, std::span<const FqmElem> raw);

QPoly add(const FieldCtx& f, const QPoly& a, const QPoly& b);
QPoly sub(const FieldCtx& f, const QPoly& a, const QPoly& b);
/// Left scalar multiple c*P, i.e. (cX) o P.
QPoly scale(const FieldCtx& f, const FqmElem& c, const QPoly& p);
/// Divides by the leading coefficient. Zero stays zero.
QPoly make_monic(const FieldCtx& f, const QPoly& p);

FqmElem eval(const FieldCtx& f, const QPoly& p, const FqmElem& x);
std::vector<FqmElem> eval(const FieldCtx& f, const QPoly& p, std::span<const FqmElem> xs);

/// P o Q modulo X^{q^m} - X.
QPoly compose(const FieldCtx& f, const QPoly& p, const QPoly& q);

/// P = Q o D + R with qdeg R < qdeg D. Throws Errc::DivisionByZeroPoly.
DivResult rdiv(const FieldCtx& f, const QPoly& p, const QPoly& d);
/// P = D o Q + R with qdeg R < qdeg D. Throws Errc::DivisionByZeroPoly.
DivResult ldiv(const FieldCtx& f, const QPoly& p, const QPoly& d);

/// Adjoint for the trace form: Tr(y P(x)) = Tr(P^v(y) x).
QPoly adjoint(const FieldCtx& f, const QPoly& p);

/// Unique P of q-degree < n with P(points[i]) = values[i]. Built incrementally
/// from the annihilator of the points seen so far; throws Errc::DependentPoints.
QPoly interpolate(const FieldCtx& f, std::span<const FqmElem> points, std::span<const FqmElem> values);

/// Monic P of q-degree dim U whose kernel is exactly U.
QPoly subspace_poly(const FieldCtx& f, const Subspace& u);

/// G of q-degree <= m - dim V whose image is V (dim V >= 1):
/// adjoint(X^{q^d} o subspace_poly(V^perp)).
QPoly co_interpolator(const FieldCtx& f, const Subspace& v);

/// Unique monic L of q-degree t with E o L = 0, for E of rank exactly t < m.
/// Throws Errc::RankMismatch otherwise.
QPoly right_annihilator(const FieldCtx& f, const QPoly& e, std::size_t t);

/// Matrix of the induced F_q-linear map; column j is the image of a^j.
FqMatrix matrix_of(const FieldCtx& f, const QPoly& p);
std::size_t qpoly_rank(const FieldCtx& f, const QPoly& p);
Subspace kernel_of(const FieldCtx& f, const QPoly& p);
Subspace image_of(const FieldCtx& f, const QPoly& p);

}  // namespace rankcode
