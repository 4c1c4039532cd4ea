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

#include "rankcode/qpoly.hpp"

#include <algorithm>
#include <string>

#include "rankcode/error.hpp"
#include "rankcode/support.hpp"

namespace rankcode {

namespace {

std::vector<FqmElem> reduced_coeffs(const FieldCtx& f, const QPoly& p) {
  std::vector<FqmElem> out(std::min(p.size(), f.m()));
  for (std::size_t i = 0; i < p.size(); ++i) out[i % f.m()] = f.add(out[i % f.m()], p.coeff(i));
  return out;
}

}  // namespace

QPoly reduce(const FieldCtx& f, std::span<const FqmElem> raw) {
  const std::size_t m = f.m();
  std::vector<FqmElem> out(std::min(raw.size(), m));
  for (std::size_t i = 0; i < raw.size(); ++i) out[i % m] = f.add(out[i % m], raw[i]);
  return QPoly(std::move(out));
}

QPoly add(const FieldCtx& f, const QPoly& a, const QPoly& b) {
  std::vector<FqmElem> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return reduce(f, out);
}

QPoly sub(const FieldCtx& f, const QPoly& a, const QPoly& b) {
  std::vector<FqmElem> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return reduce(f, out);
}

QPoly scale(const FieldCtx& f, const FqmElem& c, const QPoly& p) {
  std::vector<FqmElem> out(p.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(c, p.coeff(i));
  return reduce(f, out);
}

QPoly make_monic(const FieldCtx& f, const QPoly& p) {
  if (p.is_zero()) return p;
  return scale(f, f.inv(p.leading()), p);
}

FqmElem eval(const FieldCtx& f, const QPoly& p, const FqmElem& x) {
  FqmElem acc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const FqmElem& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    acc = f.add(acc, f.mul(c, f.frobenius(x, i)));
  }
  return acc;
}

std::vector<FqmElem> eval(const FieldCtx& f, const QPoly& p, std::span<const FqmElem> xs) {
  std::vector<FqmElem> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(eval(f, p, x));
  return out;
}

QPoly compose(const FieldCtx& f, const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  // (sum p_i X^{q^i}) o (sum q_j X^{q^j}) = sum p_i q_j^{q^i} X^{q^{i+j}}
  const std::size_t m = f.m();
  std::vector<FqmElem> out(std::min(p.size() + q.size() - 1, m));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const FqmElem& pi = p.coeffs()[i];
    if (pi.is_zero()) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const FqmElem& qj = q.coeffs()[j];
      if (qj.is_zero()) continue;
      auto& slot = out[(i + j) % m];
      slot = f.add(slot, f.mul(pi, f.frobenius(qj, i)));
    }
  }
  return QPoly(std::move(out));
}

DivResult rdiv(const FieldCtx& f, const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw Error(Errc::DivisionByZeroPoly, "right division by the zero q-polynomial");
  std::vector<FqmElem> r = reduced_coeffs(f, p);
  const std::size_t db = *d.qdeg();
  if (r.size() <= db) return {QPoly{}, QPoly(std::move(r))};
  std::vector<FqmElem> quot(r.size() - db);
  for (std::size_t a = r.size(); a-- > db;) {
    if (r[a].is_zero()) continue;
    // (c X^{q^s}) o D has leading term c d_b^{q^s} X^{q^{s+b}}.
    const std::size_t s = a - db;
    const FqmElem c = f.div(r[a], f.frobenius(d.leading(), s));
    quot[s] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      const FqmElem& dj = d.coeffs()[j];
      if (dj.is_zero()) continue;
      r[s + j] = f.sub(r[s + j], f.mul(c, f.frobenius(dj, s)));
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(r))};
}

DivResult ldiv(const FieldCtx& f, const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw Error(Errc::DivisionByZeroPoly, "left division by the zero q-polynomial");
  std::vector<FqmElem> r = reduced_coeffs(f, p);
  const std::size_t db = *d.qdeg();
  if (r.size() <= db) return {QPoly{}, QPoly(std::move(r))};
  std::vector<FqmElem> quot(r.size() - db);
  for (std::size_t a = r.size(); a-- > db;) {
    if (r[a].is_zero()) continue;
    // D o (c X^{q^s}) has leading term d_b c^{q^b} X^{q^{s+b}}.
    const std::size_t s = a - db;
    const FqmElem c = f.inverse_frobenius(f.div(r[a], d.leading()), db);
    quot[s] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      const FqmElem& dj = d.coeffs()[j];
      if (dj.is_zero()) continue;
      r[s + j] = f.sub(r[s + j], f.mul(dj, f.frobenius(c, j)));
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(r))};
}

QPoly adjoint(const FieldCtx& f, const QPoly& p) {
  const std::size_t m = f.m();
  const auto c = reduced_coeffs(f, p);
  std::vector<FqmElem> out(m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t j = (m - i) % m;
    out[j] = f.add(out[j], f.frobenius(c[i], j));
  }
  return QPoly(std::move(out));
}

namespace {

// (X^q - s^{q-1} X) o S: vanishes on ker S and on the point where S equals s.
QPoly extend_annihilator(const FieldCtx& f, const QPoly& s_poly, const FqmElem& s) {
  const FqmElem lower = f.neg(f.pow(s, f.q() - 1));
  return compose(f, QPoly({lower, f.one()}), s_poly);
}

}  // namespace

QPoly interpolate(const FieldCtx& f, std::span<const FqmElem> points, std::span<const FqmElem> values) {
  if (points.size() != values.size()) throw Error(Errc::InvalidArgument, "points and values differ in length");
  if (points.empty()) throw Error(Errc::InvalidArgument, "interpolation needs at least one point");
  if (points.size() > f.m()) throw Error(Errc::DependentPoints, "more than m points cannot be independent");
  QPoly annihilator = QPoly::identity();
  QPoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const FqmElem s = eval(f, annihilator, points[i]);
    if (s.is_zero()) throw Error(Errc::DependentPoints, "point " + std::to_string(i) + " lies in the span of the previous ones");
    const FqmElem c = f.div(f.sub(values[i], eval(f, result, points[i])), s);
    result = add(f, result, scale(f, c, annihilator));
    if (i + 1 < points.size()) annihilator = extend_annihilator(f, annihilator, s);
  }
  return result;
}

QPoly subspace_poly(const FieldCtx& f, const Subspace& u) {
  if (u.ambient_dim() != f.m()) throw Error(Errc::InvalidArgument, "subspace must live in F_q^m");
  // X^{q^m} - X is the zero class, so the whole field has no monic representative.
  if (u.dim() == f.m()) throw Error(Errc::DimensionTooLarge, "subspace polynomial of F_{q^m} vanishes modulo X^{q^m} - X");
  QPoly s = QPoly::identity();
  for (const auto& b : elements_of(f, u)) s = extend_annihilator(f, s, eval(f, s, b));
  return s;
}

QPoly co_interpolator(const FieldCtx& f, const Subspace& v) {
  const std::size_t d = v.dim();
  if (d == 0) throw Error(Errc::InvalidArgument, "co-interpolator needs a nonzero subspace");
  const QPoly g0 = subspace_poly(f, subspace_perp(f, v));
  const QPoly g1 = compose(f, QPoly::monomial(d, f.one()), g0);
  return adjoint(f, g1);
}

QPoly right_annihilator(const FieldCtx& f, const QPoly& e, std::size_t t) {
  const std::size_t r = qpoly_rank(f, e);
  if (r != t) throw Error(Errc::RankMismatch, "map has rank " + std::to_string(r) + ", expected " + std::to_string(t));
  if (t >= f.m()) throw Error(Errc::RankMismatch, "a bijective map has no nonzero right annihilator");
  const QPoly g = co_interpolator(f, kernel_of(f, e));
  if (g.qdeg() != t) throw Error(Errc::InternalInconsistency, "annihilator has unexpected q-degree");
  // A left scalar would move the image off ker E. Substituting X -> b X keeps
  // the image, and b^{q^t} = 1 / lead makes the result monic.
  const FqmElem b = f.inverse_frobenius(f.inv(g.leading()), t);
  QPoly lambda = compose(f, g, QPoly({b}));
  if (lambda.leading() != f.one()) throw Error(Errc::InternalInconsistency, "annihilator normalisation failed");
  return lambda;
}

FqMatrix matrix_of(const FieldCtx& f, const QPoly& p) {
  const std::size_t m = f.m();
  FqMatrix a(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const FqmElem y = eval(f, p, f.basis(j));
    for (std::size_t i = 0; i < m; ++i) a(i, j) = y[i];
  }
  return a;
}

std::size_t qpoly_rank(const FieldCtx& f, const QPoly& p) { return rank(f.base(), matrix_of(f, p)); }

Subspace kernel_of(const FieldCtx& f, const QPoly& p) {
  return Subspace::span(f.base(), kernel_basis(f.base(), matrix_of(f, p)));
}

Subspace image_of(const FieldCtx& f, const QPoly& p) {
  return Subspace::span(f.base(), matrix_of(f, p).transpose());
}

}  // namespace rankcode
