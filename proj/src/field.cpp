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

#include "rankcode/field.hpp"

#include <functional>
#include <string>
#include <utility>

#include "rankcode/error.hpp"
#include "upoly.hpp"

namespace rankcode {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::DependentPoints: return "DependentPoints";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::DependentEvaluationPoints: return "DependentEvaluationPoints";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::RadiusTooLarge: return "RadiusTooLarge";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::WrongCount: return "WrongCount";
    case Errc::InvalidRegime: return "InvalidRegime";
    case Errc::RankInfeasible: return "RankInfeasible";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NoneFound: return "NoneFound";
    case Errc::NotUnique: return "NotUnique";
  }
  return "Unknown";
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

detail::UPoly digits_of(FqElem a, std::uint32_t p, std::uint32_t e) {
  detail::UPoly d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = static_cast<FqElem>(a % p);
    a = static_cast<FqElem>(a / p);
  }
  detail::trim(d);
  return d;
}

FqElem from_digits(const detail::UPoly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return static_cast<FqElem>(v);
}

}  // namespace

BaseField::BaseField(std::uint32_t q, std::optional<std::vector<FqElem>> modulus) : q_(q) {
  if (q < 2) throw Error(Errc::NotPrimePower, "field order must be at least 2");
  if (q > kMaxBaseOrder) throw Error(Errc::InvalidArgument, "base field order above 2^16 is not supported");
  p_ = prime_factors(q).front();
  e_ = 0;
  for (std::uint32_t r = q; r > 1; r /= p_) {
    if (r % p_ != 0) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    ++e_;
  }
  add_mode_ = p_ == 2 ? AddMode::Xor : (e_ == 1 ? AddMode::Mod : AddMode::Digits);

  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t v = 0, scale = 1, r = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
      std::uint32_t digit = r % p_;
      r /= p_;
      v += ((p_ - digit) % p_) * scale;
      scale *= p_;
    }
    neg_[a] = static_cast<FqElem>(v);
  }

  // Multiplication used only while building the tables.
  std::function<FqElem(FqElem, FqElem)> slow_mul;
  std::optional<BaseField> prime;
  if (e_ == 1) {
    if (modulus && !(modulus->size() == 2 && (*modulus)[0] == 0 && (*modulus)[1] == 1))
      throw Error(Errc::InvalidArgument, "prime field modulus must be X");
    modulus_ = {0, 1};
    slow_mul = [p = p_](FqElem a, FqElem b) { return static_cast<FqElem>((std::uint32_t{a} * b) % p); };
  } else {
    prime.emplace(p_);
    if (modulus) {
      detail::UPoly mod = *modulus;
      detail::trim(mod);
      if (mod.size() != e_ + 1 || mod.back() != 1)
        throw Error(Errc::InvalidArgument, "base modulus must be monic of degree " + std::to_string(e_));
      for (FqElem c : mod)
        if (c >= p_) throw Error(Errc::InvalidArgument, "base modulus coefficient out of range");
      if (!detail::is_irreducible(*prime, mod)) throw Error(Errc::ReducibleModulus, "base modulus is reducible");
      modulus_ = std::move(mod);
    } else {
      modulus_ = detail::smallest_irreducible(*prime, e_);
    }
    slow_mul = [this, &prime](FqElem a, FqElem b) {
      auto prod = detail::rem(*prime, detail::mul(*prime, digits_of(a, p_, e_), digits_of(b, p_, e_)), modulus_);
      return from_digits(prod, p_);
    };
  }

  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](FqElem a, std::uint32_t e) {
    FqElem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  FqElem gen = 0;
  for (std::uint32_t c = 1; c < q_ && gen == 0; ++c) {
    bool primitive = true;
    for (std::uint32_t f : factors)
      if (slow_pow(static_cast<FqElem>(c), order / f) == 1) primitive = false;
    if (primitive) gen = static_cast<FqElem>(c);
  }
  if (gen == 0) gen = 1;  // q = 2

  exp_.resize(2 * std::size_t{order});
  log_.assign(q_, 0);
  FqElem x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    exp_[i + order] = x;
    log_[x] = i;
    x = slow_mul(x, gen);
  }
}

FqElem BaseField::add_digits(FqElem a, FqElem b) const noexcept {
  std::uint32_t v = 0, scale = 1;
  std::uint32_t x = a, y = b;
  for (std::uint32_t i = 0; i < e_; ++i) {
    v += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<FqElem>(v);
}

FqElem BaseField::pow(FqElem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q_ - 1;
  return exp_[(std::uint64_t{log_[a]} * (e % order)) % order];
}

std::shared_ptr<const FieldCtx> FieldCtx::create(std::uint32_t q, std::size_t m,
                                                 std::optional<std::vector<FqElem>> base_modulus,
                                                 std::optional<std::vector<FqElem>> ext_modulus) {
  return std::make_shared<const FieldCtx>(q, m, std::move(base_modulus), std::move(ext_modulus));
}

FieldCtx::FieldCtx(std::uint32_t q, std::size_t m, std::optional<std::vector<FqElem>> base_modulus,
                   std::optional<std::vector<FqElem>> ext_modulus)
    : base_(q, std::move(base_modulus)), m_(m) {
  if (m < 1 || m > kMaxExtensionDegree)
    throw Error(Errc::InvalidArgument, "extension degree must lie in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  if (ext_modulus) {
    detail::UPoly mod = *ext_modulus;
    detail::trim(mod);
    if (mod.size() != m + 1) throw Error(Errc::InvalidArgument, "extension modulus must have degree m");
    for (FqElem c : mod)
      if (c >= q) throw Error(Errc::InvalidArgument, "extension modulus coefficient out of range");
    const FqElem lead_inv = base_.inv(mod.back());
    for (auto& c : mod) c = base_.mul(c, lead_inv);
    if (!detail::is_irreducible(base_, mod)) throw Error(Errc::ReducibleModulus, "extension modulus is reducible");
    ext_modulus_ = std::move(mod);
  } else {
    ext_modulus_ = detail::smallest_irreducible(base_, m);
  }

  frob_.assign(m_, std::vector<FqmElem>(m_));
  for (std::size_t j = 0; j < m_; ++j) frob_[0][j] = basis(j);
  if (m_ > 1) {
    for (std::size_t j = 0; j < m_; ++j) frob_[1][j] = pow(basis(j), q);
    for (std::size_t i = 2; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) frob_[i][j] = frobenius(frob_[i - 1][j], 1);
  }
  basis_trace_.assign(m_, 0);
  for (std::size_t j = 0; j < m_; ++j) {
    FqmElem s;
    for (std::size_t i = 0; i < m_; ++i) s = add(s, frob_[i][j]);
    if (!is_base(s)) throw Error(Errc::InternalInconsistency, "trace left the base field");
    basis_trace_[j] = s[0];
  }
}

FqmElem FieldCtx::element(std::span<const FqElem> coords) const {
  if (coords.size() != m_) throw Error(Errc::InvalidArgument, "expected " + std::to_string(m_) + " coordinates");
  FqmElem x;
  for (std::size_t i = 0; i < m_; ++i) {
    if (coords[i] >= q()) throw Error(Errc::InvalidArgument, "coordinate out of range for F_q");
    x[i] = coords[i];
  }
  return x;
}

bool FieldCtx::is_base(const FqmElem& x) const noexcept {
  for (std::size_t i = 1; i < m_; ++i)
    if (x[i] != 0) return false;
  return true;
}

FqmElem FieldCtx::add(const FqmElem& a, const FqmElem& b) const noexcept {
  FqmElem r;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

FqmElem FieldCtx::sub(const FqmElem& a, const FqmElem& b) const noexcept {
  FqmElem r;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

FqmElem FieldCtx::neg(const FqmElem& a) const noexcept {
  FqmElem r;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.neg(a[i]);
  return r;
}

FqmElem FieldCtx::scale(FqElem c, const FqmElem& a) const noexcept {
  FqmElem r;
  if (c == 0) return r;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.mul(c, a[i]);
  return r;
}

FqmElem FieldCtx::mul(const FqmElem& a, const FqmElem& b) const noexcept {
  if (q() == 2 && m_ <= 32) {
    std::uint64_t x = 0, y = 0, mod = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      x |= std::uint64_t{a[i]} << i;
      y |= std::uint64_t{b[i]} << i;
      mod |= std::uint64_t{ext_modulus_[i]} << i;
    }
    std::uint64_t prod = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if ((x >> i) & 1) prod ^= y << i;
    for (std::size_t d = 2 * m_ - 1; d-- > m_;)
      if ((prod >> d) & 1) prod ^= (std::uint64_t{1} << d) ^ (mod << (d - m_));
    FqmElem r;
    for (std::size_t i = 0; i < m_; ++i) r[i] = static_cast<FqElem>((prod >> i) & 1);
    return r;
  }
  std::array<FqElem, 2 * kMaxExtensionDegree> prod{};
  for (std::size_t i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  for (std::size_t d = 2 * m_ - 1; d-- > m_;) {
    const FqElem c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < m_; ++i) prod[d - m_ + i] = base_.sub(prod[d - m_ + i], base_.mul(c, ext_modulus_[i]));
  }
  FqmElem r;
  for (std::size_t i = 0; i < m_; ++i) r[i] = prod[i];
  return r;
}

FqmElem FieldCtx::inv(const FqmElem& a) const {
  if (a.is_zero()) throw Error(Errc::InvalidArgument, "zero has no inverse");
  detail::UPoly poly(a.coords(m_).begin(), a.coords(m_).end());
  detail::trim(poly);
  const auto r = detail::invmod(base_, poly, ext_modulus_);
  FqmElem x;
  for (std::size_t i = 0; i < r.size(); ++i) x[i] = r[i];
  return x;
}

FqmElem FieldCtx::pow(const FqmElem& a, std::uint64_t e) const noexcept {
  FqmElem result = one(), base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FqmElem FieldCtx::frobenius(const FqmElem& x, std::size_t i) const noexcept {
  i %= m_;
  if (i == 0) return x;
  const auto& cols = frob_[i];
  FqmElem r;
  for (std::size_t j = 0; j < m_; ++j) {
    if (x[j] == 0) continue;
    r = add(r, scale(x[j], cols[j]));
  }
  return r;
}

FqElem FieldCtx::trace(const FqmElem& x) const noexcept {
  FqElem t = 0;
  for (std::size_t j = 0; j < m_; ++j) t = base_.add(t, base_.mul(x[j], basis_trace_[j]));
  return t;
}

}  // namespace rankcode
