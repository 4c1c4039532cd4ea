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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace rankcode {

/// Element of the base field F_q, encoded as the integer whose base-p digits
/// are its coordinates over the prime field.
using FqElem = std::uint16_t;

inline constexpr std::size_t kMaxExtensionDegree = 32;
inline constexpr std::uint32_t kMaxBaseOrder = 1u << 16;

/// Finite field F_q with q = p^e <= 2^16, realised with exp/log tables.
class BaseField {
 public:
  /// `modulus` is a monic degree-e polynomial over F_p (little-endian). When
  /// omitted the lexicographically smallest irreducible one is chosen.
  explicit BaseField(std::uint32_t q, std::optional<std::vector<FqElem>> modulus = std::nullopt);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  const std::vector<FqElem>& modulus() const noexcept { return modulus_; }
  FqElem generator() const noexcept { return exp_[1]; }

  FqElem add(FqElem a, FqElem b) const noexcept {
    switch (add_mode_) {
      case AddMode::Xor:
        return static_cast<FqElem>(a ^ b);
      case AddMode::Mod: {
        std::uint32_t s = std::uint32_t{a} + b;
        return static_cast<FqElem>(s >= p_ ? s - p_ : s);
      }
      case AddMode::Digits:
        break;
    }
    return add_digits(a, b);
  }
  FqElem neg(FqElem a) const noexcept { return neg_[a]; }
  FqElem sub(FqElem a, FqElem b) const noexcept { return add(a, neg_[b]); }
  FqElem mul(FqElem a, FqElem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t{log_[a]} + log_[b]];
  }
  /// Precondition: a != 0.
  FqElem inv(FqElem a) const noexcept { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }
  FqElem div(FqElem a, FqElem b) const noexcept { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t e) const noexcept;

 private:
  enum class AddMode { Xor, Mod, Digits };

  FqElem add_digits(FqElem a, FqElem b) const noexcept;

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  AddMode add_mode_ = AddMode::Mod;
  std::vector<FqElem> modulus_;
  std::vector<FqElem> exp_;  // 2(q-1) entries
  std::vector<std::uint32_t> log_;
  std::vector<FqElem> neg_;
};

/// Element of F_{q^m}: coordinates in the polynomial basis 1, a, ..., a^{m-1}.
/// Coordinates at index >= m are always zero.
class FqmElem {
 public:
  constexpr FqmElem() = default;

  FqElem operator[](std::size_t i) const noexcept { return c_[i]; }
  FqElem& operator[](std::size_t i) noexcept { return c_[i]; }

  bool is_zero() const noexcept {
    for (FqElem v : c_)
      if (v != 0) return false;
    return true;
  }
  std::span<const FqElem> coords(std::size_t m) const noexcept { return {c_.data(), m}; }

  friend bool operator==(const FqmElem&, const FqmElem&) = default;
  friend auto operator<=>(const FqmElem&, const FqmElem&) = default;

 private:
  std::array<FqElem, kMaxExtensionDegree> c_{};
};

/// Immutable description of the tower F_q < F_{q^m}. Shared by everything
/// built on top of it; all member functions are const and thread-safe.
class FieldCtx {
 public:
  /// Throws Errc::NotPrimePower, Errc::ReducibleModulus, Errc::InvalidArgument.
  static std::shared_ptr<const FieldCtx> create(std::uint32_t q, std::size_t m,
                                                std::optional<std::vector<FqElem>> base_modulus = std::nullopt,
                                                std::optional<std::vector<FqElem>> ext_modulus = std::nullopt);

  FieldCtx(std::uint32_t q, std::size_t m, std::optional<std::vector<FqElem>> base_modulus,
           std::optional<std::vector<FqElem>> ext_modulus);

  const BaseField& base() const noexcept { return base_; }
  std::uint32_t q() const noexcept { return base_.order(); }
  std::size_t m() const noexcept { return m_; }
  /// Monic degree-m polynomial over F_q, little-endian.
  const std::vector<FqElem>& ext_modulus() const noexcept { return ext_modulus_; }

  FqmElem zero() const noexcept { return {}; }
  FqmElem one() const noexcept { return basis(0); }
  /// a^i for i < m.
  FqmElem basis(std::size_t i) const noexcept {
    FqmElem x;
    x[i] = 1;
    return x;
  }
  FqmElem embed(FqElem c) const noexcept {
    FqmElem x;
    x[0] = c;
    return x;
  }
  /// Throws Errc::InvalidArgument on the wrong length or out-of-range digits.
  FqmElem element(std::span<const FqElem> coords) const;
  std::vector<FqElem> to_vector(const FqmElem& x) const { return {x.coords(m_).begin(), x.coords(m_).end()}; }
  bool is_base(const FqmElem& x) const noexcept;

  FqmElem add(const FqmElem& a, const FqmElem& b) const noexcept;
  FqmElem sub(const FqmElem& a, const FqmElem& b) const noexcept;
  FqmElem neg(const FqmElem& a) const noexcept;
  FqmElem scale(FqElem c, const FqmElem& a) const noexcept;
  FqmElem mul(const FqmElem& a, const FqmElem& b) const noexcept;
  /// Throws Errc::InvalidArgument for zero.
  FqmElem inv(const FqmElem& a) const;
  FqmElem div(const FqmElem& a, const FqmElem& b) const { return mul(a, inv(b)); }
  FqmElem pow(const FqmElem& a, std::uint64_t e) const noexcept;

  /// x^{q^i}, i taken mod m.
  FqmElem frobenius(const FqmElem& x, std::size_t i) const noexcept;
  /// x^{q^{-i}}.
  FqmElem inverse_frobenius(const FqmElem& x, std::size_t i) const noexcept {
    return frobenius(x, m_ - (i % m_));
  }
  FqElem trace(const FqmElem& x) const noexcept;

 private:
  BaseField base_;
  std::size_t m_ = 0;
  std::vector<FqElem> ext_modulus_;
  // frob_[i] is the m x m matrix of x -> x^{q^i}, column j = image of a^j.
  std::vector<std::vector<FqmElem>> frob_;
  std::vector<FqElem> basis_trace_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

}  // namespace rankcode
