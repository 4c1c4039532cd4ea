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

#include "upoly.hpp"

#include <algorithm>
#include <utility>

#include "rankcode/error.hpp"

namespace rankcode::detail {

UPoly sub(const BaseField& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    FqElem x = i < a.size() ? a[i] : 0;
    FqElem y = i < b.size() ? b[i] : 0;
    r[i] = f.sub(x, y);
  }
  trim(r);
  return r;
}

UPoly mul(const BaseField& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

UPoly rem(const BaseField& f, UPoly a, const UPoly& b) {
  trim(a);
  const int db = degree(b);
  const FqElem lead_inv = f.inv(b.back());
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const FqElem c = f.mul(a.back(), lead_inv);
    for (int i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

UPoly gcd(const BaseField& f, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UPoly powmod(const BaseField& f, UPoly a, std::uint64_t e, const UPoly& modulus) {
  UPoly result{1};
  a = rem(f, std::move(a), modulus);
  while (e > 0) {
    if (e & 1) result = rem(f, mul(f, result, a), modulus);
    a = rem(f, mul(f, a, a), modulus);
    e >>= 1;
  }
  return result;
}

UPoly invmod(const BaseField& f, const UPoly& a, const UPoly& modulus) {
  // Extended Euclid tracking only the coefficient of a.
  UPoly r0 = modulus, r1 = rem(f, a, modulus);
  UPoly s0{}, s1{1};
  while (!r1.empty()) {
    UPoly q;
    UPoly r = r0;
    const FqElem lead_inv = f.inv(r1.back());
    q.assign(std::max<int>(degree(r0) - degree(r1) + 1, 1), 0);
    while (degree(r) >= degree(r1)) {
      const int shift = degree(r) - degree(r1);
      const FqElem c = f.mul(r.back(), lead_inv);
      q[shift] = c;
      for (int i = 0; i <= degree(r1); ++i) r[shift + i] = f.sub(r[shift + i], f.mul(c, r1[i]));
      trim(r);
    }
    trim(q);
    UPoly s = sub(f, s0, mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw Error(Errc::InvalidArgument, "element is not invertible modulo the modulus");
  const FqElem c = f.inv(r0[0]);
  for (auto& v : s0) v = f.mul(v, c);
  trim(s0);
  return s0;
}

bool is_irreducible(const BaseField& f, UPoly p) {
  trim(p);
  const int d = degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  const UPoly x{0, 1};
  UPoly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = powmod(f, h, f.order(), p);
    UPoly g = gcd(f, p, sub(f, h, x));
    if (degree(g) > 0) return false;
  }
  return true;
}

UPoly smallest_irreducible(const BaseField& f, std::size_t deg) {
  const std::uint64_t q = f.order();
  UPoly candidate(deg + 1, 0);
  candidate[deg] = 1;
  for (;;) {
    if (is_irreducible(f, candidate)) return candidate;
    // Odometer increment over the lower coefficients.
    std::size_t i = 0;
    while (i < deg) {
      if (candidate[i] + 1u < q) {
        ++candidate[i];
        break;
      }
      candidate[i] = 0;
      ++i;
    }
    if (i == deg) break;
  }
  throw Error(Errc::InternalInconsistency, "no irreducible polynomial found");
}

}  // namespace rankcode::detail
