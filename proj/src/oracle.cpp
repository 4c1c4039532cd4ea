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

#include "rankcode/oracle.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <string>

#include "rankcode/error.hpp"
#include "rankcode/support.hpp"

namespace rankcode {

namespace {

// q^exponent, or nullopt once it passes kOracleLimit.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t exponent) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    v *= q;
    if (v > kOracleLimit) return std::nullopt;
  }
  return v;
}

// A generator of the F_p-span: message coefficients plus the codeword.
struct Generator {
  Word message;
  Word codeword;
};

// Visits every codeword once, updating incrementally: raising one F_p digit
// adds its generator, and p additions wrap the digit back to zero.
void for_each_codeword(const GabidulinCode& code, const std::function<void(const Word&, const Word&)>& visit) {
  const FieldCtx& f = code.field();
  const std::size_t m = f.m(), k = code.dimension(), n = code.length();
  const std::uint32_t p = f.base().characteristic();
  const std::size_t e = f.base().degree();
  if (!bounded_power(f.q(), m * k))
    throw Error(Errc::TooLarge, "q^(mk) exceeds the enumeration limit of 2^20");

  std::vector<Generator> gens;
  FqElem beta = 1;
  for (std::size_t d = 0; d < e; ++d, beta = static_cast<FqElem>(beta * p)) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < m; ++l) {
        Generator g{Word(k), {}};
        g.message[i] = f.scale(beta, f.basis(l));
        std::vector<FqmElem> msg(g.message);
        g.codeword = encode(code, QPoly(std::move(msg)));
        gens.push_back(std::move(g));
      }
  }

  Word msg(k), cw(n);
  std::vector<std::uint32_t> digits(gens.size(), 0);
  visit(msg, cw);
  for (;;) {
    std::size_t pos = 0;
    for (; pos < gens.size(); ++pos) {
      for (std::size_t i = 0; i < k; ++i) msg[i] = f.add(msg[i], gens[pos].message[i]);
      for (std::size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], gens[pos].codeword[j]);
      if (++digits[pos] < p) break;
      digits[pos] = 0;
    }
    if (pos == gens.size()) return;
    visit(msg, cw);
  }
}

}  // namespace

std::size_t brute_min_distance(const GabidulinCode& code) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const FieldCtx& f = code.field();
  for_each_codeword(code, [&](const Word&, const Word& cw) {
    const std::size_t w = rank_weight(f, cw);
    if (w > 0 && w < best) best = w;
  });
  return best;
}

std::vector<NearestCodeword> brute_nearest(const GabidulinCode& code, std::span<const FqmElem> y) {
  if (y.size() != code.length()) throw Error(Errc::InvalidArgument, "word length differs from the code length");
  const FieldCtx& f = code.field();
  std::vector<NearestCodeword> out;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_codeword(code, [&](const Word& msg, const Word& cw) {
    const std::size_t d = rank_distance(f, y, cw);
    if (d > best) return;
    if (d < best) {
      best = d;
      out.clear();
    }
    out.push_back({cw, QPoly(msg), d});
  });
  return out;
}

QPoly brute_right_annihilator(const FieldCtx& f, const QPoly& e, std::size_t t) {
  const std::size_t m = f.m();
  if (t >= m || !bounded_power(f.q(), m * (t + 1)))
    throw Error(Errc::TooLarge, "q^(m(t+1)) exceeds the enumeration limit of 2^20");
  const std::uint64_t field_size = *bounded_power(f.q(), m);

  auto element_at = [&](std::uint64_t index) {
    FqmElem x;
    for (std::size_t i = 0; i < m; ++i, index /= f.q()) x[i] = static_cast<FqElem>(index % f.q());
    return x;
  };
  // L annihilates from the right iff e vanishes on the image of L.
  auto annihilates = [&](const QPoly& l) {
    for (std::size_t j = 0; j < m; ++j)
      if (!eval(f, e, eval(f, l, f.basis(j))).is_zero()) return false;
    return true;
  };

  std::optional<QPoly> found;
  for (std::size_t d = 0; d <= t; ++d) {
    std::vector<std::uint64_t> idx(d, 0);
    for (;;) {
      std::vector<FqmElem> c(d + 1);
      for (std::size_t i = 0; i < d; ++i) c[i] = element_at(idx[i]);
      c[d] = f.one();
      QPoly l(std::move(c));
      if (annihilates(l)) {
        if (found) throw Error(Errc::NotUnique, "several monic annihilators of q-degree <= " + std::to_string(t));
        found = std::move(l);
      }
      std::size_t pos = 0;
      while (pos < d && ++idx[pos] == field_size) idx[pos++] = 0;
      if (pos == d) break;
    }
  }
  if (!found) throw Error(Errc::NoneFound, "no monic annihilator of q-degree <= " + std::to_string(t));
  return *found;
}

}  // namespace rankcode
