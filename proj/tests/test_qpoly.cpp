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

#include <doctest.h>

#include "helpers.hpp"
#include "rankcode/error.hpp"
#include "rankcode/qpoly.hpp"
#include "rankcode/support.hpp"

using namespace rankcode;
using namespace rankcode::testing;

namespace {

QPoly X() { return QPoly::identity(); }

QPoly Xq(const FieldCtx& f, std::size_t i) { return QPoly::monomial(i, f.one()); }

bool same_map(const FieldCtx& f, const QPoly& a, const QPoly& b) { return matrix_of(f, a) == matrix_of(f, b); }

}  // namespace

TEST_CASE("zero polynomial has no degree") {
  const QPoly z;
  CHECK_FALSE(z.qdeg().has_value());
  CHECK(z.is_zero());
  CHECK(z.qdeg() < QDegree(0));
  auto f = FieldCtx::create(2, 4);
  CHECK(QPoly(std::vector<FqmElem>(3)).is_zero());
  CHECK(X().qdeg() == 0u);
  CHECK(reduce(*f, std::vector<FqmElem>{f->zero(), f->zero(), f->zero(), f->zero(), f->one()}) == X());
}

TEST_CASE("evaluation basics") {
  auto f = FieldCtx::create(3, 4);
  Rng rng(1);
  const QPoly frob_minus_id = add(*f, Xq(*f, 1), scale(*f, f->neg(f->one()), X()));
  for (FqElem c = 0; c < 3; ++c) CHECK(eval(*f, frob_minus_id, f->embed(c)).is_zero());
  auto f2 = FieldCtx::create(2, 4);
  const QPoly xq_plus_x = add(*f2, Xq(*f2, 1), X());
  CHECK(eval(*f2, xq_plus_x, f2->one()).is_zero());
  for (int it = 0; it < 500; ++it) {
    const QPoly p = random_qpoly(*f, 4, rng);
    const FqmElem x = random_element(*f, rng), y = random_element(*f, rng);
    const FqElem a = random_scalar(*f, rng), b = random_scalar(*f, rng);
    REQUIRE(eval(*f, X(), x) == x);
    REQUIRE(eval(*f, p, f->add(f->scale(a, x), f->scale(b, y))) ==
            f->add(f->scale(a, eval(*f, p, x)), f->scale(b, eval(*f, p, y))));
  }
}

TEST_CASE("composition") {
  auto f = FieldCtx::create(2, 2);
  CHECK(compose(*f, Xq(*f, 1), Xq(*f, 1)) == X());
  auto g = FieldCtx::create(3, 5);
  Rng rng(2);
  for (int it = 0; it < 500; ++it) {
    const QPoly p = random_qpoly(*g, 1 + rng.below(5), rng);
    const QPoly q = random_qpoly(*g, 1 + rng.below(5), rng);
    const QPoly r = random_qpoly(*g, 1 + rng.below(5), rng);
    const FqmElem x = random_element(*g, rng);
    REQUIRE(compose(*g, p, X()) == p);
    REQUIRE(compose(*g, X(), p) == p);
    REQUIRE(eval(*g, compose(*g, p, q), x) == eval(*g, p, eval(*g, q, x)));
    REQUIRE(compose(*g, compose(*g, p, q), r) == compose(*g, p, compose(*g, q, r)));
    REQUIRE(compose(*g, p, add(*g, q, r)) == add(*g, compose(*g, p, q), compose(*g, p, r)));
    REQUIRE(compose(*g, add(*g, p, q), r) == add(*g, compose(*g, p, r), compose(*g, q, r)));
    REQUIRE(compose(*g, p, q).size() <= g->m());
  }
}

TEST_CASE("right and left division") {
  auto f = FieldCtx::create(2, 4);
  {
    const QPoly p = Xq(*f, 2), d = add(*f, Xq(*f, 1), X());
    const auto [q, r] = rdiv(*f, p, d);
    CHECK(r.qdeg() < d.qdeg());
    CHECK(r.qdeg() == 0u);
    CHECK(add(*f, compose(*f, q, d), r) == p);
  }
  CHECK(code_of([&] { rdiv(*f, X(), QPoly()); }) == Errc::DivisionByZeroPoly);
  CHECK(code_of([&] { ldiv(*f, X(), QPoly()); }) == Errc::DivisionByZeroPoly);
  Rng rng(3);
  for (auto [q, m] : {std::pair{2u, 8ul}, {3u, 4ul}, {4u, 3ul}}) {
    auto g = FieldCtx::create(q, m);
    for (int it = 0; it < 500; ++it) {
      const QPoly p = random_qpoly(*g, 1 + rng.below(m), rng);
      const QPoly d = random_qpoly_exact(*g, rng.below(m), rng);
      REQUIRE(rdiv(*g, p, X()).quotient == p);
      REQUIRE(rdiv(*g, p, X()).remainder.is_zero());
      const auto rd = rdiv(*g, p, d);
      REQUIRE(rd.remainder.qdeg() < d.qdeg());
      REQUIRE(add(*g, compose(*g, rd.quotient, d), rd.remainder) == p);
      const auto ld = ldiv(*g, p, d);
      REQUIRE(ld.remainder.qdeg() < d.qdeg());
      REQUIRE(add(*g, compose(*g, d, ld.quotient), ld.remainder) == p);
      // Exact quotients come back unchanged.
      const std::size_t dl = *d.qdeg();
      if (dl + 1 < m) {
        const QPoly c = random_qpoly(*g, m - dl, rng);
        const auto exact = rdiv(*g, compose(*g, c, d), d);
        REQUIRE(exact.quotient == c);
        REQUIRE(exact.remainder.is_zero());
        const auto exact_left = ldiv(*g, compose(*g, d, c), d);
        REQUIRE(exact_left.quotient == c);
        REQUIRE(exact_left.remainder.is_zero());
      }
    }
  }
}

TEST_CASE("adjoint") {
  Rng rng(4);
  for (auto [q, m] : {std::pair{2u, 6ul}, {3u, 3ul}, {4u, 4ul}}) {
    auto f = FieldCtx::create(q, m);
    CHECK(adjoint(*f, X()) == X());
    CHECK(adjoint(*f, QPoly()).is_zero());
    for (int it = 0; it < 500; ++it) {
      const QPoly p = random_qpoly(*f, m, rng), r = random_qpoly(*f, m, rng);
      const FqmElem x = random_element(*f, rng), y = random_element(*f, rng);
      REQUIRE(adjoint(*f, adjoint(*f, p)) == p);
      REQUIRE(adjoint(*f, compose(*f, p, r)) == compose(*f, adjoint(*f, r), adjoint(*f, p)));
      REQUIRE(f->trace(f->mul(y, eval(*f, p, x))) == f->trace(f->mul(eval(*f, adjoint(*f, p), y), x)));
    }
    for (int it = 0; it < 100; ++it) {
      const QPoly p = random_rank_qpoly(*f, rng.below(m + 1), rng);
      const QPoly pv = adjoint(*f, p);
      REQUIRE(image_of(*f, pv) == subspace_perp(*f, kernel_of(*f, p)));
      REQUIRE(kernel_of(*f, pv) == subspace_perp(*f, image_of(*f, p)));
    }
  }
}

TEST_CASE("interpolation") {
  auto f = FieldCtx::create(2, 7);
  Rng rng(5);
  const FqmElem g = random_nonzero(*f, rng), v = random_element(*f, rng);
  const std::vector<FqmElem> pts{g}, vals{v};
  CHECK(interpolate(*f, pts, vals) == QPoly({f->div(v, g)}));
  for (int it = 0; it < 500; ++it) {
    const std::size_t n = 1 + rng.below(7);
    const Word points = random_independent(*f, n, rng);
    REQUIRE(interpolate(*f, points, Word(n)).is_zero());
    const QPoly p = random_qpoly(*f, n, rng);
    REQUIRE(interpolate(*f, points, eval(*f, p, points)) == p);
  }
  const Word dep{f->one(), f->basis(1), f->add(f->one(), f->basis(1))};
  CHECK(code_of([&] { interpolate(*f, dep, Word(3)); }) == Errc::DependentPoints);
  CHECK(code_of([&] { interpolate(*f, dep, Word(2)); }) == Errc::InvalidArgument);
}

TEST_CASE("subspace polynomials") {
  auto f = FieldCtx::create(2, 5);
  CHECK(subspace_poly(*f, Subspace(5)) == X());
  std::vector<FqElem> one_row{1, 0, 0, 0, 0};
  FqMatrix gen(0, 5);
  gen.append_row(one_row);
  CHECK(subspace_poly(*f, Subspace::span(f->base(), gen)) == add(*f, Xq(*f, 1), X()));
  CHECK(code_of([&] { subspace_poly(*f, Subspace::full(5)); }) == Errc::DimensionTooLarge);

  Rng rng(6);
  for (auto [q, m] : {std::pair{2u, 5ul}, {2u, 6ul}, {3u, 4ul}}) {
    auto g = FieldCtx::create(q, m);
    for (int it = 0; it < 40; ++it) {
      const std::size_t d = rng.below(m);
      const Subspace u = random_subspace(*g, d, rng);
      const QPoly s = subspace_poly(*g, u);
      REQUIRE(s.qdeg() == d);
      REQUIRE(s.leading() == g->one());
      // Exhaustive: vanishes exactly on U.
      std::size_t zeros = 0;
      for (std::uint64_t idx = 0, total = 1; idx < (total = [&] { std::uint64_t v = 1; for (std::size_t i = 0; i < m; ++i) v *= q; return v; }()); ++idx) {
        FqmElem x;
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < m; ++i, rest /= q) x[i] = static_cast<FqElem>(rest % q);
        const bool in_u = u.contains(g->base(), x.coords(m));
        REQUIRE(eval(*g, s, x).is_zero() == in_u);
        zeros += in_u;
      }
      std::uint64_t expect = 1;
      for (std::size_t i = 0; i < d; ++i) expect *= q;
      REQUIRE(zeros == expect);
    }
  }
}

TEST_CASE("co-interpolator") {
  auto f = FieldCtx::create(2, 4);
  const QPoly full = co_interpolator(*f, Subspace::full(4));
  CHECK(full.qdeg() == 0u);
  CHECK_FALSE(full.leading().is_zero());
  CHECK(code_of([&] { co_interpolator(*f, Subspace(4)); }) == Errc::InvalidArgument);

  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    const Subspace v = random_subspace(*f, 3, rng);
    const QPoly g = co_interpolator(*f, v);
    REQUIRE(g.qdeg() <= QDegree(1));
    std::vector<FqmElem> imgs;
    for (std::uint32_t idx = 0; idx < 16; ++idx) {
      std::vector<FqElem> c{FqElem(idx & 1), FqElem(idx >> 1 & 1), FqElem(idx >> 2 & 1), FqElem(idx >> 3)};
      imgs.push_back(eval(*f, g, f->element(c)));
    }
    REQUIRE(col_support(*f, imgs) == v);
  }
  for (auto [q, m] : {std::pair{2u, 10ul}, {3u, 5ul}}) {
    auto h = FieldCtx::create(q, m);
    for (int it = 0; it < 50; ++it) {
      const std::size_t n = 1 + rng.below(m);
      const Word pts = random_independent(*h, n, rng);
      const Subspace v = col_support(*h, pts);
      const QPoly g = co_interpolator(*h, v);
      REQUIRE(g.qdeg() <= QDegree(m - n));
      REQUIRE(image_of(*h, g) == v);
    }
  }
}

TEST_CASE("right annihilator") {
  auto f = FieldCtx::create(2, 5);
  CHECK(right_annihilator(*f, QPoly(), 0) == X());
  CHECK(code_of([&] { right_annihilator(*f, X(), 5); }) == Errc::RankMismatch);
  CHECK(code_of([&] { right_annihilator(*f, X(), 2); }) == Errc::RankMismatch);
  Rng rng(8);
  for (int it = 0; it < 200; ++it) {
    const std::size_t t = rng.below(5);
    const QPoly e = random_rank_qpoly(*f, t, rng);
    REQUIRE(qpoly_rank(*f, e) == t);
    const QPoly l = right_annihilator(*f, e, t);
    REQUIRE(l.qdeg() == t);
    REQUIRE(l.leading() == f->one());
    REQUIRE(compose(*f, e, l).is_zero());
    REQUIRE(image_of(*f, l) == kernel_of(*f, e));
  }
}

TEST_CASE("rank, matrix, kernel and image of a q-polynomial") {
  auto f = FieldCtx::create(3, 4);
  CHECK(qpoly_rank(*f, X()) == 4);
  CHECK(qpoly_rank(*f, QPoly()) == 0);
  Rng rng(9);
  for (int it = 0; it < 300; ++it) {
    const QPoly p = random_qpoly(*f, 1 + rng.below(4), rng);
    FqMatrix cols(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
      const FqmElem img = eval(*f, p, f->basis(j));
      for (std::size_t r = 0; r < 4; ++r) cols(r, j) = img[r];
    }
    REQUIRE(matrix_of(*f, p) == cols);
    REQUIRE(qpoly_rank(*f, p) == rank(f->base(), cols));
    REQUIRE(qpoly_rank(*f, p) + kernel_of(*f, p).dim() == 4);
    REQUIRE(image_of(*f, p).dim() == qpoly_rank(*f, p));
    if (!p.is_zero()) REQUIRE(kernel_of(*f, p).dim() <= *p.qdeg());
    REQUIRE(same_map(*f, p, p));
  }
}

TEST_CASE("monic normalisation") {
  auto f = FieldCtx::create(2, 6);
  Rng rng(10);
  for (int it = 0; it < 100; ++it) {
    const QPoly p = random_qpoly_exact(*f, rng.below(6), rng);
    const QPoly mp = make_monic(*f, p);
    REQUIRE(mp.leading() == f->one());
    REQUIRE(scale(*f, p.leading(), mp) == p);
  }
}
