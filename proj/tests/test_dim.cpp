// Copyright 2026 The isharp authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "dim.hpp"

using namespace isharp;

namespace {

const FieldLabel kC{0};
const FieldLabel kF2{2};

Slope sl(std::int64_t p, std::int64_t q) { return make_slope(p, q); }

FieldInvariants inv(FieldLabel f, std::int64_t nu, std::int64_t r, Shape s) {
  return make_invariants(f, nu, r, s);
}

}  // namespace

TEST_CASE("field label parsing") {
  CHECK(parse_field("C").characteristic == 0);
  CHECK(parse_field("char0").characteristic == 0);
  CHECK(parse_field("F2").characteristic == 2);
  CHECK(parse_field("Fp:7").characteristic == 7);
  CHECK(parse_field("F3").characteristic == 3);
  CHECK_THROWS_AS(parse_field("Fp:6"), UnknownField);
  CHECK_THROWS_AS(parse_field("Q"), UnknownField);
  CHECK_THROWS_AS(make_field(4), InvalidArgument);
}

TEST_CASE("invariant validation") {
  CHECK_THROWS_AS(make_invariants(kC, 3, 2, Shape::V), InvalidArgument);   // r < |nu|
  CHECK_THROWS_AS(make_invariants(kC, 0, 1, Shape::V), InvalidArgument);   // parity
  CHECK_THROWS_AS(make_invariants(kC, 1, 3, Shape::W), InvalidArgument);   // W odd nu
  CHECK(make_invariants(kC, 1, 3, Shape::Unknown).shape == Shape::V);      // normalize
  CHECK(nu_plus(inv(kF2, 4, 4, Shape::W)) == 5);
  CHECK(nu_minus(inv(kF2, 4, 4, Shape::W)) == 3);
  CHECK(nu_plus(inv(kC, 1, 1, Shape::V)) == 1);
}

TEST_CASE("dim_sharp pinned values") {
  // T(2,3) over F2: S^3_5 is the lens space L(5,4).
  auto t23 = inv(kF2, 4, 4, Shape::W);
  CHECK(dim_sharp(t23, sl(5, 1), Bundle::Trivial).value == 5);
  CHECK_FALSE(dim_sharp(t23, sl(5, 1), Bundle::Trivial).exceptional);

  // Unknot: everything is a lens space.
  auto unknot = inv(kC, 0, 0, Shape::W);
  CHECK(dim_sharp(unknot, sl(7, 3), Bundle::Trivial).value == 7);

  // Figure-eight over C at 1/2: 2*2 + |1 - 0| = 5.
  auto fig8 = inv(kC, 0, 2, Shape::W);
  CHECK(dim_sharp(fig8, sl(1, 2), Bundle::Trivial).value == 5);

  // Figure-eight exceptional slope 0: W puts r on the meridian class.
  auto d0 = dim_sharp(fig8, sl(0, 1), Bundle::Trivial);
  CHECK(d0.value == 4);
  CHECK(d0.exceptional);
  CHECK(dim_sharp(fig8, sl(0, 1), Bundle::Meridian).value == 2);

  // Slope infinity is S^3.
  CHECK(dim_sharp(fig8, slope_infinity(), Bundle::Trivial).value == 1);
  CHECK(dim_sharp(fig8, slope_infinity(), Bundle::Meridian).value == 1);
}

TEST_CASE("dim_sharp requires shape only at the exceptional slope") {
  auto unknown = inv(kC, 0, 2, Shape::Unknown);
  CHECK(dim_sharp(unknown, sl(1, 2), Bundle::Trivial).value == 5);
  CHECK(dim_sharp(unknown, sl(1, 1), Bundle::Trivial).value == 3);
  CHECK_THROWS_AS(dim_sharp(unknown, sl(0, 1), Bundle::Trivial), ShapeRequired);

  // Odd nu never hits the exceptional case.
  auto odd = inv(kC, 1, 1, Shape::Unknown);
  CHECK(dim_sharp(odd, sl(1, 1), Bundle::Trivial).value == 1);
}

TEST_CASE("dim_sequence pinned values") {
  auto unknot = inv(kC, 0, 0, Shape::W);
  CHECK(dim_sequence(unknot, -3, 3, Bundle::Trivial) ==
        std::vector<std::int64_t>{3, 2, 1, 2, 1, 2, 3});
  CHECK(dim_sequence(unknot, -3, 3, Bundle::Meridian) ==
        std::vector<std::int64_t>{3, 2, 1, 0, 1, 2, 3});

  auto t23 = inv(kF2, 4, 4, Shape::W);
  CHECK(dim_sequence(t23, 3, 7, Bundle::Trivial) ==
        std::vector<std::int64_t>{5, 6, 5, 6, 7});
}

TEST_CASE("adjacent integer dimensions differ by one") {
  for (auto shape : {Shape::V, Shape::W}) {
    for (std::int64_t nu = -6; nu <= 6; ++nu) {
      if (shape == Shape::W && nu % 2 != 0) continue;
      for (std::int64_t r = std::abs(nu); r <= std::abs(nu) + 6; r += 2) {
        auto iv = inv(kC, nu, r, shape);
        for (Bundle b : {Bundle::Trivial, Bundle::Meridian}) {
          auto seq = dim_sequence(iv, nu - 5, nu + 5, b);
          for (std::size_t i = 1; i < seq.size(); ++i) {
            CHECK(std::abs(seq[i] - seq[i - 1]) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("euler characteristic constraint at unit-test scale") {
  // dim >= |p| and dim = |p| mod 2, both bundle classes.
  auto cases = {inv(kF2, 4, 4, Shape::W), inv(kC, -1, 3, Shape::V),
                inv(kC, 0, 2, Shape::W), inv(kC, 1, 1, Shape::V)};
  for (const auto& iv : cases) {
    for (std::int64_t q = 1; q <= 8; ++q) {
      for (std::int64_t p = -40; p <= 40; ++p) {
        if (std::gcd(std::abs(p), q) != 1) continue;
        for (Bundle b : {Bundle::Trivial, Bundle::Meridian}) {
          auto d = dim_sharp(iv, sl(p, q), b).value;
          CHECK(d >= std::abs(p));
          CHECK((d - std::abs(p)) % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("bundle independence at odd numerators") {
  auto iv = inv(kF2, 4, 4, Shape::W);
  for (std::int64_t q = 1; q <= 6; ++q) {
    for (std::int64_t p = -25; p <= 25; ++p) {
      if (p % 2 == 0 || std::gcd(std::abs(p), q) != 1) continue;
      CHECK(dim_sharp(iv, sl(p, q), Bundle::Trivial).value ==
            dim_sharp(iv, sl(p, q), Bundle::Meridian).value);
    }
  }
}

TEST_CASE("mirror") {
  auto left = inv(kC, -1, 1, Shape::V);
  auto right = mirror(left);
  CHECK(right.nu == 1);
  CHECK(right.r == 1);
  CHECK(right.shape == Shape::V);

  auto fig8 = inv(kC, 0, 2, Shape::W);
  CHECK(mirror(fig8) == fig8);
  CHECK(mirror(mirror(left)) == left);

  // Mirror identity: dim(mirror, p/q) = dim(inv, -p/q), both bundles.
  for (std::int64_t q = 1; q <= 5; ++q) {
    for (std::int64_t p = -20; p <= 20; ++p) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      for (Bundle b : {Bundle::Trivial, Bundle::Meridian}) {
        CHECK(dim_sharp(mirror(left), sl(p, q), b).value ==
              dim_sharp(left, sl(-p, q), b).value);
      }
    }
  }
}

TEST_CASE("lspace_slopes") {
  auto t23c = inv(kC, 1, 1, Shape::V);
  auto d = lspace_slopes(t23c);
  CHECK(d.exists);
  CHECK(d.threshold == 1);
  CHECK_FALSE(d.exceptional_excluded);

  auto fig8 = inv(kC, 0, 2, Shape::W);
  CHECK_FALSE(lspace_slopes(fig8).exists);

  auto t23f2 = inv(kF2, 4, 4, Shape::W);
  d = lspace_slopes(t23f2);
  CHECK(d.exists);
  CHECK(d.threshold == 4);
  CHECK(d.exceptional_excluded);
  // The excluded slope really fails dim = |p| on the trivial class.
  CHECK(dim_sharp(t23f2, sl(4, 1), Bundle::Trivial).value == 6);
  // All other slopes >= threshold give |p|.
  for (std::int64_t q = 1; q <= 6; ++q) {
    for (std::int64_t p = 4 * q; p <= 60; ++p) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      if (p == 4 && q == 1) continue;
      CHECK(dim_sharp(t23f2, sl(p, q), Bundle::Trivial).value == p);
    }
  }
}

TEST_CASE("infer_invariants pinned examples") {
  auto unknot = inv(kC, 0, 0, Shape::W);
  auto got = infer_invariants(-3, dim_sequence(unknot, -3, 3, Bundle::Trivial),
                              dim_sequence(unknot, -3, 3, Bundle::Meridian), kC);
  CHECK(got == unknot);

  auto v = inv(kC, -1, 3, Shape::V);
  got = infer_invariants(-6, dim_sequence(v, -6, 4, Bundle::Trivial),
                         dim_sequence(v, -6, 4, Bundle::Meridian), kC);
  CHECK(got == v);

  // Generalized W pattern: oscillating trivial sequence with plateau wider
  // than the admissible window; must be rejected, not fitted.
  std::vector<std::int64_t> triv{4, 3, 2, 3, 2, 3, 4};
  std::vector<std::int64_t> mer{4, 3, 4, 3, 4, 3, 4};
  CHECK_THROWS_AS(infer_invariants(-2, triv, mer, kC), NotRealizable);
  CHECK_THROWS_WITH_AS(infer_invariants(-2, triv, mer, kC),
                       doctest::Contains("generalized W"), NotRealizable);
}

TEST_CASE("infer_invariants error taxonomy") {
  auto v = inv(kC, 0, 2, Shape::V);
  // Bare-minimum window: model fits but cannot be certified.
  CHECK_THROWS_AS(infer_invariants(-1, dim_sequence(v, -1, 1, Bundle::Trivial),
                                   dim_sequence(v, -1, 1, Bundle::Meridian), kC),
                  InsufficientRange);
  // W needs one more step per side than V.
  auto w = inv(kC, 0, 2, Shape::W);
  CHECK_THROWS_AS(infer_invariants(-2, dim_sequence(w, -2, 2, Bundle::Trivial),
                                   dim_sequence(w, -2, 2, Bundle::Meridian), kC),
                  InsufficientRange);
  CHECK(infer_invariants(-3, dim_sequence(w, -3, 3, Bundle::Trivial),
                         dim_sequence(w, -3, 3, Bundle::Meridian), kC) == w);

  // Step violation.
  CHECK_THROWS_AS(infer_invariants(0, {3, 5, 7}, {3, 5, 7}, kC), NotRealizable);
  // Bundle classes disagreeing at an odd slope.
  CHECK_THROWS_AS(infer_invariants(1, {3, 4, 5}, {5, 4, 5}, kC), NotRealizable);
}

TEST_CASE("inference roundtrip on random invariants") {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<std::int64_t> nu_dist(-20, 20);
  std::uniform_int_distribution<std::int64_t> h_dist(0, 20);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t nu = nu_dist(rng);
    std::int64_t r = std::abs(nu) + 2 * h_dist(rng);
    Shape shape = (nu % 2 == 0 && (rng() & 1)) ? Shape::W : Shape::V;
    auto iv = inv(kC, nu, r, shape);
    auto got = infer_invariants(nu - 4, dim_sequence(iv, nu - 4, nu + 4, Bundle::Trivial),
                                dim_sequence(iv, nu - 4, nu + 4, Bundle::Meridian), kC);
    CHECK(got == iv);
  }
}
