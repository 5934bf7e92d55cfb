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

#include <random>

#include "grading.hpp"

using namespace isharp;

namespace {
const std::array<KClass, 3> kClasses = {KClass::Positive, KClass::Zero,
                                        KClass::Negative};
}

TEST_CASE("shift_table verbatim rows") {
  CHECK(shift_table(KClass::Positive, Route::Trivial).s ==
        std::array<int, 6>{0, 0, 3, 0, 2, 1});
  CHECK(shift_table(KClass::Zero, Route::Trivial).s ==
        std::array<int, 6>{3, 2, 2, 2, 2, 3});
  CHECK(shift_table(KClass::Negative, Route::Trivial).s ==
        std::array<int, 6>{0, 1, 2, 0, 3, 0});
  CHECK(shift_table(KClass::Positive, Route::Meridian).s ==
        std::array<int, 6>{0, 2, 1, 0, 0, 3});
  CHECK(shift_table(KClass::Zero, Route::Meridian).s ==
        std::array<int, 6>{3, 0, 0, 2, 0, 1});
  CHECK(shift_table(KClass::Negative, Route::Meridian).s ==
        std::array<int, 6>{0, 3, 0, 0, 1, 2});
}

TEST_CASE("shift_table congruences") {
  for (KClass k : kClasses) {
    auto i = shift_table(k, Route::Trivial).s;
    auto j = shift_table(k, Route::Meridian).s;
    // Each triangle's shifts sum to -1 mod 4.
    CHECK((i[0] + i[1] + i[2]) % 4 == 3);
    CHECK((i[3] + i[4] + i[5]) % 4 == 3);
    CHECK((j[0] + j[1] + j[2]) % 4 == 3);
    CHECK((j[3] + j[4] + j[5]) % 4 == 3);
    // Meridian rows differ from trivial rows by 2 on the maps into H(inf).
    CHECK(j[0] == i[0]);
    CHECK(j[1] == (i[1] + 2) % 4);
    CHECK(j[3] == i[3]);
    CHECK(j[4] == (i[4] + 2) % 4);
  }
}

TEST_CASE("spin flag shifts the meridian rows by a global 2") {
  for (KClass k : kClasses) {
    auto j = shift_table(k, Route::Meridian, false).s;
    auto j0 = shift_table(k, Route::Meridian, true).s;
    CHECK(j0[0] == (j[0] + 2) % 4);
    CHECK(j0[1] == (j[1] + 2) % 4);
    CHECK(j0[2] == j[2]);
    CHECK(j0[3] == (j[3] + 2) % 4);
    CHECK(j0[4] == j[4]);
    CHECK(j0[5] == (j[5] + 2) % 4);
    // The congruences survive the regrading.
    CHECK((j0[0] + j0[1] + j0[2]) % 4 == 3);
    CHECK((j0[3] + j0[4] + j0[5]) % 4 == 3);
    // Trivial rows unaffected.
    CHECK(shift_table(k, Route::Trivial, true).s ==
          shift_table(k, Route::Trivial, false).s);
  }
}

TEST_CASE("propagate_triangle reproduces the two-step quadruples") {
  GradedDim x{{5, 7, 11, 13}};  // generic (a, b, c, d)

  // Trivial route, k > 0: down through H(2k) then up to H(2k+1) gives
  // (a, b, c+1, d-1).
  auto i = shift_table(KClass::Positive, Route::Trivial).s;
  GradedDim mid = propagate_triangle(x, {i[0], i[1], i[2]}, -1);
  CHECK(mid == GradedDim{{5, 7, 11, 12}});
  GradedDim out = propagate_triangle(mid, {i[3], i[4], i[5]}, +1);
  CHECK(out == GradedDim{{5, 7, 12, 12}});

  // Meridian route, k > 0: (a+1, b-1, c, d).
  auto j = shift_table(KClass::Positive, Route::Meridian).s;
  mid = propagate_triangle(x, {j[0], j[1], j[2]}, -1);
  out = propagate_triangle(mid, {j[3], j[4], j[5]}, +1);
  CHECK(out == GradedDim{{6, 6, 11, 13}});

  // Totals track delta.
  GradedDim one{{1, 0, 0, 0}};
  CHECK(propagate_triangle(one, {2, 3, 1}, +1).total() == 2);
}

TEST_CASE("propagate_triangle conserves totals and inverts") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> entry(0, 9);
  std::uniform_int_distribution<int> shift(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    GradedDim x{{entry(rng) + 1, entry(rng) + 1, entry(rng) + 1, entry(rng) + 1}};
    int alpha = shift(rng), beta = shift(rng), gamma = shift(rng);
    GradedDim up = propagate_triangle(x, {alpha, beta, gamma}, +1);
    CHECK(up.total() == x.total() + 1);
    // Matched inverse: shift back by -alpha and consume the unit that the
    // up-step created in grading -beta.
    GradedDim down =
        propagate_triangle(up, {(4 - alpha) % 4, shift(rng), (4 - beta) % 4}, -1);
    CHECK(down == x);
  }
}

TEST_CASE("propagate_triangle infeasible step") {
  GradedDim empty{{0, 0, 0, 0}};
  CHECK_THROWS_AS(propagate_triangle(empty, {0, 0, 3}, -1), InfeasibleStep);
}

TEST_CASE("vw_contradiction pinned routes") {
  GradedDim x{{2, 1, 1, 1}};
  auto routes = vw_routes(KClass::Positive, x);
  CHECK(routes.via_trivial == GradedDim{{2, 1, 2, 0}});
  CHECK(routes.via_meridian == GradedDim{{3, 0, 1, 1}});
  CHECK(vw_contradiction(KClass::Positive, x));

  CHECK(vw_contradiction(KClass::Zero, GradedDim{{1, 1, 1, 1}}));

  CHECK_THROWS_AS(vw_contradiction(KClass::Positive, GradedDim{{0, 0, 0, 0}}),
                  InfeasibleStep);
}

TEST_CASE("vw_contradiction holds for all positive quadruples up to total 12") {
  for (KClass k : kClasses) {
    for (std::int64_t a = 1; a <= 9; ++a) {
      for (std::int64_t b = 1; a + b <= 11; ++b) {
        for (std::int64_t c = 1; a + b + c <= 11; ++c) {
          for (std::int64_t d = 1; a + b + c + d <= 12; ++d) {
            CHECK(vw_contradiction(k, GradedDim{{a, b, c, d}}));
          }
        }
      }
    }
  }
}

TEST_CASE("exactly the opposite-sign assignments are consistent") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> entry(1, 6);
  for (KClass k : kClasses) {
    for (int trial = 0; trial < 100; ++trial) {
      GradedDim x{{entry(rng), entry(rng), entry(rng), entry(rng)}};
      VwSigns s = vw_sign_assignments(k, x);
      CHECK_FALSE(s.consistent[0][0]);  // both down: the forbidden hypothesis
      CHECK(s.consistent[0][1]);
      CHECK(s.consistent[1][0]);
      CHECK_FALSE(s.consistent[1][1]);
    }
  }
}
