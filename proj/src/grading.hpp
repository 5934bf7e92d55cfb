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
//
// Z/4-graded dimension bookkeeping for the two integer-surgery triangles
// through S^3. The homology of S^3 is one-dimensional in grading 0, which
// pins every propagation step; the shift tables are transcribed, not
// derived. The absolute lift on even surgeries with meridian class follows
// the s_1 spin convention; the alternative s_0 lift differs by a global
// shift of 2 on the meridian rows and is exposed for exploration only.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace isharp {

// Dimensions of the four Z/4-graded summands.
struct GradedDim {
  std::array<std::int64_t, 4> d = {0, 0, 0, 0};

  std::int64_t total() const { return d[0] + d[1] + d[2] + d[3]; }
  friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

std::string format_graded(const GradedDim& x);

// Six grading shifts (residues mod 4) for the two triangles
//   H(2k-1) -(s1)-> H(2k[,mu]) -(s2)-> H(inf) -(s3)->
//   H(2k[,mu]) -(s4)-> H(2k+1) -(s5)-> H(inf) -(s6)->
struct ShiftTuple {
  std::array<int, 6> s = {0, 0, 0, 0, 0, 0};

  friend bool operator==(const ShiftTuple&, const ShiftTuple&) = default;
};

enum class KClass { Positive, Zero, Negative };
enum class Route { Trivial, Meridian };

std::string format_kclass(KClass k);

// Verbatim table rows. spin_s0 switches the absolute lift on the meridian
// class, adding 2 to the shifts of the four maps touching H(2k, mu).
ShiftTuple shift_table(KClass k_class, Route route, bool spin_s0 = false);

// One exact triangle A -> B -> H(inf) -> A with the given shifts
// (s_ab, s_b_inf, s_inf_a) and delta = dim B - dim A in {+1, -1}; H(inf) is
// one unit in grading 0. Returns the graded dimensions of B. Throws
// InfeasibleStep when delta = -1 and the consumed summand is empty.
GradedDim propagate_triangle(const GradedDim& x, const std::array<int, 3>& shifts,
                             int delta);

// The two-step propagations H(2k-1) -> H(2k) -> H(2k+1) (trivial route) and
// H(2k-1) -> H(2k, mu) -> H(2k+1) (meridian route) under the forbidden
// hypothesis dim H(2k) = dim H(2k, mu) = dim H(2k+-1) - 1, i.e. delta = -1
// then +1 on both routes.
struct VwRoutes {
  GradedDim via_trivial;
  GradedDim via_meridian;
};

VwRoutes vw_routes(KClass k_class, const GradedDim& x);

// True iff the two routes disagree, which is the contradiction eliminating
// the hypothesis: the bundle classes at an even minimum must differ by 2.
bool vw_contradiction(KClass k_class, const GradedDim& x);

// Route consistency for the four sign assignments (sign at H(2k), sign at
// H(2k, mu)), where sign s means dim of that space is dim H(2k-1) + s and
// the second leg runs back to dim H(2k-1). consistent[i][j] is the
// (s_trivial, s_meridian) = ((-1)^(1-i)... see indices: 0 -> -1, 1 -> +1.
// Exactly the two opposite-sign assignments are consistent for any x that
// keeps every step feasible.
struct VwSigns {
  // consistent[a][b] for s_trivial = (a ? +1 : -1), s_meridian = (b ? +1 : -1)
  bool consistent[2][2] = {{false, false}, {false, false}};
};

VwSigns vw_sign_assignments(KClass k_class, const GradedDim& x);

}  // namespace isharp
