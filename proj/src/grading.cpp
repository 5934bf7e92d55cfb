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

#include "grading.hpp"

namespace isharp {

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

GradedDim cyclic_shift(const GradedDim& x, int s) {
  GradedDim out;
  for (int g = 0; g < 4; ++g) out.d[mod4(g + s)] = x.d[g];
  return out;
}

}  // namespace

std::string format_graded(const GradedDim& x) {
  std::string out = "(";
  for (int g = 0; g < 4; ++g) {
    if (g) out += ",";
    out += std::to_string(x.d[g]);
  }
  return out + ")";
}

std::string format_kclass(KClass k) {
  switch (k) {
    case KClass::Positive: return "positive";
    case KClass::Zero: return "zero";
    case KClass::Negative: return "negative";
  }
  return "?";
}

ShiftTuple shift_table(KClass k_class, Route route, bool spin_s0) {
  ShiftTuple t;
  if (route == Route::Trivial) {
    switch (k_class) {
      case KClass::Positive: t.s = {0, 0, 3, 0, 2, 1}; break;
      case KClass::Zero: t.s = {3, 2, 2, 2, 2, 3}; break;
      case KClass::Negative: t.s = {0, 1, 2, 0, 3, 0}; break;
    }
    return t;
  }
  switch (k_class) {
    case KClass::Positive: t.s = {0, 2, 1, 0, 0, 3}; break;
    case KClass::Zero: t.s = {3, 0, 0, 2, 0, 1}; break;
    case KClass::Negative: t.s = {0, 3, 0, 0, 1, 2}; break;
  }
  if (spin_s0) {
    // Regrading H(2k, mu) by 2 shifts the four maps into or out of it.
    for (int idx : {0, 1, 3, 5}) t.s[idx] = mod4(t.s[idx] + 2);
  }
  return t;
}

GradedDim propagate_triangle(const GradedDim& x, const std::array<int, 3>& shifts,
                             int delta) {
  const int s_ab = mod4(shifts[0]);
  const int s_b_inf = mod4(shifts[1]);
  const int s_inf_a = mod4(shifts[2]);
  for (std::int64_t v : x.d) {
    if (v < 0) throw InvalidArgument("graded dimensions must be non-negative");
  }
  if (delta == 1) {
    // A -> B injective; the extra generator of B surjects onto H(inf),
    // which lives in grading 0, so it sits in grading -s_b_inf.
    GradedDim out = cyclic_shift(x, s_ab);
    out.d[mod4(-s_b_inf)] += 1;
    return out;
  }
  if (delta == -1) {
    // ker(A -> B) is the image of H(inf), one unit in grading s_inf_a.
    if (x.d[s_inf_a] == 0) {
      throw InfeasibleStep("infeasible triangle: no dimension in grading " +
                           std::to_string(s_inf_a) + " to remove");
    }
    GradedDim reduced = x;
    reduced.d[s_inf_a] -= 1;
    return cyclic_shift(reduced, s_ab);
  }
  throw InvalidArgument("delta must be +1 or -1");
}

namespace {

// Run one route H(2k-1) -> middle -> H(2k+1): the middle space has
// dim = dim H(2k-1) + sign, so the legs see delta = sign then -sign.
GradedDim run_route(const ShiftTuple& t, const GradedDim& x, int sign) {
  GradedDim mid = propagate_triangle(x, {t.s[0], t.s[1], t.s[2]}, sign);
  return propagate_triangle(mid, {t.s[3], t.s[4], t.s[5]}, -sign);
}

}  // namespace

VwRoutes vw_routes(KClass k_class, const GradedDim& x) {
  VwRoutes out;
  out.via_trivial = run_route(shift_table(k_class, Route::Trivial), x, -1);
  out.via_meridian = run_route(shift_table(k_class, Route::Meridian), x, -1);
  return out;
}

bool vw_contradiction(KClass k_class, const GradedDim& x) {
  VwRoutes r = vw_routes(k_class, x);
  return !(r.via_trivial == r.via_meridian);
}

VwSigns vw_sign_assignments(KClass k_class, const GradedDim& x) {
  VwSigns out;
  const ShiftTuple ti = shift_table(k_class, Route::Trivial);
  const ShiftTuple tj = shift_table(k_class, Route::Meridian);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      try {
        GradedDim via_t = run_route(ti, x, a ? 1 : -1);
        GradedDim via_m = run_route(tj, x, b ? 1 : -1);
        out.consistent[a][b] = (via_t == via_m);
      } catch (const InfeasibleStep&) {
        out.consistent[a][b] = false;
      }
    }
  }
  return out;
}

}  // namespace isharp
