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
// Surgery-triangle bookkeeping. Cobordism maps carry a two-bit epsilon
// decoration recording the presence of the core and cocore disks in the
// bundle set; a slope triad supports four decorated exact triangles. All map
// relations hold up to sign only, so this module tracks decorations and
// dimensions, never signs.
//
// The composite relation F(10) o F(11) = 0 is derivable here two ways:
// directly from sphere_rule(0, odd) on the self-intersection-zero sphere of
// the round-trip cobordism, or by blowing down via compose_epsilon(11, 10)
// and applying sphere_rule(-1, odd); the doctests assert both chains.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dim.hpp"
#include "slope.hpp"

namespace isharp {

// Two-bit bundle decoration on a surgery cobordism map: presence of the core
// disk (first bit) and the cocore disk (second bit).
struct Epsilon {
  bool core = false;
  bool cocore = false;

  friend bool operator==(const Epsilon&, const Epsilon&) = default;
};

inline constexpr Epsilon kEps00{false, false};
inline constexpr Epsilon kEps01{false, true};
inline constexpr Epsilon kEps10{true, false};
inline constexpr Epsilon kEps11{true, true};

std::string format_epsilon(Epsilon e);          // "00", "01", "10", "11"
Epsilon epsilon_from_bits(int code);            // 0..3, core bit high

// One decorated exact triangle on a triad: vertex i carries a bundle class
// and edge i the epsilon of the map from vertex i to vertex i+1 (mod 3).
struct TriangleSpec {
  Triad triad;
  int index = 0;  // 1..4, the row in the four-triangle table
  std::array<Bundle, 3> vertex_bundles;
  std::array<Epsilon, 3> edge_epsilons;
};

// The four decorated triangles of a triad:
//   1: H(r0)  -01->  ~H(r1)  -10->  H(r2)   -00->
//   2: H(r0)  -00->   H(r1)  -01->  ~H(r2)  -10->
//   3: ~H(r0) -10->   H(r1)  -00->  H(r2)   -01->
//   4: ~H(r0) -11->  ~H(r1)  -11->  ~H(r2)  -11->
// When the middle slope r1 is even (equivalently r0 and r2 odd), the
// meridian decorations at r0 and r2 drop to trivial; the epsilon labels are
// unchanged.
std::array<TriangleSpec, 4> triangles_for_triad(const Triad& t);

// Feasibility of a 3-periodic exact sequence with dimensions (a, b, c):
// true iff a+b+c is even and each is at most the sum of the other two. This
// is equivalent to the existence of non-negative ranks x, y, z with
// a = x+z, b = y+x, c = z+y.
bool check_exactness_dims(std::int64_t a, std::int64_t b, std::int64_t c);

// Epsilon composition under blow-down of the intermediate slope: composing
// first (r1 -> r3) then second (r3 -> r2) equals the direct map r1 -> r2
// with the returned decoration. Only four pairs are covered:
//   (00,00) -> 00   (11,10) -> 10   (01,11) -> 01   (10,01) -> 11
// Everything else returns nullopt ("no rule").
std::optional<Epsilon> compose_epsilon(Epsilon first, Epsilon second);

enum class Parity { Even, Odd };

// Effect of an embedded sphere S in a cobordism on its map, keyed by the
// self-intersection k of S and the parity of |bundle ∩ S|:
//   (0, odd)                    -> the map vanishes
//   (-1, odd)                   -> the map vanishes
//   (-1, even, split_off)       -> blow-down identity (even stands for l = 0
//                                  and the sphere splits off a summand)
//   (-2, odd)                   -> toggling S in the bundle set preserves the
//                                  map up to sign
// Anything else is uncovered and returns NoRule.
enum class SphereConsequence {
  MapVanishes,
  BlowDownIdentity,
  SphereToggleIdentity,
  NoRule,
};

SphereConsequence sphere_rule(int self_intersection, Parity l_parity, bool split_off);

// Dimension-level consistency sweep: for every triad within bounds, evaluate
// the four decorated triangles with dim_sharp and check exactness
// feasibility. A valid set of invariants must produce zero failures.
struct TriangleCheck {
  Triad triad;
  int triangle_index = 0;  // 1..4
  std::array<std::int64_t, 3> dims;
  bool feasible = false;
};

struct TriangleReport {
  std::int64_t triads_checked = 0;
  std::int64_t triangles_checked = 0;
  std::vector<TriangleCheck> failures;
  std::vector<TriangleCheck> checks;  // filled only when keep_all is set
};

struct TriangleSweepOptions {
  std::int64_t max_den = 10;
  std::int64_t max_num = 25;
  bool keep_all = false;
};

TriangleReport verify_knot_triangles(const FieldInvariants& inv,
                                     const TriangleSweepOptions& opts);

}  // namespace isharp
