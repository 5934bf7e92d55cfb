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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace isharp {

// Surgery slopes are reduced fractions p/q with q >= 1, plus inf = 1/0.
// Canonical form: gcd(|num|,den) = 1, den >= 0, and den = 0 only for num = 1.
// (p,q) and (-p,-q) describe the same slope; the sign lives in the numerator.
//
// A canonical Slope deliberately forgets the signed representative. Triads
// need actual signed pairs because negating one representative breaks the
// determinant conditions, so SlopeRep exists as a separate type.
struct Slope {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_infinity() const { return den == 0; }
  bool is_integer() const { return den == 1; }
  bool is_zero() const { return den == 1 && num == 0; }

  friend bool operator==(const Slope&, const Slope&) = default;
};

// Total order on finite slopes by rational value; inf sorts after all finite
// slopes (used only to make report output deterministic).
bool slope_less(const Slope& a, const Slope& b);

// Inputs are capped well above any spec'd range so that every determinant and
// dimension computed downstream stays far from int64 overflow.
inline constexpr std::int64_t kSlopeLimit = 1'000'000'000;

// Reduce (num, den) to canonical form. Rejects (0,0) and out-of-range input.
Slope make_slope(std::int64_t num, std::int64_t den);

Slope slope_infinity();

// "p/q", "inf" for 1/0, bare integer for q = 1.
std::string format_slope(const Slope& s);
Slope parse_slope(const std::string& text);

// Signed representative (p, q) of a slope; q may be negative here.
struct SlopeRep {
  std::int64_t p = 0;
  std::int64_t q = 1;

  friend bool operator==(const SlopeRep&, const SlopeRep&) = default;
};

SlopeRep canonical_rep(const Slope& s);
Slope slope_of_rep(const SlopeRep& r);

// p0*q1 - p1*q0.
std::int64_t det(const SlopeRep& a, const SlopeRep& b);

// Three slopes whose representatives satisfy the cyclic determinant
// conditions p_i q_{i+1} - p_{i+1} q_i = 1 for i in Z/3. The reps store the
// witness signs; each reps[i] reduces to slopes[i] up to overall sign.
struct Triad {
  std::array<Slope, 3> slopes;
  std::array<SlopeRep, 3> reps;
};

// Searches the 8 sign assignments on the canonical representatives and
// returns the first witness with all three determinants +1, enumerating
// (+1,+1,+1), (+1,+1,-1), ... lexicographically with +1 first. Orientation
// matters: (inf, 0, 1) is a triad while (1, 0, inf) is not.
std::optional<Triad> is_triad(const Slope& r0, const Slope& r1, const Slope& r2);

// Rotate the triad labels cyclically by k; the determinant conditions are
// invariant under rotation.
Triad rotate_triad(const Triad& t, int k);

// Farey decomposition of a non-integer slope r0 = p0/q0 into (r1, r2, r3):
//   - r1, r2 in [floor(r0), ceil(r0)] are the Stern-Brocot parents of r0,
//     with representatives satisfying p1 + p2 = p0 and q1 + q2 = q0;
//   - p3 = sign(p0)*|p1 - p2| and q3 = |q1 - q2| (q0 > 0 canonically);
//   - (r0, r1, r2, r3) fits two slope triads, returned by farey_triads below.
// Rejects integer slopes, 0 and inf.
struct FareySplit {
  Slope r1, r2, r3;
};

FareySplit farey_split(const Slope& r0);

// The two triads realizing the double-triad diagram of a split: with
// u = max(r1, r2) and l = min(r1, r2) by value, they are (r0, u, l) and
// (l, u, r3), both in cyclic orientation.
struct FareyTriads {
  Triad upper;  // contains r0
  Triad lower;  // contains r3
};

FareyTriads farey_triads(const Slope& r0);

// Decomposition tree: farey_split applied to every non-integer node until
// all leaves are integers, 0 or inf. Denominators strictly decrease along
// all three children, so the depth is finite.
struct FareyNode {
  Slope slope;
  std::vector<FareyNode> children;  // empty for leaves, else {r1, r2, r3}
  std::optional<FareyTriads> triads;

  bool is_leaf() const { return children.empty(); }
};

FareyNode farey_tree(const Slope& r);

int farey_depth(const FareyNode& node);

// All triads with denominators <= max_den and |numerators| <= max_num, one
// representative per cyclic-rotation class, rotated so the unique even-
// numerator slope sits in the middle position. Sorted for determinism.
std::vector<Triad> enumerate_triads(std::int64_t max_den, std::int64_t max_num);

}  // namespace isharp
