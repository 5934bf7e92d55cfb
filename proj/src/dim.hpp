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

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "slope.hpp"

namespace isharp {

// Coefficient field, identified by its characteristic (0 or a prime).
struct FieldLabel {
  std::int64_t characteristic = 0;

  friend bool operator==(const FieldLabel&, const FieldLabel&) = default;
};

FieldLabel make_field(std::int64_t characteristic);  // validates primality
std::string format_field(const FieldLabel& f);       // "C", "F2", "F7", ...
FieldLabel parse_field(const std::string& text);     // C | char0 | F2 | Fp:<p>

// Bundle class on a surgery manifold. The meridian class differs from the
// trivial one only when the surgery numerator is even; at odd numerators the
// two dimensions coincide.
enum class Bundle { Trivial, Meridian };

// Profile of the integer dimension sequence around its minimum slope nu:
//   V: single minimum; if nu is even the trivial class attains r.
//   W: oscillating minimum; nu is even and the meridian class attains r.
// Unknown keeps partially known knots usable away from the exceptional slope.
enum class Shape { V, W, Unknown };

std::string format_shape(Shape s);

// Per-field invariants (nu, r, shape) of a knot, the inputs of the dimension
// formula
//
//     dim(p/q-surgery) = q*r + |p - q*nu|,
//
// valid except possibly at the single slope nu/1 when nu is even, where the
// two bundle classes have dimensions {r, r+2}, the shape deciding which is
// which. Constraints: r >= |nu|, r - |nu| even, shape W only for even nu;
// shape normalizes to V when nu is odd. The one-sided stabilization
// thresholds are derived: V gives nu+ = nu- = nu, W gives nu +- 1.
struct FieldInvariants {
  FieldLabel field;
  std::int64_t nu = 0;
  std::int64_t r = 0;
  Shape shape = Shape::Unknown;

  friend bool operator==(const FieldInvariants&, const FieldInvariants&) = default;
};

inline constexpr std::int64_t kInvariantLimit = 1'000'000;

// Validates and normalizes (odd nu forces shape V). Throws InvalidArgument
// naming the violated constraint.
FieldInvariants make_invariants(FieldLabel field, std::int64_t nu, std::int64_t r,
                                Shape shape);

// Returns the violated constraints without throwing; empty means valid.
std::vector<std::string> invariant_violations(const FieldInvariants& inv);

std::int64_t nu_plus(const FieldInvariants& inv);
std::int64_t nu_minus(const FieldInvariants& inv);

struct DimResult {
  std::int64_t value = 0;
  bool exceptional = false;  // true only at slope nu/1 with nu even
};

// The dimension formula. Throws ShapeRequired when slope = nu/1, nu even and
// shape is Unknown. Slope inf yields 1 (the surgered manifold is S^3).
DimResult dim_sharp(const FieldInvariants& inv, const Slope& slope, Bundle bundle);

// Entrywise dim_sharp over integer slopes n_lo..n_hi.
std::vector<std::int64_t> dim_sequence(const FieldInvariants& inv, std::int64_t n_lo,
                                       std::int64_t n_hi, Bundle bundle);

// Recovers (nu, r, shape) from the two bundle-class sequences over the
// contiguous domain starting at n_lo. The candidate search accepts a triple
// only if it reproduces both sequences everywhere and the domain certifies
// nu+/nu- with two strictly increasing steps beyond the plateau on each
// side. Throws InsufficientRange when no or several candidates can be
// certified, NotRealizable (naming the first violated constraint) when the
// sequences match no admissible triple, e.g. for generalized W patterns.
FieldInvariants infer_invariants(std::int64_t n_lo,
                                 const std::vector<std::int64_t>& seq_trivial,
                                 const std::vector<std::int64_t>& seq_meridian,
                                 FieldLabel field);

// nu -> -nu, r and shape unchanged (the mirror dimension identity
// dim H(mirror K, n) = dim H(K, -n); see the module notes on the sign).
FieldInvariants mirror(const FieldInvariants& inv);

// Instanton L-space slope description: surgeries p/q >= nu all have dim |p|
// exactly when r = nu > 0, except possibly the trivial-bundle dimension at
// the integer slope nu itself for W-shaped knots (r + 2 there).
struct LspaceSlopes {
  bool exists = false;
  std::int64_t threshold = 0;
  bool exceptional_excluded = false;
};

LspaceSlopes lspace_slopes(const FieldInvariants& inv);

}  // namespace isharp
