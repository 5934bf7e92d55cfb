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

#include "triangle.hpp"

#include <algorithm>

namespace isharp {

std::string format_epsilon(Epsilon e) {
  return std::string() + (e.core ? '1' : '0') + (e.cocore ? '1' : '0');
}

Epsilon epsilon_from_bits(int code) {
  if (code < 0 || code > 3) throw InvalidArgument("epsilon code must be 0..3");
  return Epsilon{(code & 2) != 0, (code & 1) != 0};
}

std::array<TriangleSpec, 4> triangles_for_triad(const Triad& t) {
  const Bundle T = Bundle::Trivial, M = Bundle::Meridian;
  std::array<TriangleSpec, 4> out = {
      TriangleSpec{t, 1, {T, M, T}, {kEps01, kEps10, kEps00}},
      TriangleSpec{t, 2, {T, T, M}, {kEps00, kEps01, kEps10}},
      TriangleSpec{t, 3, {M, T, T}, {kEps10, kEps00, kEps01}},
      TriangleSpec{t, 4, {M, M, M}, {kEps11, kEps11, kEps11}},
  };
  // Even middle slope: r0 and r2 are odd and their meridian decorations
  // reduce to the trivial class.
  if (t.slopes[1].num % 2 == 0) {
    for (auto& spec : out) {
      if (spec.vertex_bundles[0] == M) spec.vertex_bundles[0] = T;
      if (spec.vertex_bundles[2] == M) spec.vertex_bundles[2] = T;
    }
  }
  return out;
}

bool check_exactness_dims(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 0 || b < 0 || c < 0) throw InvalidArgument("dimensions must be non-negative");
  if ((a + b + c) % 2 != 0) return false;
  return a <= b + c && b <= a + c && c <= a + b;
}

std::optional<Epsilon> compose_epsilon(Epsilon first, Epsilon second) {
  struct Rule {
    Epsilon first, second, result;
  };
  static constexpr Rule kRules[] = {
      {kEps00, kEps00, kEps00},
      {kEps11, kEps10, kEps10},
      {kEps01, kEps11, kEps01},
      {kEps10, kEps01, kEps11},
  };
  for (const Rule& r : kRules) {
    if (r.first == first && r.second == second) return r.result;
  }
  return std::nullopt;
}

SphereConsequence sphere_rule(int self_intersection, Parity l_parity, bool split_off) {
  switch (self_intersection) {
    case 0:
      return l_parity == Parity::Odd ? SphereConsequence::MapVanishes
                                     : SphereConsequence::NoRule;
    case -1:
      if (l_parity == Parity::Odd) return SphereConsequence::MapVanishes;
      return split_off ? SphereConsequence::BlowDownIdentity
                       : SphereConsequence::NoRule;
    case -2:
      return l_parity == Parity::Odd ? SphereConsequence::SphereToggleIdentity
                                     : SphereConsequence::NoRule;
    default:
      return SphereConsequence::NoRule;
  }
}

TriangleReport verify_knot_triangles(const FieldInvariants& inv,
                                     const TriangleSweepOptions& opts) {
  TriangleReport report;
  for (const Triad& t : enumerate_triads(opts.max_den, opts.max_num)) {
    ++report.triads_checked;
    for (const TriangleSpec& spec : triangles_for_triad(t)) {
      TriangleCheck check;
      check.triad = t;
      check.triangle_index = spec.index;
      for (int i = 0; i < 3; ++i) {
        check.dims[i] =
            dim_sharp(inv, t.slopes[i], spec.vertex_bundles[i]).value;
      }
      check.feasible =
          check_exactness_dims(check.dims[0], check.dims[1], check.dims[2]);
      ++report.triangles_checked;
      if (!check.feasible) report.failures.push_back(check);
      if (opts.keep_all) report.checks.push_back(check);
    }
  }
  return report;
}

}  // namespace isharp
