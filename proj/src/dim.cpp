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

#include "dim.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace isharp {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldLabel make_field(std::int64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InvalidArgument("field characteristic must be 0 or prime, got " +
                          std::to_string(characteristic));
  }
  return FieldLabel{characteristic};
}

std::string format_field(const FieldLabel& f) {
  if (f.characteristic == 0) return "C";
  return "F" + std::to_string(f.characteristic);
}

FieldLabel parse_field(const std::string& text) {
  if (text == "C" || text == "c" || text == "char0") return FieldLabel{0};
  if (text == "F2" || text == "f2") return FieldLabel{2};
  std::string t = text;
  if (t.rfind("Fp:", 0) == 0 || t.rfind("fp:", 0) == 0) {
    try {
      return make_field(std::stoll(t.substr(3)));
    } catch (const std::exception&) {
      throw UnknownField("cannot parse field '" + text + "'");
    }
  }
  // Accept bare F<p> as a convenience.
  if (t.size() > 1 && (t[0] == 'F' || t[0] == 'f')) {
    try {
      return make_field(std::stoll(t.substr(1)));
    } catch (const InvalidArgument& e) {
      throw UnknownField(e.what());
    } catch (const std::exception&) {
      throw UnknownField("cannot parse field '" + text + "'");
    }
  }
  throw UnknownField("unknown field '" + text + "' (use C, char0, F2 or Fp:<p>)");
}

std::string format_shape(Shape s) {
  switch (s) {
    case Shape::V: return "V";
    case Shape::W: return "W";
    case Shape::Unknown: return "?";
  }
  return "?";
}

std::vector<std::string> invariant_violations(const FieldInvariants& inv) {
  std::vector<std::string> out;
  if (inv.field.characteristic != 0 && !is_prime(inv.field.characteristic)) {
    out.push_back("field characteristic must be 0 or prime");
  }
  if (std::abs(inv.nu) > kInvariantLimit || inv.r > kInvariantLimit) {
    out.push_back("invariants exceed supported magnitude");
  }
  if (inv.r < 0) out.push_back("r must be non-negative");
  if (inv.r < std::abs(inv.nu)) out.push_back("r >= |nu|");
  if ((inv.r - std::abs(inv.nu)) % 2 != 0) out.push_back("r - |nu| must be even");
  if (inv.shape == Shape::W && inv.nu % 2 != 0) out.push_back("shape W requires even nu");
  return out;
}

FieldInvariants make_invariants(FieldLabel field, std::int64_t nu, std::int64_t r,
                                Shape shape) {
  if (nu % 2 != 0 && shape == Shape::Unknown) shape = Shape::V;
  FieldInvariants inv{field, nu, r, shape};
  auto bad = invariant_violations(inv);
  if (!bad.empty()) {
    throw InvalidArgument("invalid invariants (nu=" + std::to_string(nu) +
                          ", r=" + std::to_string(r) + "): " + bad.front());
  }
  return inv;
}

std::int64_t nu_plus(const FieldInvariants& inv) {
  return inv.nu + (inv.shape == Shape::W ? 1 : 0);
}

std::int64_t nu_minus(const FieldInvariants& inv) {
  return inv.nu - (inv.shape == Shape::W ? 1 : 0);
}

DimResult dim_sharp(const FieldInvariants& inv, const Slope& slope, Bundle bundle) {
  if (slope.is_infinity()) return DimResult{1, false};

  const std::int64_t p = slope.num, q = slope.den;
  if (!(slope.is_integer() && p == inv.nu && inv.nu % 2 == 0)) {
    // Generic slope: independent of the bundle class.
    return DimResult{q * inv.r + std::abs(p - q * inv.nu), false};
  }

  // Exceptional slope nu/1 with nu even: bundle classes differ by exactly 2.
  switch (inv.shape) {
    case Shape::V:
      return DimResult{bundle == Bundle::Trivial ? inv.r : inv.r + 2, true};
    case Shape::W:
      return DimResult{bundle == Bundle::Trivial ? inv.r + 2 : inv.r, true};
    case Shape::Unknown:
      throw ShapeRequired("shape required: slope " + format_slope(slope) +
                          " is the exceptional slope of nu = " +
                          std::to_string(inv.nu));
  }
  throw Error("unreachable");
}

std::vector<std::int64_t> dim_sequence(const FieldInvariants& inv, std::int64_t n_lo,
                                       std::int64_t n_hi, Bundle bundle) {
  if (n_lo > n_hi) throw InvalidArgument("dim_sequence: n_lo > n_hi");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    out.push_back(dim_sharp(inv, make_slope(n, 1), bundle).value);
  }
  return out;
}

namespace {

// Model check: does (nu, r, shape) reproduce both sequences on the domain?
bool model_matches(const FieldInvariants& inv, std::int64_t n_lo,
                   const std::vector<std::int64_t>& triv,
                   const std::vector<std::int64_t>& mer) {
  for (std::size_t i = 0; i < triv.size(); ++i) {
    std::int64_t n = n_lo + static_cast<std::int64_t>(i);
    Slope s = make_slope(n, 1);
    if (dim_sharp(inv, s, Bundle::Trivial).value != triv[i]) return false;
    if (dim_sharp(inv, s, Bundle::Meridian).value != mer[i]) return false;
  }
  return true;
}

// Detects the oscillating plateau of a generalized W pattern: two local
// minima of the trivial sequence more than two apart, or an oscillation
// plateau wider than the admissible W window.
bool looks_generalized_w(std::int64_t n_lo, const std::vector<std::int64_t>& triv,
                         const std::vector<std::int64_t>& mer) {
  (void)n_lo;
  auto count_minima = [](const std::vector<std::int64_t>& s) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] < s[i - 1] && s[i] < s[i + 1]) ++count;
    }
    return count;
  };
  // V has one interior minimum per sequence; W has two in one class and one
  // in the other. Three or more oscillation minima only arise for
  // generalized W, as does disagreement of the two classes at >= 2 slopes.
  int minima = std::max(count_minima(triv), count_minima(mer));
  if (minima >= 3) return true;
  int disagreements = 0;
  for (std::size_t i = 0; i < triv.size(); ++i) {
    if (triv[i] != mer[i]) ++disagreements;
  }
  return disagreements >= 2;
}

}  // namespace

FieldInvariants infer_invariants(std::int64_t n_lo,
                                 const std::vector<std::int64_t>& triv,
                                 const std::vector<std::int64_t>& mer,
                                 FieldLabel field) {
  if (triv.size() != mer.size()) {
    throw NotRealizable("not realizable: sequences have different domains");
  }
  if (triv.size() < 2) throw InsufficientRange("insufficient range: need at least 2 slopes");
  const std::int64_t n_hi = n_lo + static_cast<std::int64_t>(triv.size()) - 1;

  for (const auto* seq : {&triv, &mer}) {
    for (std::size_t i = 0; i < seq->size(); ++i) {
      if ((*seq)[i] < 0) throw NotRealizable("not realizable: negative dimension");
      if (i > 0 && std::abs((*seq)[i] - (*seq)[i - 1]) != 1) {
        throw NotRealizable("not realizable: adjacent dimensions must differ by 1");
      }
    }
  }
  for (std::size_t i = 0; i < triv.size(); ++i) {
    std::int64_t n = n_lo + static_cast<std::int64_t>(i);
    if (n % 2 != 0 && triv[i] != mer[i]) {
      throw NotRealizable(
          "not realizable: bundle classes must agree at odd slopes");
    }
  }

  std::vector<FieldInvariants> certified;
  std::vector<FieldInvariants> uncertified;
  for (std::int64_t nu = n_lo; nu <= n_hi; ++nu) {
    for (Shape shape : {Shape::V, Shape::W}) {
      if (shape == Shape::W && nu % 2 != 0) continue;
      if (shape == Shape::V && nu % 2 != 0 &&
          triv[static_cast<std::size_t>(nu - n_lo)] !=
              mer[static_cast<std::size_t>(nu - n_lo)]) {
        continue;
      }
      // Fit r from a non-exceptional sample, else from the minimum itself.
      std::optional<std::int64_t> r;
      for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        if (n == nu) continue;
        r = triv[static_cast<std::size_t>(n - n_lo)] - std::abs(n - nu);
        break;
      }
      if (!r) r = triv[static_cast<std::size_t>(nu - n_lo)];
      FieldInvariants cand{field, nu, *r, shape};
      if (!invariant_violations(cand).empty()) continue;
      if (!model_matches(cand, n_lo, triv, mer)) continue;
      // Certification margin: two strictly increasing steps beyond the
      // plateau on each side (plateau edge nu for V, nu +- 1 for W).
      std::int64_t margin = (shape == Shape::W) ? 3 : 2;
      if (nu - margin >= n_lo && nu + margin <= n_hi) {
        certified.push_back(cand);
      } else {
        uncertified.push_back(cand);
      }
    }
  }

  if (certified.size() == 1) return certified.front();
  if (certified.size() > 1 || !uncertified.empty()) {
    throw InsufficientRange(
        "insufficient range: sequences do not determine (nu, r, shape) with "
        "two certified steps per side");
  }
  if (looks_generalized_w(n_lo, triv, mer)) {
    throw NotRealizable(
        "not realizable: generalized W-shaped pattern (nu+ - nu- > 2 is "
        "excluded)");
  }
  throw NotRealizable(
      "not realizable: no admissible (nu, r, shape) reproduces the sequences");
}

FieldInvariants mirror(const FieldInvariants& inv) {
  FieldInvariants out = inv;
  out.nu = -inv.nu;
  return out;
}

LspaceSlopes lspace_slopes(const FieldInvariants& inv) {
  LspaceSlopes out;
  out.exists = (inv.r == inv.nu && inv.nu > 0);
  if (out.exists) {
    out.threshold = inv.nu;
    out.exceptional_excluded = (inv.shape == Shape::W);
  }
  return out;
}

}  // namespace isharp
