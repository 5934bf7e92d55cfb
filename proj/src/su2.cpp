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

#include "su2.hpp"

#include <algorithm>
#include <numeric>

namespace isharp {

std::int64_t AdmissibleWitness::reconstruct() const {
  std::int64_t v = doubled ? 2 : 1;
  if (prime_a) {
    for (std::int64_t i = 0; i < exponent_e; ++i) v *= *prime_a;
  }
  return v;
}

namespace {

// Returns the prime a and exponent e >= 1 if n = a^e, nullopt otherwise.
std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t a = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      a = d;
      break;
    }
  }
  if (a == 0) return std::make_pair(n, std::int64_t{1});  // n itself prime
  std::int64_t e = 0, m = n;
  while (m % a == 0) {
    m /= a;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(a, e);
}

}  // namespace

std::optional<AdmissibleWitness> admissible_numerator(std::int64_t p) {
  return admissible_numerator(p, AdmissibilityPolicy::AllowExponentZero);
}

std::optional<AdmissibleWitness> admissible_numerator(std::int64_t p,
                                                      AdmissibilityPolicy policy) {
  if (p < 1) return std::nullopt;
  if (p == 1) {
    if (policy == AdmissibilityPolicy::RequirePositiveExponent) return std::nullopt;
    return AdmissibleWitness{std::nullopt, 0, false};
  }
  if (auto pp = prime_power(p)) {
    return AdmissibleWitness{pp->first, pp->second, false};
  }
  if (p % 2 == 0) {
    if (auto pp = prime_power(p / 2)) {
      return AdmissibleWitness{pp->first, pp->second, true};
    }
  }
  return std::nullopt;
}

Nondegeneracy nondegenerate(const LaurentPoly& alex, std::int64_t p) {
  auto bad = alexander_violations(alex);
  if (!bad.empty()) {
    throw InvalidArgument("nondegenerate: " + bad.front());
  }
  auto witness = admissible_numerator(p);
  if (!witness) {
    throw InvalidArgument("nondegenerate: p = " + std::to_string(p) +
                          " is not of the form a^e or 2a^e; see admissible_numerator");
  }
  // Only the odd-part prime power a^e matters: the square of a 2a^e-th root
  // of unity is an a^e-th root of unity.
  LaurentPoly numerator = alex.numerator();
  Nondegeneracy out;
  out.holds = true;
  if (!witness->prime_a) return out;  // p in {1, 2}: no d > 1 to test
  const std::int64_t a = *witness->prime_a;
  std::int64_t d = 1;
  for (std::int64_t j = 1; j <= witness->exponent_e; ++j) {
    d *= a;
    if (divides(cyclotomic(d), numerator)) {
      out.holds = false;
      out.violating_d = d;
      return out;
    }
  }
  return out;
}

Verdict obstruct_slope(const FieldInvariants& inv, const LaurentPoly& alex,
                       const Slope& slope, AdmissibilityPolicy policy) {
  if (slope.is_infinity() || slope.num <= 0) {
    throw InvalidArgument("obstruct_slope: slope must be finite with p > 0");
  }
  Verdict v;
  auto witness = admissible_numerator(slope.num, policy);
  if (!witness) {
    v.status = VerdictStatus::NotApplicable;
    v.reason = "numerator " + std::to_string(slope.num) +
               " is not of the form a^e or 2a^e";
    return v;
  }
  v.witness = *witness;
  // An SU(2)-abelian surgery with admissible numerator would force
  // dim = |p| over every field; compare the trivial-bundle dimension.
  std::int64_t dim = dim_sharp(inv, slope, Bundle::Trivial).value;
  if (dim > slope.num) {
    v.status = VerdictStatus::NotAbelianDim;
    v.dim_certificate = dim;
    v.reason = "dim " + std::to_string(dim) + " > |p| = " + std::to_string(slope.num);
  } else {
    v.status = VerdictStatus::Possible;
    v.reason = "dim = |p| = " + std::to_string(slope.num) +
               "; the dimension obstruction is silent";
  }
  return v;
}

std::string format_verdict_status(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::NotAbelianDim: return "not_abelian_dim";
    case VerdictStatus::Possible: return "possible";
    case VerdictStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::vector<std::pair<Slope, Verdict>> classify_interval(
    const FieldInvariants& inv, const LaurentPoly& alex, const Slope& lo,
    const Slope& hi, std::int64_t max_den, AdmissibilityPolicy policy) {
  if (lo.is_infinity() || hi.is_infinity() || lo.num <= 0 || hi.num <= 0 ||
      !slope_less(lo, hi)) {
    throw InvalidArgument("classify_interval: need finite positive lo < hi");
  }
  if (max_den < 1) throw InvalidArgument("classify_interval: max_den must be >= 1");

  std::vector<Slope> slopes;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    // p/q in (lo, hi) strictly.
    std::int64_t p_min = (lo.num * q) / lo.den + 1;
    std::int64_t p_max = (hi.num * q - 1) / hi.den + 1;
    for (std::int64_t p = p_min; p <= p_max; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Slope s = make_slope(p, q);
      if (!slope_less(lo, s) || !slope_less(s, hi)) continue;
      slopes.push_back(s);
    }
  }
  std::sort(slopes.begin(), slopes.end(), slope_less);

  std::vector<std::pair<Slope, Verdict>> out;
  out.reserve(slopes.size());
  for (const Slope& s : slopes) {
    out.emplace_back(s, obstruct_slope(inv, alex, s, policy));
  }
  return out;
}

}  // namespace isharp
