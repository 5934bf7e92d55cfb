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
// SU(2)-abelian obstructions for surgery slopes. An SU(2)-abelian p/q-
// surgery with admissible numerator p (p = a^e or 2a^e, a prime) forces the
// framed instanton homology to have dimension exactly |p| over every field;
// a strictly larger dimension therefore obstructs. The nondegeneracy of the
// Alexander polynomial at the relevant roots of unity is what makes the
// admissible case work, and it is checked by exact cyclotomic divisibility,
// never by floating point.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dim.hpp"
#include "laurent.hpp"
#include "slope.hpp"

namespace isharp {

// Witness that p = a^e or 2a^e. p in {1, 2} is represented with e = 0 and
// no prime. The search prefers the plain prime-power form and the smallest
// prime, so the witness is deterministic.
struct AdmissibleWitness {
  std::optional<std::int64_t> prime_a;
  std::int64_t exponent_e = 0;
  bool doubled = false;

  std::int64_t reconstruct() const;
};

std::optional<AdmissibleWitness> admissible_numerator(std::int64_t p);

// Some statements need e >= 1 ("natural number e"); only p = 1 differs
// between the two policies, since 2 = 2^1 already has a positive exponent.
enum class AdmissibilityPolicy { AllowExponentZero, RequirePositiveExponent };

std::optional<AdmissibleWitness> admissible_numerator(std::int64_t p,
                                                      AdmissibilityPolicy policy);

struct Nondegeneracy {
  bool holds = false;
  std::optional<std::int64_t> violating_d;
};

// For admissible p with odd part a^e: holds iff no cyclotomic polynomial
// Phi_d with d | a^e, d > 1 divides the numerator polynomial of alex.
// (d = 1 is automatic from Delta(1) = +-1.) Throws InvalidArgument for
// non-admissible p or an invalid Alexander polynomial.
Nondegeneracy nondegenerate(const LaurentPoly& alex, std::int64_t p);

enum class VerdictStatus { NotAbelianDim, Possible, NotApplicable };

std::string format_verdict_status(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::NotApplicable;
  std::string reason;
  std::optional<std::int64_t> dim_certificate;   // for NotAbelianDim
  std::optional<AdmissibleWitness> witness;      // for admissible p
};

// Dimension obstruction at a single slope (finite, p > 0):
//   - NotApplicable when p is not admissible under the policy;
//   - NotAbelianDim when dim_sharp(inv, slope, trivial) > p;
//   - Possible otherwise (the obstruction is silent, nothing is asserted).
Verdict obstruct_slope(const FieldInvariants& inv, const LaurentPoly& alex,
                       const Slope& slope,
                       AdmissibilityPolicy policy = AdmissibilityPolicy::AllowExponentZero);

// All reduced p/q in the open interval (lo, hi) with q <= max_den, sorted by
// value, with their verdicts.
std::vector<std::pair<Slope, Verdict>> classify_interval(
    const FieldInvariants& inv, const LaurentPoly& alex, const Slope& lo,
    const Slope& hi, std::int64_t max_den,
    AdmissibilityPolicy policy = AdmissibilityPolicy::AllowExponentZero);

}  // namespace isharp
