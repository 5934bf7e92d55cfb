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

namespace isharp {

// Integer Laurent polynomial with finite support, stored densely as the
// coefficient run [min_exp, min_exp + coeffs.size()). All arithmetic is
// exact over the integers; there is no floating point anywhere in the
// decision paths that use these.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // the zero polynomial

  // coeffs[i] is the coefficient of t^(min_exp + i).
  LaurentPoly(std::int64_t min_exp, std::vector<std::int64_t> coeffs);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(0, {1}); }
  static LaurentPoly monomial(std::int64_t exp, std::int64_t coeff = 1);

  // Symmetric coefficient list c_{-g} ... c_0 ... c_g (odd length).
  static LaurentPoly from_symmetric_coeffs(const std::vector<std::int64_t>& c);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exp() const;
  std::int64_t max_exp() const;
  std::int64_t coeff(std::int64_t exp) const;
  const std::vector<std::int64_t>& raw_coeffs() const { return coeffs_; }

  std::int64_t evaluate_at_one() const;
  // Substitution t -> 1/t.
  LaurentPoly reversed() const;
  bool palindromic() const { return *this == reversed(); }

  // Shift to an ordinary polynomial (min_exp = 0) by multiplying by a power
  // of t; the numerator polynomial of the fraction this Laurent represents.
  LaurentPoly numerator() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;  // "t^2 - t + 1 - t^-1" style

 private:
  void normalize();

  std::int64_t min_exp_ = 0;
  std::vector<std::int64_t> coeffs_;  // empty iff zero; ends nonzero
};

// Exact Euclidean division of ordinary polynomials (min_exp >= 0 required
// for both). Returns true and fills quotient iff divisor divides dividend
// exactly over the integers.
bool divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor,
                  LaurentPoly* quotient);

bool divides(const LaurentPoly& divisor, const LaurentPoly& dividend);

// The d-th cyclotomic polynomial, by iterated exact division of t^d - 1 by
// the cyclotomic polynomials of the proper divisors of d. Memoized.
LaurentPoly cyclotomic(std::int64_t d);

// Constraints an Alexander polynomial must satisfy: palindromic and
// Delta(1) = +-1. Returns violation strings, empty if valid.
std::vector<std::string> alexander_violations(const LaurentPoly& p);

}  // namespace isharp
