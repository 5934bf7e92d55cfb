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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "su2.hpp"

using namespace isharp;

namespace {

const FieldLabel kF2{2};

Slope sl(std::int64_t p, std::int64_t q) { return make_slope(p, q); }

// Brute-force factorization oracle for the admissible-numerator predicate.
bool admissible_oracle(std::int64_t p) {
  if (p < 1) return false;
  auto factor = [](std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t d = 2; d * d <= n; ++d) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e) f.emplace_back(d, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
  };
  auto f = factor(p);
  if (f.empty()) return true;                      // p = 1
  if (f.size() == 1) return true;                  // a^e
  if (f.size() == 2 && f[0].first == 2 && f[0].second == 1) return true;  // 2*a^e
  return false;
}

// Numeric cross-check: evaluate the Laurent polynomial at every primitive
// d-th root of unity and compare with the exact divisibility answer.
bool numeric_root_check(const LaurentPoly& alex, std::int64_t d) {
  constexpr double kTol = 1e-8;
  const double pi = 3.14159265358979323846;
  for (std::int64_t k = 1; k <= d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    std::complex<double> root = std::polar(1.0, 2.0 * pi * double(k) / double(d));
    std::complex<double> value = 0;
    for (std::int64_t e = alex.min_exp(); e <= alex.max_exp(); ++e) {
      value += double(alex.coeff(e)) * std::pow(root, double(e));
    }
    if (std::abs(value) < kTol) return false;  // vanishing root found
  }
  return true;
}

const LaurentPoly kTrefoilAlex = LaurentPoly::from_symmetric_coeffs({1, -1, 1});
const LaurentPoly kUnknotAlex = LaurentPoly::one();

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  auto p = LaurentPoly::from_symmetric_coeffs({1, -1, 1});
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(0) == -1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.evaluate_at_one() == 1);
  CHECK(p.palindromic());
  CHECK(p.numerator().min_exp() == 0);
  CHECK(p.to_string() == "t - 1 + t^-1");

  auto q = LaurentPoly(0, {-1, 0, 1});  // t^2 - 1
  LaurentPoly quot;
  CHECK(divide_exact(q, LaurentPoly(0, {1, 1}), &quot));
  CHECK(quot == LaurentPoly(0, {-1, 1}));
  CHECK_FALSE(divides(LaurentPoly(0, {1, 1, 1}), q));
  CHECK_THROWS_AS(LaurentPoly::from_symmetric_coeffs({1, 2}), ParseError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == LaurentPoly(0, {-1, 1}));      // t - 1
  CHECK(cyclotomic(2) == LaurentPoly(0, {1, 1}));       // t + 1
  CHECK(cyclotomic(5) == LaurentPoly(0, {1, 1, 1, 1, 1}));
  CHECK(cyclotomic(6) == LaurentPoly(0, {1, -1, 1}));   // t^2 - t + 1

  // Phi_{a^j}(1) = a for prime a and j >= 1; Phi_d divides t^d - 1 exactly.
  for (std::int64_t a : {2, 3, 5, 7}) {
    std::int64_t d = 1;
    for (int j = 1; j <= 3; ++j) {
      d *= a;
      CHECK(cyclotomic(d).evaluate_at_one() == a);
    }
  }
  for (std::int64_t d = 1; d <= 40; ++d) {
    std::vector<std::int64_t> xd(static_cast<std::size_t>(d) + 1, 0);
    xd[0] = -1;
    xd[static_cast<std::size_t>(d)] = 1;
    CHECK(divides(cyclotomic(d), LaurentPoly(0, std::move(xd))));
  }
  // Degree of Phi_d is Euler phi(d).
  CHECK(cyclotomic(12).max_exp() == 4);
  CHECK(cyclotomic(105).max_exp() == 48);
}

TEST_CASE("admissible_numerator") {
  auto w = admissible_numerator(7);
  REQUIRE(w.has_value());
  CHECK(w->prime_a == 7);
  CHECK(w->exponent_e == 1);
  CHECK_FALSE(w->doubled);
  CHECK(w->reconstruct() == 7);

  w = admissible_numerator(6);
  REQUIRE(w.has_value());
  CHECK(w->prime_a == 3);
  CHECK(w->exponent_e == 1);
  CHECK(w->doubled);

  CHECK_FALSE(admissible_numerator(12).has_value());

  w = admissible_numerator(1);
  REQUIRE(w.has_value());
  CHECK(w->exponent_e == 0);
  CHECK_FALSE(w->prime_a.has_value());
  CHECK(w->reconstruct() == 1);

  // 2 is reported as the prime power 2^1, not as 2*a^0.
  w = admissible_numerator(2);
  REQUIRE(w.has_value());
  CHECK(w->prime_a == 2);
  CHECK(w->exponent_e == 1);

  // Policy: only p = 1 changes under the positive-exponent requirement.
  CHECK_FALSE(admissible_numerator(1, AdmissibilityPolicy::RequirePositiveExponent)
                  .has_value());
  CHECK(admissible_numerator(2, AdmissibilityPolicy::RequirePositiveExponent)
            .has_value());

  for (std::int64_t p = 1; p <= 1000; ++p) {
    CHECK(admissible_numerator(p).has_value() == admissible_oracle(p));
    if (auto witness = admissible_numerator(p)) {
      CHECK(witness->reconstruct() == p);
    }
  }
}

TEST_CASE("nondegenerate") {
  // Trefoil, p = 6: only Phi_3 is tested and t^2 - t + 1 = Phi_6 is not
  // divisible by it.
  auto n = nondegenerate(kTrefoilAlex, 6);
  CHECK(n.holds);
  CHECK(kTrefoilAlex.numerator() == cyclotomic(6));

  CHECK(nondegenerate(kUnknotAlex, 7).holds);
  CHECK(nondegenerate(kUnknotAlex, 1).holds);
  CHECK(nondegenerate(kUnknotAlex, 2).holds);

  CHECK_THROWS_AS(nondegenerate(kTrefoilAlex, 12), InvalidArgument);
  CHECK_THROWS_AS(nondegenerate(LaurentPoly(0, {1, 1}), 7), InvalidArgument);

  // The theorem as an executable property: every valid Alexander polynomial
  // passes for every admissible p, cross-checked numerically at the roots.
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
  std::uniform_int_distribution<int> genus(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int g = genus(rng);
    std::vector<std::int64_t> half(static_cast<std::size_t>(g));
    std::int64_t sum = 0;
    for (auto& c : half) {
      c = coeff(rng);
      sum += c;
    }
    // Center coefficient forces Delta(1) = +-1.
    std::int64_t c0 = ((rng() & 1) ? 1 : -1) - 2 * sum;
    std::vector<std::int64_t> coeffs(half.rbegin(), half.rend());
    coeffs.push_back(c0);
    coeffs.insert(coeffs.end(), half.begin(), half.end());
    LaurentPoly alex = LaurentPoly::from_symmetric_coeffs(coeffs);
    REQUIRE(alexander_violations(alex).empty());

    for (std::int64_t p : {2, 3, 4, 5, 8, 9, 6, 10, 14, 27, 25, 49, 121}) {
      auto nd = nondegenerate(alex, p);
      CHECK(nd.holds);
      // Numeric oracle over the divisors d | a^e, d > 1.
      auto witness = admissible_numerator(p);
      REQUIRE(witness.has_value());
      if (witness->prime_a) {
        std::int64_t d = 1;
        for (std::int64_t j = 1; j <= witness->exponent_e; ++j) {
          d *= *witness->prime_a;
          CHECK(numeric_root_check(alex, d));
        }
      }
    }
  }
}

TEST_CASE("obstruct_slope") {
  auto t23 = make_invariants(kF2, 4, 4, Shape::W);

  // Slope 3: dim = 4 + 1 = 5 > 3.
  auto v = obstruct_slope(t23, kTrefoilAlex, sl(3, 1));
  CHECK(v.status == VerdictStatus::NotAbelianDim);
  CHECK(v.dim_certificate == 5);

  // Slope 29/5 = 6 - 1/5: dim = 20 + 9 = 29 = |p|, 29 prime.
  v = obstruct_slope(t23, kTrefoilAlex, sl(29, 5));
  CHECK(v.status == VerdictStatus::Possible);

  // Non-admissible numerator.
  v = obstruct_slope(t23, kTrefoilAlex, sl(12, 1));
  CHECK(v.status == VerdictStatus::NotApplicable);

  // Genus-3 instanton L-space knot over F2: nu = r = 6, slope 5 gives 7 > 5.
  auto g3 = make_invariants(kF2, 6, 6, Shape::W);
  v = obstruct_slope(g3, kTrefoilAlex, sl(5, 1));
  CHECK(v.status == VerdictStatus::NotAbelianDim);
  CHECK(v.dim_certificate == 7);

  CHECK_THROWS_AS(obstruct_slope(t23, kTrefoilAlex, sl(-3, 1)), InvalidArgument);
  CHECK_THROWS_AS(obstruct_slope(t23, kTrefoilAlex, slope_infinity()), InvalidArgument);
}

TEST_CASE("classify_interval for the trefoil over F2") {
  auto t23 = make_invariants(kF2, 4, 4, Shape::W);
  auto results = classify_interval(t23, kTrefoilAlex, sl(2, 1), sl(6, 1), 12);

  std::vector<Slope> survivors;
  for (const auto& [s, v] : results) {
    CHECK(slope_less(sl(2, 1), s));
    CHECK(slope_less(s, sl(6, 1)));
    if (v.status == VerdictStatus::Possible) survivors.push_back(s);
  }

  // Survivors are exactly the admissible slopes in [4, 6) minus the
  // W-exceptional integer slope 4 (trivial-bundle dim r + 2 = 6 > 4).
  for (const Slope& s : survivors) {
    CHECK(s.num >= 4 * s.den);
    CHECK(admissible_numerator(s.num).has_value());
    CHECK_FALSE(s == sl(4, 1));
  }
  // The family 6 - 1/n, n <= 12, is among the survivors.
  for (std::int64_t n = 1; n <= 12; ++n) {
    Slope s = sl(6 * n - 1, n);
    bool found = false;
    for (const Slope& t : survivors) found = found || t == s;
    CHECK(found);
  }
  // Zero survivors below 4.
  for (const auto& [s, v] : results) {
    if (slope_less(s, sl(4, 1)) && v.status == VerdictStatus::Possible) {
      FAIL("unexpected survivor below 4: " << format_slope(s));
    }
  }
  // The exceptional slope 4 itself is flagged, not a survivor.
  for (const auto& [s, v] : results) {
    if (s == sl(4, 1)) CHECK(v.status == VerdictStatus::NotAbelianDim);
  }

  // Unknot: every admissible slope survives (lens spaces).
  auto unknot = make_invariants(FieldLabel{0}, 0, 0, Shape::W);
  for (const auto& [s, v] :
       classify_interval(unknot, kUnknotAlex, sl(1, 2), sl(10, 1), 6)) {
    if (admissible_numerator(s.num)) {
      CHECK(v.status == VerdictStatus::Possible);
    } else {
      CHECK(v.status == VerdictStatus::NotApplicable);
    }
  }
}

TEST_CASE("verdict monotonicity for L-space invariants") {
  // r = nu: no slope >= nu is ever flagged, except the W-exceptional nu.
  for (std::int64_t nu : {1, 3, 4, 6}) {
    Shape shape = (nu % 2 == 0) ? Shape::W : Shape::V;
    auto iv = make_invariants(kF2, nu, nu, shape);
    for (std::int64_t q = 1; q <= 8; ++q) {
      for (std::int64_t p = nu * q; p <= nu * q + 40; ++p) {
        if (std::gcd(p, q) != 1 || p <= 0) continue;
        auto v = obstruct_slope(iv, kUnknotAlex, sl(p, q));
        if (v.status != VerdictStatus::NotAbelianDim) continue;
        CHECK(shape == Shape::W);
        CHECK(sl(p, q) == sl(nu, 1));
      }
    }
  }
}
