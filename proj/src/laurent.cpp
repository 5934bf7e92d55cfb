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

#include "laurent.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace isharp {

LaurentPoly::LaurentPoly(std::int64_t min_exp, std::vector<std::int64_t> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  normalize();
}

void LaurentPoly::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_exp_ += static_cast<std::int64_t>(lead);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) min_exp_ = 0;
}

LaurentPoly LaurentPoly::monomial(std::int64_t exp, std::int64_t coeff) {
  return LaurentPoly(exp, {coeff});
}

LaurentPoly LaurentPoly::from_symmetric_coeffs(const std::vector<std::int64_t>& c) {
  if (c.empty() || c.size() % 2 == 0) {
    throw ParseError(
        "alexander: symmetric coefficient list must have odd length, got " +
        std::to_string(c.size()));
  }
  std::int64_t g = static_cast<std::int64_t>(c.size() / 2);
  return LaurentPoly(-g, c);
}

std::int64_t LaurentPoly::min_exp() const {
  if (is_zero()) throw InvalidArgument("zero polynomial has no support");
  return min_exp_;
}

std::int64_t LaurentPoly::max_exp() const {
  if (is_zero()) throw InvalidArgument("zero polynomial has no support");
  return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

std::int64_t LaurentPoly::coeff(std::int64_t exp) const {
  if (is_zero() || exp < min_exp_ ||
      exp >= min_exp_ + static_cast<std::int64_t>(coeffs_.size())) {
    return 0;
  }
  return coeffs_[static_cast<std::size_t>(exp - min_exp_)];
}

std::int64_t LaurentPoly::evaluate_at_one() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

LaurentPoly LaurentPoly::reversed() const {
  if (is_zero()) return *this;
  std::vector<std::int64_t> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-max_exp(), std::move(rev));
}

LaurentPoly LaurentPoly::numerator() const {
  if (is_zero()) return *this;
  return LaurentPoly(0, coeffs_);
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<std::int64_t> c = coeffs_;
  for (auto& v : c) v = -v;
  return LaurentPoly(min_exp_, std::move(c));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  std::int64_t lo = std::min(min_exp_, o.min_exp_);
  std::int64_t hi = std::max(max_exp(), o.max_exp());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::int64_t e = lo; e <= hi; ++e) {
    c[static_cast<std::size_t>(e - lo)] = coeff(e) + o.coeff(e);
  }
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return LaurentPoly(min_exp_ + o.min_exp_, std::move(c));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::int64_t e = max_exp(); e >= min_exp(); --e) {
    std::int64_t c = coeff(e);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t a = std::abs(c);
    if (a != 1 || e == 0) out += std::to_string(a);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

bool divide_exact(const LaurentPoly& dividend, const LaurentPoly& divisor,
                  LaurentPoly* quotient) {
  if (divisor.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (dividend.is_zero()) {
    if (quotient) *quotient = LaurentPoly::zero();
    return true;
  }
  if (dividend.min_exp() < 0 || divisor.min_exp() < 0) {
    throw InvalidArgument("divide_exact expects ordinary polynomials");
  }
  std::vector<std::int64_t> rem(dividend.raw_coeffs());
  std::int64_t rem_min = dividend.min_exp();
  const auto& div = divisor.raw_coeffs();
  const std::int64_t div_deg = divisor.max_exp();
  const std::int64_t div_lead = div.back();

  std::int64_t deg = rem_min + static_cast<std::int64_t>(rem.size()) - 1;
  if (deg < div_deg) return false;
  std::vector<std::int64_t> quot(static_cast<std::size_t>(deg - div_deg + 1), 0);

  // Plain long division, tracking remainder degrees explicitly; exactness
  // requires the leading coefficient of the divisor to divide each step.
  auto rem_coeff = [&](std::int64_t e) -> std::int64_t& {
    return rem[static_cast<std::size_t>(e - rem_min)];
  };
  for (std::int64_t e = deg; e >= div_deg; --e) {
    std::int64_t c = rem_coeff(e);
    if (c == 0) continue;
    if (c % div_lead != 0) return false;
    std::int64_t q = c / div_lead;
    quot[static_cast<std::size_t>(e - div_deg)] = q;
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(div.size()); ++k) {
      rem_coeff(e - div_deg + divisor.min_exp() + k) -=
          q * div[static_cast<std::size_t>(k)];
    }
  }
  for (std::int64_t v : rem) {
    if (v != 0) return false;
  }
  if (quotient) *quotient = LaurentPoly(0, std::move(quot));
  return true;
}

bool divides(const LaurentPoly& divisor, const LaurentPoly& dividend) {
  return divide_exact(dividend, divisor, nullptr);
}

LaurentPoly cyclotomic(std::int64_t d) {
  if (d < 1) throw InvalidArgument("cyclotomic index must be positive");
  static std::map<std::int64_t, LaurentPoly> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  // t^d - 1 divided by the cyclotomics of all proper divisors.
  std::vector<std::int64_t> xd(static_cast<std::size_t>(d) + 1, 0);
  xd[0] = -1;
  xd[static_cast<std::size_t>(d)] = 1;
  LaurentPoly result(0, std::move(xd));
  for (std::int64_t k = 1; k < d; ++k) {
    if (d % k != 0) continue;
    LaurentPoly q;
    if (!divide_exact(result, cyclotomic(k), &q)) {
      throw Error("cyclotomic: exact division failed for d = " + std::to_string(d));
    }
    result = q;
  }
  cache[d] = result;
  return result;
}

std::vector<std::string> alexander_violations(const LaurentPoly& p) {
  std::vector<std::string> out;
  if (p.is_zero()) {
    out.push_back("alexander polynomial must be nonzero");
    return out;
  }
  if (!p.palindromic()) out.push_back("alexander polynomial must satisfy Delta(t) = Delta(1/t)");
  std::int64_t v = p.evaluate_at_one();
  if (v != 1 && v != -1) out.push_back("alexander polynomial must satisfy Delta(1) = +-1");
  return out;
}

}  // namespace isharp
