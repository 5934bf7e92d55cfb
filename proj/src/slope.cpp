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

#include "slope.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

namespace isharp {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Slope make_slope(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) {
    throw InvalidArgument("make_slope: (0, 0) is not a slope");
  }
  if (std::abs(num) > kSlopeLimit || std::abs(den) > kSlopeLimit) {
    throw InvalidArgument("make_slope: numerator or denominator exceeds " +
                          std::to_string(kSlopeLimit));
  }
  if (den == 0) return Slope{1, 0};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(std::abs(num), den);
  return Slope{num / g, den / g};
}

Slope slope_infinity() { return Slope{1, 0}; }

bool slope_less(const Slope& a, const Slope& b) {
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  if (a.num * b.den != b.num * a.den) return a.num * b.den < b.num * a.den;
  return a.den < b.den;
}

std::string format_slope(const Slope& s) {
  if (s.is_infinity()) return "inf";
  if (s.den == 1) return std::to_string(s.num);
  return std::to_string(s.num) + "/" + std::to_string(s.den);
}

Slope parse_slope(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t == "inf" || t == "infinity" || t == "oo") return slope_infinity();
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) throw ParseError("parse_slope: empty integer in '" + text + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("parse_slope: cannot parse '" + text + "'");
    }
    if (pos != s.size()) throw ParseError("parse_slope: cannot parse '" + text + "'");
    return v;
  };
  std::size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) return make_slope(parse_int(t), 1);
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (den.find('/') != std::string::npos) {
      throw ParseError("parse_slope: cannot parse '" + text + "'");
    }
    return make_slope(parse_int(num), parse_int(den));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("parse_slope: ") + e.what());
  }
}

SlopeRep canonical_rep(const Slope& s) { return SlopeRep{s.num, s.den}; }

Slope slope_of_rep(const SlopeRep& r) { return make_slope(r.p, r.q); }

std::int64_t det(const SlopeRep& a, const SlopeRep& b) {
  return a.p * b.q - b.p * a.q;
}

std::optional<Triad> is_triad(const Slope& r0, const Slope& r1, const Slope& r2) {
  const std::array<SlopeRep, 3> base = {canonical_rep(r0), canonical_rep(r1),
                                        canonical_rep(r2)};
  // Lexicographic sign enumeration, +1 before -1 in each position; the first
  // witness is returned, so the result is deterministic.
  for (int mask = 0; mask < 8; ++mask) {
    std::array<SlopeRep, 3> reps = base;
    for (int i = 0; i < 3; ++i) {
      if (mask & (4 >> i)) {
        reps[i].p = -reps[i].p;
        reps[i].q = -reps[i].q;
      }
    }
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      ok = det(reps[i], reps[(i + 1) % 3]) == 1;
    }
    if (ok) return Triad{{r0, r1, r2}, reps};
  }
  return std::nullopt;
}

Triad rotate_triad(const Triad& t, int k) {
  Triad out;
  for (int i = 0; i < 3; ++i) {
    out.slopes[i] = t.slopes[(i + k) % 3];
    out.reps[i] = t.reps[(i + k) % 3];
  }
  return out;
}

namespace {

// Stern-Brocot parents of p0/q0 (q0 > 1): the upper parent c/d is the unique
// fraction with c*q0 - p0*d = 1 and 1 <= d < q0; the lower parent is the
// complementary (p0-c)/(q0-d). Both lie in [floor(r0), ceil(r0)] and r0 is
// their mediant.
void farey_parents(const Slope& r0, SlopeRep& upper, SlopeRep& lower) {
  std::int64_t p = r0.num, q = r0.den;
  // Solve c*q - p*d = 1 by scanning d; q is small in every intended use, but
  // use the extended Euclid form for robustness: d = -p^{-1} mod q.
  std::int64_t d = -1;
  {
    // Extended gcd for inverse of p modulo q.
    std::int64_t a = ((p % q) + q) % q, m = q;
    std::int64_t x0 = 1, x1 = 0;  // coefficients of a
    std::int64_t r0i = a, r1i = m;
    while (r1i != 0) {
      std::int64_t qq = r0i / r1i;
      std::int64_t tmp = r0i - qq * r1i;
      r0i = r1i;
      r1i = tmp;
      tmp = x0 - qq * x1;
      x0 = x1;
      x1 = tmp;
    }
    // r0i = gcd = 1 since gcd(p, q) = 1; x0 = p^{-1} mod q.
    std::int64_t inv = ((x0 % q) + q) % q;
    d = ((q - inv) % q + q) % q;  // d = -p^{-1} mod q
    if (d == 0) d = q;            // cannot happen for q > 1, kept as guard
  }
  std::int64_t c = (1 + p * d) / q;
  upper = SlopeRep{c, d};
  lower = SlopeRep{p - c, q - d};
}

}  // namespace

FareySplit farey_split(const Slope& r0) {
  if (r0.is_infinity()) throw InvalidArgument("farey_split: slope is infinite");
  if (r0.is_zero()) throw InvalidArgument("farey_split: slope is zero");
  if (r0.is_integer()) throw InvalidArgument("farey_split: slope is an integer");

  SlopeRep u, l;
  farey_parents(r0, u, l);

  // Output order follows the worked examples: (upper, lower) in general; for
  // half-integers with positive numerator the parents are listed ascending.
  bool ascending = (r0.den == 2 && r0.num > 0);
  SlopeRep first = ascending ? l : u;
  SlopeRep second = ascending ? u : l;

  std::int64_t p3 = (r0.num > 0 ? 1 : -1) * std::abs(first.p - second.p);
  std::int64_t q3 = std::abs(first.q - second.q);
  Slope r3 = (p3 == 0 && q3 == 0) ? slope_infinity() : make_slope(p3, q3);

  return FareySplit{slope_of_rep(first), slope_of_rep(second), r3};
}

FareyTriads farey_triads(const Slope& r0) {
  FareySplit s = farey_split(r0);
  Slope u = slope_less(s.r1, s.r2) ? s.r2 : s.r1;
  Slope l = slope_less(s.r1, s.r2) ? s.r1 : s.r2;
  auto upper = is_triad(r0, u, l);
  auto lower = is_triad(l, u, s.r3);
  if (!upper || !lower) {
    throw Error("farey_triads: split of " + format_slope(r0) +
                " does not fit the double-triad diagram");
  }
  return FareyTriads{*upper, *lower};
}

FareyNode farey_tree(const Slope& r) {
  FareyNode node;
  node.slope = r;
  if (r.is_integer() || r.is_infinity()) return node;
  node.triads = farey_triads(r);
  FareySplit s = farey_split(r);
  node.children.push_back(farey_tree(s.r1));
  node.children.push_back(farey_tree(s.r2));
  node.children.push_back(farey_tree(s.r3));
  return node;
}

int farey_depth(const FareyNode& node) {
  int d = 0;
  for (const auto& c : node.children) d = std::max(d, 1 + farey_depth(c));
  return d;
}

std::vector<Triad> enumerate_triads(std::int64_t max_den, std::int64_t max_num) {
  // A triad is determined by an ordered pair of representatives (A, B) with
  // det(A, B) = 1: the third representative is -(A + B). Enumerate all slope
  // pairs within bounds, canonicalize by rotating the even-numerator slope to
  // the middle, and dedupe.
  std::vector<Slope> slopes;
  slopes.push_back(slope_infinity());
  for (std::int64_t q = 1; q <= max_den; ++q) {
    for (std::int64_t p = -max_num; p <= max_num; ++p) {
      if (std::gcd(std::abs(p), q) == 1) slopes.push_back(Slope{p, q});
    }
  }

  auto in_bounds = [&](const Slope& s) {
    return (s.is_infinity() && max_den >= 0) ||
           (s.den <= max_den && std::abs(s.num) <= max_num);
  };

  std::vector<Triad> out;
  std::set<std::array<std::int64_t, 6>> seen;
  for (const Slope& a : slopes) {
    for (const Slope& b : slopes) {
      SlopeRep ra = canonical_rep(a), rb = canonical_rep(b);
      std::int64_t d = det(ra, rb);
      if (d != 1 && d != -1) continue;
      if (d == -1) {
        rb.p = -rb.p;
        rb.q = -rb.q;
      }
      SlopeRep rc{-(ra.p + rb.p), -(ra.q + rb.q)};
      Slope c = slope_of_rep(rc);
      if (!in_bounds(c)) continue;

      Triad t{{a, b, c}, {ra, rb, rc}};
      // Rotate the unique even-numerator slope into the middle.
      int even = -1;
      for (int i = 0; i < 3; ++i) {
        if (t.slopes[i].num % 2 == 0) even = i;
      }
      t = rotate_triad(t, (even + 2) % 3);
      std::array<std::int64_t, 6> key = {t.slopes[0].num, t.slopes[0].den,
                                         t.slopes[1].num, t.slopes[1].den,
                                         t.slopes[2].num, t.slopes[2].den};
      if (seen.insert(key).second) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(), [](const Triad& x, const Triad& y) {
    for (int i = 0; i < 3; ++i) {
      if (x.slopes[i] != y.slopes[i]) return slope_less(x.slopes[i], y.slopes[i]);
    }
    return false;
  });
  return out;
}

}  // namespace isharp
