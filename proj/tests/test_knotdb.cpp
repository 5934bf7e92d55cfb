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

#include <cstdio>
#include <random>

#include "knotdb.hpp"

using namespace isharp;

namespace {
const FieldLabel kC{0};
const FieldLabel kF2{2};
}  // namespace

TEST_CASE("builtin_db curated values") {
  const auto& db = builtin_db();

  const KnotRecord* fig8 = find_knot(db, "figure-eight");
  REQUIRE(fig8 != nullptr);
  auto inv = invariants_for(*fig8, kC);
  CHECK(inv.nu == 0);
  CHECK(inv.r == 2);
  CHECK(inv.shape == Shape::W);

  const KnotRecord* t23 = find_knot(db, "T(2,3)");
  REQUIRE(t23 != nullptr);
  inv = invariants_for(*t23, kF2);
  CHECK(inv.nu == 4);
  CHECK(inv.r == 4);
  CHECK(inv.shape == Shape::W);
  inv = invariants_for(*t23, kC);
  CHECK(inv.nu == 1);
  CHECK(inv.r == 1);
  CHECK(inv.shape == Shape::V);

  const KnotRecord* t25 = find_knot(db, "T(2,5)");
  REQUIRE(t25 != nullptr);
  inv = invariants_for(*t25, kC);
  CHECK(inv.nu == 3);
  CHECK(inv.r == 3);
  CHECK(inv.shape == Shape::V);
  CHECK(t25->genus == 2);

  // Twist knots over C per the worked family.
  for (auto [name, nu, r] : {std::tuple{"K3", -1, 3}, {"K5", -1, 5}}) {
    const KnotRecord* k = find_knot(db, name);
    REQUIRE(k != nullptr);
    inv = invariants_for(*k, kC);
    CHECK(inv.nu == nu);
    CHECK(inv.r == r);
    CHECK(inv.shape == Shape::V);
    CHECK(k->genus == 1);
  }
  for (auto [name, r] : {std::tuple{"K4", 4}, {"K6", 6}}) {
    const KnotRecord* k = find_knot(db, name);
    REQUIRE(k != nullptr);
    inv = invariants_for(*k, kC);
    CHECK(inv.nu == 0);
    CHECK(inv.r == r);
    CHECK(inv.shape == Shape::Unknown);
  }

  // Aliases.
  CHECK(find_knot(db, "T23") == t23);
  CHECK(find_knot(db, "fig8") == fig8);
  CHECK(find_knot(db, "K2") == fig8);
  CHECK(find_knot(db, "K1") == find_knot(db, "left-trefoil"));
  CHECK(find_knot(db, "no-such-knot") == nullptr);

  // Missing field.
  CHECK_THROWS_AS(invariants_for(*fig8, kF2), UnknownField);
}

TEST_CASE("builtin_db passes validation") {
  auto violations = validate_db(builtin_db());
  for (const auto& v : violations) {
    CAPTURE(v.knot);
    CAPTURE(v.violation);
  }
  CHECK(violations.empty());
  // The speculative char-2 lints also pass for the curated data.
  CHECK(validate_db(builtin_db(), true).empty());
}

TEST_CASE("validate flags constraint violations by name") {
  KnotRecord bad;
  bad.name = "bad";
  bad.alexander = LaurentPoly::one();
  bad.invariants.push_back(
      {FieldInvariants{kC, 3, 2, Shape::V}, "theorem"});
  auto v = validate(bad);
  REQUIRE(!v.empty());
  bool found = false;
  for (const auto& s : v) found = found || s.find("r >= |nu|") != std::string::npos;
  CHECK(found);

  KnotRecord genus1;
  genus1.name = "genus1";
  genus1.genus = 1;
  genus1.alexander = LaurentPoly::one();
  genus1.invariants.push_back(
      {FieldInvariants{kC, 2, 2, Shape::V}, "theorem"});
  v = validate(genus1);
  found = false;
  for (const auto& s : v) found = found || s.find("genus-one bound") != std::string::npos;
  CHECK(found);

  // Same invariants over F2 are fine (the bound needs char != 2).
  genus1.invariants[0].inv.field = kF2;
  v = validate(genus1);
  for (const auto& s : v) CHECK(s.find("genus-one bound") == std::string::npos);
}

TEST_CASE("save and load roundtrip") {
  const auto& db = builtin_db();
  std::string text = save_db_to_string(db);
  LoadResult loaded = load_db_from_string(text);
  CHECK(loaded.lints.empty());
  REQUIRE(loaded.records.size() == db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    CHECK(loaded.records[i].name == db[i].name);
    CHECK(loaded.records[i].genus == db[i].genus);
    CHECK(loaded.records[i].alexander == db[i].alexander);
    CHECK(loaded.records[i].mirror_of == db[i].mirror_of);
    CHECK(loaded.records[i].annotations == db[i].annotations);
    REQUIRE(loaded.records[i].invariants.size() == db[i].invariants.size());
    for (std::size_t k = 0; k < db[i].invariants.size(); ++k) {
      CHECK(loaded.records[i].invariants[k].inv == db[i].invariants[k].inv);
      CHECK(loaded.records[i].invariants[k].provenance ==
            db[i].invariants[k].provenance);
    }
  }
  // Byte-identical second serialization.
  CHECK(save_db_to_string(loaded.records) == text);

  // Through a file as well.
  std::string path = "test_knotdb_roundtrip.json";
  save_db(db, path);
  LoadResult from_file = load_db(path);
  CHECK(save_db_to_string(from_file.records) == text);
  std::remove(path.c_str());
}

TEST_CASE("load_db diagnostics and lints") {
  // Malformed coefficient list: even length.
  CHECK_THROWS_WITH_AS(
      load_db_from_string(R"([{"name":"x","alexander":[1,2],"invariants":[]}])"),
      doctest::Contains("alexander"), ParseError);

  // Missing required field.
  CHECK_THROWS_WITH_AS(load_db_from_string(R"([{"alexander":[1],"invariants":[]}])"),
                       doctest::Contains("name"), ParseError);

  // Not JSON at all.
  CHECK_THROWS_AS(load_db_from_string("not json"), ParseError);

  // Omitted shape loads as Unknown; odd nu normalizes to V.
  auto loaded = load_db_from_string(
      R"([{"name":"x","alexander":[1],
           "invariants":[{"char":0,"nu":0,"r":2},{"char":3,"nu":1,"r":1}]}])");
  CHECK(loaded.records[0].invariants[0].inv.shape == Shape::Unknown);
  CHECK(loaded.records[0].invariants[1].inv.shape == Shape::V);

  // Constraint violations are lints, not load failures.
  loaded = load_db_from_string(
      R"([{"name":"x","alexander":[1],
           "invariants":[{"char":0,"nu":3,"r":1,"shape":"V"}]}])");
  CHECK(loaded.records.size() == 1);
  CHECK(!loaded.lints.empty());
}

TEST_CASE("curated data consistent with lens-space dimensions") {
  const auto& db = builtin_db();
  const KnotRecord* t23 = find_knot(db, "T23");
  REQUIRE(t23 != nullptr);
  for (FieldLabel f : {kC, kF2}) {
    const auto& inv = invariants_for(*t23, f);
    CHECK(dim_sharp(inv, make_slope(5, 1), Bundle::Trivial).value == 5);
    CHECK(dim_sharp(inv, make_slope(6, 1), Bundle::Meridian).value == 6);
    CHECK(dim_sharp(inv, make_slope(7, 1), Bundle::Trivial).value == 7);
  }
}

TEST_CASE("mirror pairs satisfy the mirror identity at random slopes") {
  const auto& db = builtin_db();
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::int64_t> num(-80, 80);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  for (const KnotRecord& r : db) {
    if (!r.mirror_of) continue;
    const KnotRecord* m = find_knot(db, *r.mirror_of);
    REQUIRE(m != nullptr);
    for (const InvariantEntry& e : r.invariants) {
      const auto& other = invariants_for(*m, e.inv.field);
      int checked = 0;
      while (checked < 100) {
        std::int64_t p = num(rng), q = den(rng);
        if (p == 0 && q == 0) continue;
        Slope s = make_slope(p, q);
        Slope neg = s.is_infinity() ? s : make_slope(-s.num, s.den);
        ++checked;
        for (Bundle b : {Bundle::Trivial, Bundle::Meridian}) {
          CHECK(dim_sharp(e.inv, s, b).value == dim_sharp(other, neg, b).value);
        }
      }
    }
  }
}

TEST_CASE("expand_curated_slopes") {
  auto slopes = expand_curated_slopes({"6", "6-1/n", "6+1/n"}, 3);
  // 6, 5, 11/2, 17/3, 7, 13/2, 19/3 -> sorted ascending.
  REQUIRE(slopes.size() == 7);
  CHECK(slopes.front() == make_slope(5, 1));
  CHECK(slopes.back() == make_slope(7, 1));
  bool has6 = false;
  for (const Slope& s : slopes) has6 = has6 || s == make_slope(6, 1);
  CHECK(has6);
  CHECK_THROWS_AS(expand_curated_slopes({"x-1/n"}, 3), ParseError);
}
