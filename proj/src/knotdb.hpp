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
// Curated knot records. The database is a JSON array of records:
//
//   [{ "name": "T(2,3)", "genus": 1, "alexander": [1, -1, 1],
//      "invariants": [{"char": 0, "nu": 1, "r": 1, "shape": "V"},
//                     {"char": 2, "nu": 4, "r": 4, "shape": "W",
//                      "provenance": "paper-remark"}],
//      "annotations": {"su2_abelian_slopes": ["6", "6-1/n", "6+1/n"]},
//      "mirror_of": "left-trefoil" }, ...]
//
// Alexander coefficients are the exponent-symmetric list, lowest exponent
// first (odd length, centered at t^0). "shape" is "V", "W" or "?"; omitted
// shape loads as Unknown. "provenance" defaults to "theorem"; facts imported
// from attributed remarks are tagged "paper-remark" so tests can separate
// hard facts from attributed ones. Validation is a lint, not a load gate:
// only structural problems make load_db fail.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dim.hpp"
#include "laurent.hpp"

namespace isharp {

struct InvariantEntry {
  FieldInvariants inv;
  std::string provenance = "theorem";  // or "paper-remark"
};

struct Annotations {
  std::vector<std::string> su2_abelian_slopes;  // "6", "6-1/n", "6+1/n", ...
  std::vector<std::string> notes;

  bool empty() const { return su2_abelian_slopes.empty() && notes.empty(); }
  friend bool operator==(const Annotations&, const Annotations&) = default;
};

struct KnotRecord {
  std::string name;
  std::optional<std::int64_t> genus;
  LaurentPoly alexander;
  std::vector<InvariantEntry> invariants;
  Annotations annotations;
  std::optional<std::string> mirror_of;
};

// The curated set: unknot, both trefoils (C and F2 data), figure-eight,
// twist knots K3..K6 over C, and T(2,5).
const std::vector<KnotRecord>& builtin_db();

// Intrinsic record lints; each violation names the constraint it breaks
// ("r >= |nu|", "genus-one bound", ...). speculative additionally applies
// conjectural expectations (char-2 entries W-shaped with nu, r divisible by
// 4), which are never part of the default validation.
std::vector<std::string> validate(const KnotRecord& record, bool speculative = false);

struct DbViolation {
  std::string knot;
  std::string violation;
};

// Intrinsic lints for every record plus cross-record checks (mirror pairs,
// duplicate names).
std::vector<DbViolation> validate_db(const std::vector<KnotRecord>& records,
                                     bool speculative = false);

struct LoadResult {
  std::vector<KnotRecord> records;
  std::vector<DbViolation> lints;
};

LoadResult load_db(const std::string& path);
LoadResult load_db_from_string(const std::string& json_text);
void save_db(const std::vector<KnotRecord>& records, const std::string& path);
std::string save_db_to_string(const std::vector<KnotRecord>& records);

// Name lookup with normalization (case and punctuation insensitive) plus a
// small alias table: T23, fig8, K1, K2, ... resolve to their records.
const KnotRecord* find_knot(const std::vector<KnotRecord>& records,
                            const std::string& name);

// The per-field invariants of a record; throws UnknownField when the record
// has no entry for the characteristic.
const FieldInvariants& invariants_for(const KnotRecord& record, FieldLabel field);

// Expands curated slope annotations: "p/q" literally, "b-1/n" and "b+1/n"
// as families with 1 <= n <= max_den.
std::vector<Slope> expand_curated_slopes(const std::vector<std::string>& entries,
                                         std::int64_t max_den);

}  // namespace isharp
