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

#include "knotdb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace isharp {

using nlohmann::json;

namespace {

KnotRecord record(std::string name, std::optional<std::int64_t> genus,
                  std::vector<std::int64_t> alex,
                  std::vector<InvariantEntry> invs, Annotations ann = {},
                  std::optional<std::string> mirror = std::nullopt) {
  KnotRecord r;
  r.name = std::move(name);
  r.genus = genus;
  r.alexander = LaurentPoly::from_symmetric_coeffs(alex);
  r.invariants = std::move(invs);
  r.annotations = std::move(ann);
  r.mirror_of = std::move(mirror);
  return r;
}

InvariantEntry entry(std::int64_t characteristic, std::int64_t nu, std::int64_t r,
                     Shape shape, std::string provenance = "theorem") {
  return InvariantEntry{make_invariants(FieldLabel{characteristic}, nu, r, shape),
                        std::move(provenance)};
}

std::vector<KnotRecord> build_builtin() {
  std::vector<KnotRecord> db;
  const std::string kRemark = "paper-remark";

  db.push_back(record(
      "unknot", 0, {1},
      {entry(0, 0, 0, Shape::W), entry(2, 0, 0, Shape::W)},
      Annotations{{},
                  {"W-shaped with nu = 0, r = 0 over every field; every "
                   "surgery is a lens space and every admissible slope is "
                   "SU(2)-abelian"}}));

  db.push_back(record(
      "T(2,3)", 1, {1, -1, 1},
      {entry(0, 1, 1, Shape::V), entry(2, 4, 4, Shape::W, kRemark)},
      Annotations{{"6", "6-1/n", "6+1/n"},
                  {"right-handed trefoil; positive surgeries 5, 6, 7 are the "
                   "lens-space fillings L(5,4), L(2,1)#L(3,2), L(7,4)"}}));

  db.push_back(record(
      "left-trefoil", 1, {1, -1, 1},
      {entry(0, -1, 1, Shape::V), entry(2, -4, 4, Shape::W, kRemark)},
      Annotations{{}, {"twist knot K1"}}, "T(2,3)"));

  db.push_back(record(
      "figure-eight", 1, {1, -3, 1},
      {entry(0, 0, 2, Shape::W)},
      Annotations{{},
                  {"twist knot K2; W-shaped over C",
                   "over fields of characteristic != 2: (r, nu) lies in "
                   "{(1,1), (2,0), (3,-1)}"}}));

  db.push_back(record(
      "K3", 1, {2, -3, 2}, {entry(0, -1, 3, Shape::V)},
      Annotations{{},
                  {"twist knot with 3 half-twists (5_2)",
                   "over fields of characteristic != 2: (r, nu) lies in "
                   "{(3,-1), (4,0), (5,1)}"}}));

  db.push_back(record(
      "K4", 1, {2, -5, 2}, {entry(0, 0, 4, Shape::Unknown)},
      Annotations{{},
                  {"twist knot with 4 half-twists (6_1)",
                   "over fields of characteristic != 2: (r, nu) lies in "
                   "{(3,1), (4,0), (5,-1)}"}}));

  db.push_back(record(
      "K5", 1, {3, -5, 3}, {entry(0, -1, 5, Shape::V)},
      Annotations{{},
                  {"twist knot with 5 half-twists (7_2)",
                   "over fields of characteristic != 2: (r, nu) lies in "
                   "{(5,-1), (6,0), (7,1)}"}}));

  db.push_back(record(
      "K6", 1, {3, -7, 3}, {entry(0, 0, 6, Shape::Unknown)},
      Annotations{{},
                  {"twist knot with 6 half-twists (8_1)",
                   "over fields of characteristic != 2: (r, nu) lies in "
                   "{(5,1), (6,0), (7,-1)}"}}));

  db.push_back(record(
      "T(2,5)", 2, {1, -1, 1, -1, 1}, {entry(0, 3, 3, Shape::V)},
      Annotations{{}, {"genus-two instanton L-space knot; nu = 2g - 1 over C"}}));

  return db;
}

}  // namespace

const std::vector<KnotRecord>& builtin_db() {
  static const std::vector<KnotRecord> db = build_builtin();
  return db;
}

std::vector<std::string> validate(const KnotRecord& record, bool speculative) {
  std::vector<std::string> out;
  if (record.name.empty()) out.push_back("record name must be nonempty");
  for (const std::string& v : alexander_violations(record.alexander)) {
    out.push_back("alexander: " + v);
  }
  if (record.genus && *record.genus < 0) out.push_back("genus must be non-negative");

  for (const InvariantEntry& e : record.invariants) {
    std::string where = "invariants[char=" +
                        std::to_string(e.inv.field.characteristic) + "]: ";
    for (const std::string& v : invariant_violations(e.inv)) out.push_back(where + v);
    if (e.provenance != "theorem" && e.provenance != "paper-remark") {
      out.push_back(where + "provenance must be 'theorem' or 'paper-remark'");
    }
    if (record.genus == 1 && e.inv.field.characteristic != 2 &&
        std::abs(e.inv.nu) > 1) {
      out.push_back(where +
                    "genus-one bound: |nu| <= 1 over fields of characteristic "
                    "!= 2");
    }
    if (speculative && e.inv.field.characteristic == 2) {
      if (e.inv.shape != Shape::W) {
        out.push_back(where + "speculative: expected W shape over F2");
      }
      if (e.inv.nu % 4 != 0 || e.inv.r % 4 != 0) {
        out.push_back(where + "speculative: expected nu and r divisible by 4 over F2");
      }
    }
  }
  return out;
}

std::vector<DbViolation> validate_db(const std::vector<KnotRecord>& records,
                                     bool speculative) {
  std::vector<DbViolation> out;
  std::map<std::string, const KnotRecord*> by_name;
  for (const KnotRecord& r : records) {
    for (const std::string& v : validate(r, speculative)) out.push_back({r.name, v});
    if (!by_name.emplace(r.name, &r).second) {
      out.push_back({r.name, "duplicate record name"});
    }
  }
  for (const KnotRecord& r : records) {
    if (!r.mirror_of) continue;
    auto it = by_name.find(*r.mirror_of);
    if (it == by_name.end()) {
      out.push_back({r.name, "mirror_of target '" + *r.mirror_of + "' not in database"});
      continue;
    }
    const KnotRecord& m = *it->second;
    if (!(r.alexander == m.alexander)) {
      out.push_back({r.name, "mirror pair must share the Alexander polynomial"});
    }
    if (r.genus != m.genus) {
      out.push_back({r.name, "mirror pair must share the genus"});
    }
    for (const InvariantEntry& e : r.invariants) {
      bool matched = false;
      for (const InvariantEntry& f : m.invariants) {
        if (f.inv.field == e.inv.field) {
          matched = true;
          if (!(mirror(f.inv) == e.inv)) {
            out.push_back({r.name,
                           "mirror identity: invariants over " +
                               format_field(e.inv.field) +
                               " must be the mirror of '" + m.name + "'"});
          }
        }
      }
      if (!matched) {
        out.push_back({r.name, "mirror pair lacks invariants over " +
                                   format_field(e.inv.field)});
      }
    }
  }
  return out;
}

namespace {

Shape shape_from_string(const std::string& s, const std::string& knot) {
  if (s == "V") return Shape::V;
  if (s == "W") return Shape::W;
  if (s == "?" || s.empty()) return Shape::Unknown;
  throw ParseError("knot '" + knot + "': field 'shape' must be V, W or ?, got '" +
                   s + "'");
}

json annotations_to_json(const Annotations& a) {
  json j = json::object();
  if (!a.su2_abelian_slopes.empty()) j["su2_abelian_slopes"] = a.su2_abelian_slopes;
  if (!a.notes.empty()) j["notes"] = a.notes;
  return j;
}

json record_to_json(const KnotRecord& r) {
  json j = json::object();
  j["name"] = r.name;
  if (r.genus) j["genus"] = *r.genus;
  std::vector<std::int64_t> coeffs;
  std::int64_t g = std::max(std::abs(r.alexander.min_exp()), r.alexander.max_exp());
  for (std::int64_t e = -g; e <= g; ++e) coeffs.push_back(r.alexander.coeff(e));
  j["alexander"] = coeffs;
  json invs = json::array();
  for (const InvariantEntry& e : r.invariants) {
    json ji = json::object();
    ji["char"] = e.inv.field.characteristic;
    ji["nu"] = e.inv.nu;
    ji["r"] = e.inv.r;
    ji["shape"] = format_shape(e.inv.shape);
    if (e.provenance != "theorem") ji["provenance"] = e.provenance;
    invs.push_back(ji);
  }
  j["invariants"] = invs;
  if (!r.annotations.empty()) j["annotations"] = annotations_to_json(r.annotations);
  if (r.mirror_of) j["mirror_of"] = *r.mirror_of;
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& knot,
                                     const std::string& field) {
  if (!j.is_array()) {
    throw ParseError("knot '" + knot + "': field '" + field +
                     "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) {
      throw ParseError("knot '" + knot + "': field '" + field +
                       "' must be an array of strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

KnotRecord record_from_json(const json& j, std::size_t index) {
  if (!j.is_object()) {
    throw ParseError("record #" + std::to_string(index) + " must be an object");
  }
  KnotRecord r;
  if (!j.contains("name") || !j["name"].is_string()) {
    throw ParseError("record #" + std::to_string(index) +
                     ": field 'name' is required and must be a string");
  }
  r.name = j["name"].get<std::string>();

  if (j.contains("genus")) {
    if (!j["genus"].is_number_integer()) {
      throw ParseError("knot '" + r.name + "': field 'genus' must be an integer");
    }
    r.genus = j["genus"].get<std::int64_t>();
  }

  if (!j.contains("alexander") || !j["alexander"].is_array()) {
    throw ParseError("knot '" + r.name +
                     "': field 'alexander' is required and must be an integer array");
  }
  std::vector<std::int64_t> coeffs;
  for (const auto& c : j["alexander"]) {
    if (!c.is_number_integer()) {
      throw ParseError("knot '" + r.name +
                       "': field 'alexander' must contain only integers");
    }
    coeffs.push_back(c.get<std::int64_t>());
  }
  try {
    r.alexander = LaurentPoly::from_symmetric_coeffs(coeffs);
  } catch (const ParseError& e) {
    throw ParseError("knot '" + r.name + "': field 'alexander': " + e.what());
  }

  if (!j.contains("invariants") || !j["invariants"].is_array()) {
    throw ParseError("knot '" + r.name +
                     "': field 'invariants' is required and must be an array");
  }
  for (const auto& ji : j["invariants"]) {
    for (const char* key : {"char", "nu", "r"}) {
      if (!ji.contains(key) || !ji[key].is_number_integer()) {
        throw ParseError("knot '" + r.name + "': field 'invariants." + key +
                         "' is required and must be an integer");
      }
    }
    InvariantEntry e;
    Shape shape = Shape::Unknown;
    if (ji.contains("shape")) {
      if (!ji["shape"].is_string()) {
        throw ParseError("knot '" + r.name + "': field 'shape' must be a string");
      }
      shape = shape_from_string(ji["shape"].get<std::string>(), r.name);
    }
    // Invariant constraints are lints, not parse failures; build the struct
    // without the validating constructor.
    e.inv = FieldInvariants{FieldLabel{ji["char"].get<std::int64_t>()},
                            ji["nu"].get<std::int64_t>(),
                            ji["r"].get<std::int64_t>(), shape};
    if (e.inv.nu % 2 != 0 && e.inv.shape == Shape::Unknown) e.inv.shape = Shape::V;
    if (ji.contains("provenance")) {
      if (!ji["provenance"].is_string()) {
        throw ParseError("knot '" + r.name + "': field 'provenance' must be a string");
      }
      e.provenance = ji["provenance"].get<std::string>();
    }
    r.invariants.push_back(e);
  }

  if (j.contains("annotations")) {
    const json& ja = j["annotations"];
    if (!ja.is_object()) {
      throw ParseError("knot '" + r.name + "': field 'annotations' must be an object");
    }
    if (ja.contains("su2_abelian_slopes")) {
      r.annotations.su2_abelian_slopes =
          string_list(ja["su2_abelian_slopes"], r.name, "annotations.su2_abelian_slopes");
    }
    if (ja.contains("notes")) {
      r.annotations.notes = string_list(ja["notes"], r.name, "annotations.notes");
    }
  }

  if (j.contains("mirror_of")) {
    if (!j["mirror_of"].is_string()) {
      throw ParseError("knot '" + r.name + "': field 'mirror_of' must be a string");
    }
    r.mirror_of = j["mirror_of"].get<std::string>();
  }
  return r;
}

}  // namespace

std::string save_db_to_string(const std::vector<KnotRecord>& records) {
  json j = json::array();
  for (const KnotRecord& r : records) j.push_back(record_to_json(r));
  return j.dump(2) + "\n";
}

void save_db(const std::vector<KnotRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << save_db_to_string(records);
  if (!out) throw IoError("failed writing '" + path + "'");
}

LoadResult load_db_from_string(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("database is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("database must be a JSON array of records");
  LoadResult result;
  std::size_t index = 0;
  for (const auto& jr : j) {
    result.records.push_back(record_from_json(jr, index++));
  }
  result.lints = validate_db(result.records);
  return result;
}

LoadResult load_db(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_db_from_string(buf.str());
}

namespace {

std::string normalize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

const std::map<std::string, std::string>& alias_table() {
  static const std::map<std::string, std::string> aliases = {
      {"fig8", "figureeight"},       {"figure8", "figureeight"},
      {"41", "figureeight"},         {"k1", "lefttrefoil"},
      {"k2", "figureeight"},         {"31", "t23"},
      {"trefoil", "t23"},            {"righttrefoil", "t23"},
      {"righthandedtrefoil", "t23"}, {"lefthandedtrefoil", "lefttrefoil"},
      {"51", "t25"},                 {"52", "k3"},
      {"61", "k4"},                  {"72", "k5"},
      {"81", "k6"},                  {"u", "unknot"},
  };
  return aliases;
}

}  // namespace

const KnotRecord* find_knot(const std::vector<KnotRecord>& records,
                            const std::string& name) {
  std::string key = normalize_name(name);
  auto alias = alias_table().find(key);
  if (alias != alias_table().end()) key = alias->second;
  for (const KnotRecord& r : records) {
    if (normalize_name(r.name) == key) return &r;
  }
  return nullptr;
}

const FieldInvariants& invariants_for(const KnotRecord& record, FieldLabel field) {
  for (const InvariantEntry& e : record.invariants) {
    if (e.inv.field == field) return e.inv;
  }
  std::string have;
  for (const InvariantEntry& e : record.invariants) {
    if (!have.empty()) have += ", ";
    have += format_field(e.inv.field);
  }
  throw UnknownField("knot '" + record.name + "' has no invariants over " +
                     format_field(field) + " (available: " + have + ")");
}

std::vector<Slope> expand_curated_slopes(const std::vector<std::string>& entries,
                                         std::int64_t max_den) {
  std::vector<Slope> out;
  for (const std::string& e : entries) {
    auto family = [&](char op) -> bool {
      std::string suffix = std::string(1, op) + "1/n";
      if (e.size() <= suffix.size() ||
          e.compare(e.size() - suffix.size(), suffix.size(), suffix) != 0) {
        return false;
      }
      std::int64_t base = 0;
      try {
        base = std::stoll(e.substr(0, e.size() - suffix.size()));
      } catch (const std::exception&) {
        throw ParseError("cannot parse curated slope family '" + e + "'");
      }
      for (std::int64_t n = 1; n <= max_den; ++n) {
        out.push_back(make_slope(base * n + (op == '+' ? 1 : -1), n));
      }
      return true;
    };
    if (family('-') || family('+')) continue;
    out.push_back(parse_slope(e));
  }
  std::sort(out.begin(), out.end(), slope_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace isharp
