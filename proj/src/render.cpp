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

#include "render.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace isharp {

using nlohmann::json;

namespace {

std::string bundle_name(Bundle b) {
  return b == Bundle::Trivial ? "trivial" : "meridian";
}

json slope_json(const Slope& s) { return format_slope(s); }

json triad_json(const Triad& t) {
  json j = json::array();
  for (const Slope& s : t.slopes) j.push_back(slope_json(s));
  return j;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_dim(const DimRequest& req, OutputFormat fmt) {
  const auto& inv = invariants_for(*req.knot, req.field);
  DimResult d = dim_sharp(inv, req.slope, req.bundle);
  const std::int64_t q = req.slope.is_infinity() ? 0 : req.slope.den;
  const std::int64_t p = req.slope.num;

  if (fmt == OutputFormat::Json) {
    json j;
    j["command"] = "dim";
    j["knot"] = req.knot->name;
    j["field"] = format_field(req.field);
    j["slope"] = slope_json(req.slope);
    j["bundle"] = bundle_name(req.bundle);
    j["value"] = d.value;
    j["exceptional"] = d.exceptional;
    j["formula"] = {{"q", q}, {"R", inv.r}, {"p", p}, {"M", inv.nu}};
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "dim I#(S^3_" << format_slope(req.slope) << "(" << req.knot->name << ")"
      << (req.bundle == Bundle::Meridian ? ", mu" : "") << "; "
      << format_field(req.field) << ") = " << d.value << "\n";
  if (req.slope.is_infinity()) {
    out << "  slope inf: the surgered manifold is S^3\n";
  } else if (d.exceptional) {
    out << "  exceptional slope (nu = " << inv.nu << " even, shape "
        << format_shape(inv.shape) << "): bundle classes differ by 2\n";
  } else {
    out << "  = q*R + |p - q*M| = " << q << "*" << inv.r << " + |" << p << " - "
        << q << "*" << inv.nu << "|\n";
  }
  return out.str();
}

std::string render_table(const KnotRecord& knot, FieldLabel field, std::int64_t n_lo,
                         std::int64_t n_hi, std::int64_t den_max, OutputFormat fmt) {
  if (n_lo > n_hi) throw InvalidArgument("table: empty slope range");
  const auto& inv = invariants_for(knot, field);

  std::vector<Slope> slopes;
  for (std::int64_t q = 1; q <= std::max<std::int64_t>(den_max, 1); ++q) {
    for (std::int64_t p = n_lo * q; p <= n_hi * q; ++p) {
      if (std::gcd(std::abs(p), q) == 1) slopes.push_back(make_slope(p, q));
    }
  }
  std::sort(slopes.begin(), slopes.end(), slope_less);
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());

  struct Row {
    Slope slope;
    std::int64_t trivial, meridian;
    bool exceptional;
  };
  std::vector<Row> rows;
  for (const Slope& s : slopes) {
    DimResult t = dim_sharp(inv, s, Bundle::Trivial);
    DimResult m = dim_sharp(inv, s, Bundle::Meridian);
    rows.push_back({s, t.value, m.value, t.exceptional});
  }

  if (fmt == OutputFormat::Json) {
    json j;
    j["command"] = "table";
    j["knot"] = knot.name;
    j["field"] = format_field(field);
    j["rows"] = json::array();
    for (const Row& r : rows) {
      j["rows"].push_back({{"slope", slope_json(r.slope)},
                           {"trivial", r.trivial},
                           {"meridian", r.meridian},
                           {"exceptional", r.exceptional}});
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "dim I# of surgeries on " << knot.name << " over " << format_field(field)
      << " (nu = " << inv.nu << ", r = " << inv.r << ", shape "
      << format_shape(inv.shape) << ")\n";
  out << pad("slope", 10) << pad("trivial", 9) << pad("meridian", 9) << "\n";
  for (const Row& r : rows) {
    out << pad(format_slope(r.slope), 10) << pad(std::to_string(r.trivial), 9)
        << pad(std::to_string(r.meridian), 9) << (r.exceptional ? "exceptional" : "")
        << "\n";
  }
  return out.str();
}

namespace {

json farey_node_json(const FareyNode& n) {
  json j;
  j["slope"] = slope_json(n.slope);
  if (!n.is_leaf()) {
    j["triads"] = {triad_json(n.triads->upper), triad_json(n.triads->lower)};
    j["children"] = json::array();
    for (const FareyNode& c : n.children) j["children"].push_back(farey_node_json(c));
  }
  return j;
}

void farey_node_text(const FareyNode& n, const std::string& prefix, bool last,
                     std::ostringstream& out) {
  out << prefix << (prefix.empty() ? "" : (last ? "`- " : "|- "))
      << format_slope(n.slope);
  if (!n.is_leaf()) {
    out << "  [triads (" << format_slope(n.triads->upper.slopes[0]) << ","
        << format_slope(n.triads->upper.slopes[1]) << ","
        << format_slope(n.triads->upper.slopes[2]) << ") ("
        << format_slope(n.triads->lower.slopes[0]) << ","
        << format_slope(n.triads->lower.slopes[1]) << ","
        << format_slope(n.triads->lower.slopes[2]) << ")]";
  }
  out << "\n";
  std::string child_prefix = prefix + (prefix.empty() ? "" : (last ? "   " : "|  "));
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    farey_node_text(n.children[i], child_prefix, i + 1 == n.children.size(), out);
  }
}

}  // namespace

std::string render_farey(const Slope& slope, OutputFormat fmt) {
  FareyNode root = farey_tree(slope);
  if (fmt == OutputFormat::Json) {
    json j;
    j["command"] = "farey";
    j["root"] = slope_json(slope);
    j["tree"] = farey_node_json(root);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  farey_node_text(root, "", true, out);
  return out.str();
}

std::string render_check_triangles(const TriangleReportRequest& req, OutputFormat fmt,
                                   std::int64_t* failures_out) {
  const auto& inv = invariants_for(*req.knot, req.field);
  TriangleReport report = verify_knot_triangles(inv, req.options);
  if (failures_out) *failures_out = static_cast<std::int64_t>(report.failures.size());

  if (fmt == OutputFormat::Json) {
    json j;
    j["command"] = "check-triangles";
    j["knot"] = req.knot->name;
    j["field"] = format_field(req.field);
    j["den_max"] = req.options.max_den;
    j["num_max"] = req.options.max_num;
    j["triads_checked"] = report.triads_checked;
    j["triangles_checked"] = report.triangles_checked;
    j["failures"] = json::array();
    for (const TriangleCheck& c : report.failures) {
      j["failures"].push_back({{"triad", triad_json(c.triad)},
                               {"triangle", c.triangle_index},
                               {"dims", {c.dims[0], c.dims[1], c.dims[2]}},
                               {"verdict", "infeasible"}});
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "triangle feasibility sweep: " << req.knot->name << " over "
      << format_field(req.field) << ", denominators <= " << req.options.max_den
      << ", |numerators| <= " << req.options.max_num << "\n";
  out << "checked " << report.triads_checked << " triads / "
      << report.triangles_checked << " decorated triangles\n";
  if (report.failures.empty()) {
    out << "0 failures\n";
  } else {
    out << report.failures.size() << " failures:\n";
    out << pad("triad", 24) << pad("triangle", 10) << pad("dims", 16)
        << "verdict\n";
    for (const TriangleCheck& c : report.failures) {
      std::string triad = "(" + format_slope(c.triad.slopes[0]) + "," +
                          format_slope(c.triad.slopes[1]) + "," +
                          format_slope(c.triad.slopes[2]) + ")";
      std::string dims = "(" + std::to_string(c.dims[0]) + "," +
                         std::to_string(c.dims[1]) + "," +
                         std::to_string(c.dims[2]) + ")";
      out << pad(triad, 24) << pad(std::to_string(c.triangle_index), 10)
          << pad(dims, 16) << "infeasible\n";
    }
  }
  return out.str();
}

std::string render_check_grading(const std::vector<KClass>& classes,
                                 std::int64_t max_total, OutputFormat fmt,
                                 std::int64_t* failures_out) {
  struct Check {
    std::string name;
    bool ok;
  };
  std::vector<Check> checks;

  for (KClass k : classes) {
    auto i = shift_table(k, Route::Trivial).s;
    auto j = shift_table(k, Route::Meridian).s;
    bool congruences = (i[0] + i[1] + i[2]) % 4 == 3 && (i[3] + i[4] + i[5]) % 4 == 3 &&
                       (j[0] + j[1] + j[2]) % 4 == 3 && (j[3] + j[4] + j[5]) % 4 == 3 &&
                       j[0] == i[0] && j[1] == (i[1] + 2) % 4 && j[3] == i[3] &&
                       j[4] == (i[4] + 2) % 4;
    checks.push_back({"shift-table congruences (" + format_kclass(k) + ")", congruences});

    // Exhaustive vw sweep over positive quadruples up to the total.
    bool vw_ok = true;
    for (std::int64_t a = 1; a <= max_total - 3 && vw_ok; ++a) {
      for (std::int64_t b = 1; a + b <= max_total - 2 && vw_ok; ++b) {
        for (std::int64_t c = 1; a + b + c <= max_total - 1 && vw_ok; ++c) {
          for (std::int64_t d = 1; a + b + c + d <= max_total && vw_ok; ++d) {
            vw_ok = vw_contradiction(k, GradedDim{{a, b, c, d}});
          }
        }
      }
    }
    checks.push_back({"vw contradiction, entries >= 1, total <= " +
                          std::to_string(max_total) + " (" + format_kclass(k) + ")",
                      vw_ok});
  }

  // Pinned two-step propagations for k > 0.
  {
    GradedDim x{{2, 1, 1, 1}};
    VwRoutes r = vw_routes(KClass::Positive, x);
    checks.push_back({"two-step quadruples (a,b,c+1,d-1) and (a+1,b-1,c,d)",
                      r.via_trivial == GradedDim{{2, 1, 2, 0}} &&
                          r.via_meridian == GradedDim{{3, 0, 1, 1}}});
  }

  std::int64_t failures = 0;
  for (const Check& c : checks) {
    if (!c.ok) ++failures;
  }
  if (failures_out) *failures_out = failures;

  if (fmt == OutputFormat::Json) {
    json j;
    j["command"] = "check-grading";
    j["checks"] = json::array();
    for (const Check& c : checks) {
      j["checks"].push_back({{"name", c.name}, {"ok", c.ok}});
    }
    j["failures"] = failures;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "grading self-checks\n";
  for (const Check& c : checks) {
    out << (c.ok ? "  ok   " : "  FAIL ") << c.name << "\n";
  }
  out << failures << " failures\n";
  return out.str();
}

std::string render_su2(const Su2Request& req, OutputFormat fmt) {
  const auto& inv = invariants_for(*req.knot, req.field);
  auto results =
      classify_interval(inv, req.knot->alexander, req.lo, req.hi, req.den_max);

  if (fmt == OutputFormat::Json) {
    json j;
    j["command"] = "su2";
    j["knot"] = req.knot->name;
    j["field"] = format_field(req.field);
    j["interval"] = {slope_json(req.lo), slope_json(req.hi)};
    j["den_max"] = req.den_max;
    j["results"] = json::array();
    json survivors = json::array();
    for (const auto& [s, v] : results) {
      json r = {{"slope", slope_json(s)},
                {"status", format_verdict_status(v.status)},
                {"reason", v.reason}};
      if (v.dim_certificate) r["dim"] = *v.dim_certificate;
      j["results"].push_back(r);
      if (v.status == VerdictStatus::Possible) survivors.push_back(slope_json(s));
    }
    j["survivors"] = survivors;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "SU(2)-abelian dimension obstruction: " << req.knot->name << " over "
      << format_field(req.field) << ", slopes in (" << format_slope(req.lo) << ", "
      << format_slope(req.hi) << "), denominators <= " << req.den_max << "\n";
  out << pad("slope", 10) << pad("status", 17) << "reason\n";
  std::vector<std::string> survivors;
  for (const auto& [s, v] : results) {
    out << pad(format_slope(s), 10) << pad(format_verdict_status(v.status), 17)
        << v.reason << "\n";
    if (v.status == VerdictStatus::Possible) survivors.push_back(format_slope(s));
  }
  out << "survivors (" << survivors.size() << "):";
  for (const std::string& s : survivors) out << " " << s;
  out << "\n";
  return out.str();
}

std::string render_db_validate(const std::vector<KnotRecord>& records,
                               const std::vector<DbViolation>& lints,
                               OutputFormat fmt, std::int64_t* violations_out) {
  if (violations_out) *violations_out = static_cast<std::int64_t>(lints.size());
  if (fmt == OutputFormat::Json) {
    json j;
    j["command"] = "db-validate";
    j["records"] = records.size();
    j["violations"] = json::array();
    for (const DbViolation& v : lints) {
      j["violations"].push_back({{"knot", v.knot}, {"violation", v.violation}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << records.size() << " records, " << lints.size() << " violations\n";
  for (const DbViolation& v : lints) {
    out << "  " << pad(v.knot, 16) << v.violation << "\n";
  }
  return out.str();
}

}  // namespace isharp
