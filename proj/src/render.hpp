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
// Rendering of command results as aligned text tables or JSON. The two modes
// present identical numbers; the JSON schemas are documented in the README
// and kept stable. All orderings are deterministic (slopes by value, then
// denominator).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dim.hpp"
#include "grading.hpp"
#include "knotdb.hpp"
#include "laurent.hpp"
#include "slope.hpp"
#include "su2.hpp"
#include "triangle.hpp"

namespace isharp {

enum class OutputFormat { Table, Json };

struct DimRequest {
  const KnotRecord* knot = nullptr;
  FieldLabel field;
  Slope slope;
  Bundle bundle = Bundle::Trivial;
};

std::string render_dim(const DimRequest& req, OutputFormat fmt);

// Integer table over [n_lo, n_hi], or all p/q in that range with q <= den_max
// when den_max > 1. Shows both bundle classes.
std::string render_table(const KnotRecord& knot, FieldLabel field, std::int64_t n_lo,
                         std::int64_t n_hi, std::int64_t den_max, OutputFormat fmt);

std::string render_farey(const Slope& slope, OutputFormat fmt);

struct TriangleReportRequest {
  const KnotRecord* knot = nullptr;
  FieldLabel field;
  TriangleSweepOptions options;
};

std::string render_check_triangles(const TriangleReportRequest& req, OutputFormat fmt,
                                   std::int64_t* failures_out);

// Grading self-checks: the shift-table congruences, the two pinned two-step
// propagations, and the vw contradiction sweep for the requested classes.
std::string render_check_grading(const std::vector<KClass>& classes,
                                 std::int64_t max_total, OutputFormat fmt,
                                 std::int64_t* failures_out);

struct Su2Request {
  const KnotRecord* knot = nullptr;
  FieldLabel field;
  Slope lo, hi;
  std::int64_t den_max = 12;
};

std::string render_su2(const Su2Request& req, OutputFormat fmt);

std::string render_db_validate(const std::vector<KnotRecord>& records,
                               const std::vector<DbViolation>& lints,
                               OutputFormat fmt, std::int64_t* violations_out);

}  // namespace isharp
