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

#include "isharp/isharp.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "dim.hpp"
#include "error.hpp"
#include "grading.hpp"
#include "knotdb.hpp"
#include "laurent.hpp"
#include "render.hpp"
#include "slope.hpp"
#include "su2.hpp"
#include "triangle.hpp"

using namespace isharp;

// Internal type behind the opaque handle.
struct ish_db {
  std::vector<KnotRecord> records;
};

namespace {

thread_local std::string g_last_error;

ish_status fail(ish_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating the exception hierarchy onto status codes.
template <typename Fn>
ish_status guarded(Fn&& fn) {
  try {
    fn();
    return ISH_OK;
  } catch (const ShapeRequired& e) {
    return fail(ISH_ERR_SHAPE_REQUIRED, e.what());
  } catch (const InsufficientRange& e) {
    return fail(ISH_ERR_INSUFFICIENT_RANGE, e.what());
  } catch (const NotRealizable& e) {
    return fail(ISH_ERR_NOT_REALIZABLE, e.what());
  } catch (const InfeasibleStep& e) {
    return fail(ISH_ERR_INFEASIBLE, e.what());
  } catch (const UnknownKnot& e) {
    return fail(ISH_ERR_UNKNOWN_KNOT, e.what());
  } catch (const UnknownField& e) {
    return fail(ISH_ERR_UNKNOWN_FIELD, e.what());
  } catch (const ParseError& e) {
    return fail(ISH_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(ISH_ERR_IO, e.what());
  } catch (const InvalidArgument& e) {
    return fail(ISH_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ISH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ISH_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ish_status require(bool cond, const char* what) {
  if (cond) return ISH_OK;
  return fail(ISH_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

Slope to_slope(ish_slope s) { return make_slope(s.num, s.den); }

ish_slope from_slope(const Slope& s) { return ish_slope{s.num, s.den}; }

Shape to_shape(ish_shape s) {
  switch (s) {
    case ISH_SHAPE_V: return Shape::V;
    case ISH_SHAPE_W: return Shape::W;
    default: return Shape::Unknown;
  }
}

ish_shape from_shape(Shape s) {
  switch (s) {
    case Shape::V: return ISH_SHAPE_V;
    case Shape::W: return ISH_SHAPE_W;
    default: return ISH_SHAPE_UNKNOWN;
  }
}

FieldInvariants to_invariants(const ish_invariants& inv) {
  return make_invariants(make_field(inv.characteristic), inv.nu, inv.r,
                         to_shape(inv.shape));
}

ish_invariants from_invariants(const FieldInvariants& inv) {
  return ish_invariants{inv.field.characteristic, inv.nu, inv.r,
                        from_shape(inv.shape)};
}

Bundle to_bundle(ish_bundle b) {
  return b == ISH_BUNDLE_MERIDIAN ? Bundle::Meridian : Bundle::Trivial;
}

OutputFormat to_format(ish_format f) {
  return f == ISH_FORMAT_JSON ? OutputFormat::Json : OutputFormat::Table;
}

KClass to_kclass(ish_k_class k) {
  switch (k) {
    case ISH_K_POSITIVE: return KClass::Positive;
    case ISH_K_ZERO: return KClass::Zero;
    default: return KClass::Negative;
  }
}

const KnotRecord& find_or_throw(const ish_db& db, const char* knot) {
  const KnotRecord* r = find_knot(db.records, knot);
  if (!r) throw UnknownKnot("unknown knot '" + std::string(knot) + "'");
  return *r;
}

}  // namespace

extern "C" {

const char* ish_version(void) { return "1.0.0"; }

const char* ish_last_error(void) { return g_last_error.c_str(); }

void ish_string_free(char* s) { std::free(s); }

void ish_buffer_free(int64_t* buf) { std::free(buf); }

ish_status ish_slope_make(int64_t num, int64_t den, ish_slope* out) {
  if (auto s = require(out, "out")) return s;
  return guarded([&] { *out = from_slope(make_slope(num, den)); });
}

ish_status ish_slope_parse(const char* text, ish_slope* out) {
  if (auto s = require(text && out, "text/out")) return s;
  return guarded([&] { *out = from_slope(parse_slope(text)); });
}

ish_status ish_slope_format(ish_slope s, char** out) {
  if (auto st = require(out, "out")) return st;
  return guarded([&] { *out = dup_string(format_slope(to_slope(s))); });
}

ish_status ish_is_triad(ish_slope r0, ish_slope r1, ish_slope r2, int* found,
                        int64_t reps[6]) {
  if (auto st = require(found, "found")) return st;
  return guarded([&] {
    auto t = is_triad(to_slope(r0), to_slope(r1), to_slope(r2));
    *found = t.has_value() ? 1 : 0;
    if (t && reps) {
      for (int i = 0; i < 3; ++i) {
        reps[2 * i] = t->reps[i].p;
        reps[2 * i + 1] = t->reps[i].q;
      }
    }
  });
}

ish_status ish_farey_split(ish_slope r0, ish_slope out[3]) {
  if (auto st = require(out, "out")) return st;
  return guarded([&] {
    FareySplit s = farey_split(to_slope(r0));
    out[0] = from_slope(s.r1);
    out[1] = from_slope(s.r2);
    out[2] = from_slope(s.r3);
  });
}

ish_status ish_dim(const ish_invariants* inv, ish_slope slope, ish_bundle bundle,
                   int64_t* value, int* exceptional) {
  if (auto st = require(inv && value, "inv/value")) return st;
  return guarded([&] {
    DimResult d = dim_sharp(to_invariants(*inv), to_slope(slope), to_bundle(bundle));
    *value = d.value;
    if (exceptional) *exceptional = d.exceptional ? 1 : 0;
  });
}

ish_status ish_dim_sequence(const ish_invariants* inv, int64_t n_lo, int64_t n_hi,
                            ish_bundle bundle, int64_t* out) {
  if (auto st = require(inv && out, "inv/out")) return st;
  return guarded([&] {
    auto seq = dim_sequence(to_invariants(*inv), n_lo, n_hi, to_bundle(bundle));
    std::copy(seq.begin(), seq.end(), out);
  });
}

ish_status ish_infer_invariants(int64_t n_lo, const int64_t* trivial,
                                const int64_t* meridian, int64_t count,
                                int64_t characteristic, ish_invariants* out) {
  if (auto st = require(trivial && meridian && out, "sequences/out")) return st;
  if (count < 0) return fail(ISH_ERR_INVALID_ARGUMENT, "negative count");
  return guarded([&] {
    std::vector<std::int64_t> t(trivial, trivial + count);
    std::vector<std::int64_t> m(meridian, meridian + count);
    *out = from_invariants(
        infer_invariants(n_lo, t, m, make_field(characteristic)));
  });
}

ish_status ish_mirror(const ish_invariants* inv, ish_invariants* out) {
  if (auto st = require(inv && out, "inv/out")) return st;
  return guarded([&] { *out = from_invariants(mirror(to_invariants(*inv))); });
}

ish_status ish_lspace_slopes(const ish_invariants* inv, int* exists,
                             int64_t* threshold, int* exceptional_excluded) {
  if (auto st = require(inv && exists, "inv/exists")) return st;
  return guarded([&] {
    LspaceSlopes d = lspace_slopes(to_invariants(*inv));
    *exists = d.exists ? 1 : 0;
    if (threshold) *threshold = d.threshold;
    if (exceptional_excluded) *exceptional_excluded = d.exceptional_excluded ? 1 : 0;
  });
}

ish_status ish_check_exactness_dims(int64_t a, int64_t b, int64_t c, int* feasible) {
  if (auto st = require(feasible, "feasible")) return st;
  return guarded([&] { *feasible = check_exactness_dims(a, b, c) ? 1 : 0; });
}

ish_status ish_compose_epsilon(int first, int second, int* out) {
  if (auto st = require(out, "out")) return st;
  Epsilon a, b;
  if (auto st = guarded([&] {
        a = epsilon_from_bits(first);
        b = epsilon_from_bits(second);
      })) {
    return st;
  }
  auto e = compose_epsilon(a, b);
  if (!e) {
    return fail(ISH_ERR_NO_RULE,
                "no composition rule for the pair (" + format_epsilon(a) + ", " +
                    format_epsilon(b) + ")");
  }
  *out = (e->core ? 2 : 0) | (e->cocore ? 1 : 0);
  return ISH_OK;
}

ish_status ish_sphere_rule(int self_intersection, int l_odd, int split_off,
                           ish_sphere_consequence* out) {
  if (auto st = require(out, "out")) return st;
  return guarded([&] {
    SphereConsequence c = sphere_rule(
        self_intersection, l_odd ? Parity::Odd : Parity::Even, split_off != 0);
    switch (c) {
      case SphereConsequence::MapVanishes: *out = ISH_SPHERE_MAP_VANISHES; break;
      case SphereConsequence::BlowDownIdentity:
        *out = ISH_SPHERE_BLOW_DOWN_IDENTITY;
        break;
      case SphereConsequence::SphereToggleIdentity:
        *out = ISH_SPHERE_TOGGLE_IDENTITY;
        break;
      case SphereConsequence::NoRule: *out = ISH_SPHERE_NO_RULE; break;
    }
  });
}

ish_status ish_shift_table(ish_k_class k, int meridian_route, int spin_s0,
                           int out[6]) {
  if (auto st = require(out, "out")) return st;
  return guarded([&] {
    ShiftTuple t = shift_table(to_kclass(k),
                               meridian_route ? Route::Meridian : Route::Trivial,
                               spin_s0 != 0);
    std::copy(t.s.begin(), t.s.end(), out);
  });
}

ish_status ish_propagate_triangle(const int64_t x[4], const int shifts[3],
                                  int delta, int64_t out[4]) {
  if (auto st = require(x && shifts && out, "x/shifts/out")) return st;
  return guarded([&] {
    GradedDim in{{x[0], x[1], x[2], x[3]}};
    GradedDim res =
        propagate_triangle(in, {shifts[0], shifts[1], shifts[2]}, delta);
    std::copy(res.d.begin(), res.d.end(), out);
  });
}

ish_status ish_vw_contradiction(ish_k_class k, const int64_t x[4],
                                int* contradiction) {
  if (auto st = require(x && contradiction, "x/contradiction")) return st;
  return guarded([&] {
    GradedDim in{{x[0], x[1], x[2], x[3]}};
    *contradiction = vw_contradiction(to_kclass(k), in) ? 1 : 0;
  });
}

ish_status ish_admissible_numerator(int64_t p, int* admissible, int64_t* prime_a,
                                    int64_t* exponent_e, int* doubled) {
  if (auto st = require(admissible, "admissible")) return st;
  return guarded([&] {
    auto w = admissible_numerator(p);
    *admissible = w.has_value() ? 1 : 0;
    if (w) {
      if (prime_a) *prime_a = w->prime_a.value_or(0);
      if (exponent_e) *exponent_e = w->exponent_e;
      if (doubled) *doubled = w->doubled ? 1 : 0;
    }
  });
}

ish_status ish_cyclotomic(int64_t d, int64_t** coeffs, int64_t* count) {
  if (auto st = require(coeffs && count, "coeffs/count")) return st;
  return guarded([&] {
    LaurentPoly phi = cyclotomic(d);
    std::int64_t n = phi.max_exp() + 1;
    auto* buf = static_cast<int64_t*>(std::malloc(sizeof(int64_t) * n));
    if (!buf) throw Error("out of memory");
    for (std::int64_t e = 0; e < n; ++e) buf[e] = phi.coeff(e);
    *coeffs = buf;
    *count = n;
  });
}

ish_status ish_nondegenerate(const int64_t* symmetric_coeffs, int64_t count,
                             int64_t p, int* holds, int64_t* violating_d) {
  if (auto st = require(symmetric_coeffs && holds, "coeffs/holds")) return st;
  return guarded([&] {
    std::vector<std::int64_t> c(symmetric_coeffs, symmetric_coeffs + count);
    Nondegeneracy n = nondegenerate(LaurentPoly::from_symmetric_coeffs(c), p);
    *holds = n.holds ? 1 : 0;
    if (violating_d) *violating_d = n.violating_d.value_or(0);
  });
}

ish_status ish_db_builtin(ish_db** out) {
  if (auto st = require(out, "out")) return st;
  return guarded([&] { *out = new ish_db{builtin_db()}; });
}

ish_status ish_db_load(const char* path, ish_db** out) {
  if (auto st = require(path && out, "path/out")) return st;
  return guarded([&] { *out = new ish_db{load_db(path).records}; });
}

ish_status ish_db_merge_file(ish_db* db, const char* path) {
  if (auto st = require(db && path, "db/path")) return st;
  return guarded([&] {
    LoadResult loaded = load_db(path);
    for (KnotRecord& r : loaded.records) {
      bool replaced = false;
      for (KnotRecord& existing : db->records) {
        if (existing.name == r.name) {
          existing = r;
          replaced = true;
          break;
        }
      }
      if (!replaced) db->records.push_back(std::move(r));
    }
  });
}

ish_status ish_db_save(const ish_db* db, const char* path) {
  if (auto st = require(db && path, "db/path")) return st;
  return guarded([&] { save_db(db->records, path); });
}

void ish_db_free(ish_db* db) { delete db; }

int64_t ish_db_size(const ish_db* db) {
  return db ? static_cast<int64_t>(db->records.size()) : 0;
}

ish_status ish_db_knot_name(const ish_db* db, int64_t index, char** out) {
  if (auto st = require(db && out, "db/out")) return st;
  if (index < 0 || index >= ish_db_size(db)) {
    return fail(ISH_ERR_INVALID_ARGUMENT, "index out of range");
  }
  return guarded([&] {
    *out = dup_string(db->records[static_cast<std::size_t>(index)].name);
  });
}

ish_status ish_db_invariants(const ish_db* db, const char* knot, const char* field,
                             ish_invariants* out) {
  if (auto st = require(db && knot && field && out, "db/knot/field/out")) return st;
  return guarded([&] {
    const KnotRecord& r = find_or_throw(*db, knot);
    *out = from_invariants(invariants_for(r, parse_field(field)));
  });
}

ish_status ish_render_dim(const ish_db* db, const char* knot, const char* field,
                          const char* slope, ish_bundle bundle, ish_format fmt,
                          char** out) {
  if (auto st = require(db && knot && field && slope && out, "arguments")) return st;
  return guarded([&] {
    DimRequest req;
    req.knot = &find_or_throw(*db, knot);
    req.field = parse_field(field);
    req.slope = parse_slope(slope);
    req.bundle = to_bundle(bundle);
    *out = dup_string(render_dim(req, to_format(fmt)));
  });
}

ish_status ish_render_table(const ish_db* db, const char* knot, const char* field,
                            int64_t n_lo, int64_t n_hi, int64_t den_max,
                            ish_format fmt, char** out) {
  if (auto st = require(db && knot && field && out, "arguments")) return st;
  return guarded([&] {
    const KnotRecord& r = find_or_throw(*db, knot);
    *out = dup_string(
        render_table(r, parse_field(field), n_lo, n_hi, den_max, to_format(fmt)));
  });
}

ish_status ish_render_farey(const char* slope, ish_format fmt, char** out) {
  if (auto st = require(slope && out, "slope/out")) return st;
  return guarded(
      [&] { *out = dup_string(render_farey(parse_slope(slope), to_format(fmt))); });
}

ish_status ish_render_check_triangles(const ish_db* db, const char* knot,
                                      const char* field, int64_t den_max,
                                      int64_t num_max, ish_format fmt, char** out,
                                      int64_t* failures) {
  if (auto st = require(db && knot && field && out, "arguments")) return st;
  return guarded([&] {
    TriangleReportRequest req;
    req.knot = &find_or_throw(*db, knot);
    req.field = parse_field(field);
    req.options.max_den = den_max;
    req.options.max_num = num_max;
    *out = dup_string(render_check_triangles(req, to_format(fmt), failures));
  });
}

ish_status ish_render_check_grading(const char* k_class, ish_format fmt, char** out,
                                    int64_t* failures) {
  if (auto st = require(k_class && out, "k_class/out")) return st;
  return guarded([&] {
    std::vector<KClass> classes;
    std::string k = k_class;
    if (k == "all" || k.empty()) {
      classes = {KClass::Positive, KClass::Zero, KClass::Negative};
    } else if (k == "positive") {
      classes = {KClass::Positive};
    } else if (k == "zero") {
      classes = {KClass::Zero};
    } else if (k == "negative") {
      classes = {KClass::Negative};
    } else {
      throw InvalidArgument("k_class must be positive, zero, negative or all");
    }
    *out = dup_string(render_check_grading(classes, 12, to_format(fmt), failures));
  });
}

ish_status ish_render_su2(const ish_db* db, const char* knot, const char* field,
                          const char* lo, const char* hi, int64_t den_max,
                          ish_format fmt, char** out) {
  if (auto st = require(db && knot && field && lo && hi && out, "arguments")) {
    return st;
  }
  return guarded([&] {
    Su2Request req;
    req.knot = &find_or_throw(*db, knot);
    req.field = parse_field(field);
    req.lo = parse_slope(lo);
    req.hi = parse_slope(hi);
    req.den_max = den_max;
    *out = dup_string(render_su2(req, to_format(fmt)));
  });
}

ish_status ish_render_db_validate(const ish_db* db, ish_format fmt, char** out,
                                  int64_t* violations) {
  if (auto st = require(db && out, "db/out")) return st;
  return guarded([&] {
    auto lints = validate_db(db->records);
    *out = dup_string(render_db_validate(db->records, lints, to_format(fmt), violations));
  });
}

}  // extern "C"
