/* Copyright 2026 The isharp authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* isharp: framed instanton homology dimensions of knot surgeries.
 *
 * C API of the shared library. Every function returns an ish_status; on any
 * status other than ISH_OK, ish_last_error() holds a human-readable message
 * (thread-local, valid until the next call on the same thread). Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with ish_string_free(); likewise integer buffers with
 * ish_buffer_free(). Databases are opaque handles released with
 * ish_db_free(). All functions are safe to call from multiple threads as
 * long as each ish_db handle is used from one thread at a time.
 */

#ifndef ISHARP_ISHARP_H_
#define ISHARP_ISHARP_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ish_status {
  ISH_OK = 0,
  ISH_ERR_INVALID_ARGUMENT = 1,
  ISH_ERR_PARSE = 2,
  ISH_ERR_UNKNOWN_KNOT = 3,
  ISH_ERR_UNKNOWN_FIELD = 4,
  ISH_ERR_SHAPE_REQUIRED = 5, /* exceptional slope needs the V/W shape */
  ISH_ERR_NOT_REALIZABLE = 6,
  ISH_ERR_INSUFFICIENT_RANGE = 7,
  ISH_ERR_NO_RULE = 8,    /* epsilon composition outside the covered table */
  ISH_ERR_INFEASIBLE = 9, /* graded propagation consumed an empty summand */
  ISH_ERR_IO = 10,
  ISH_ERR_INTERNAL = 11
} ish_status;

/* Reduced surgery slope; den = 0 encodes infinity (num = 1). */
typedef struct ish_slope {
  int64_t num;
  int64_t den;
} ish_slope;

typedef enum ish_bundle {
  ISH_BUNDLE_TRIVIAL = 0,
  ISH_BUNDLE_MERIDIAN = 1
} ish_bundle;

typedef enum ish_shape {
  ISH_SHAPE_V = 0,
  ISH_SHAPE_W = 1,
  ISH_SHAPE_UNKNOWN = 2
} ish_shape;

/* Per-field invariants (nu, r, shape) driving the dimension formula
 * q*r + |p - q*nu|. characteristic is 0 or a prime. */
typedef struct ish_invariants {
  int64_t characteristic;
  int64_t nu;
  int64_t r;
  ish_shape shape;
} ish_invariants;

typedef enum ish_format { ISH_FORMAT_TABLE = 0, ISH_FORMAT_JSON = 1 } ish_format;

typedef enum ish_k_class {
  ISH_K_POSITIVE = 0,
  ISH_K_ZERO = 1,
  ISH_K_NEGATIVE = 2
} ish_k_class;

typedef enum ish_sphere_consequence {
  ISH_SPHERE_MAP_VANISHES = 0,
  ISH_SPHERE_BLOW_DOWN_IDENTITY = 1,
  ISH_SPHERE_TOGGLE_IDENTITY = 2,
  ISH_SPHERE_NO_RULE = 3
} ish_sphere_consequence;

typedef struct ish_db ish_db; /* opaque knot database handle */

const char* ish_version(void);
const char* ish_last_error(void);
void ish_string_free(char* s);
void ish_buffer_free(int64_t* buf);

/* ---- slopes ---------------------------------------------------------- */

/* Canonicalize (num, den): reduced, den >= 0, infinity = 1/0. */
ish_status ish_slope_make(int64_t num, int64_t den, ish_slope* out);
/* Accepts "p/q", bare integers and "inf". */
ish_status ish_slope_parse(const char* text, ish_slope* out);
ish_status ish_slope_format(ish_slope s, char** out);

/* Triad test: *found = 1 and reps filled with the witness representatives
 * (p0,q0,p1,q1,p2,q2) when the cyclic determinant conditions can be met. */
ish_status ish_is_triad(ish_slope r0, ish_slope r1, ish_slope r2, int* found,
                        int64_t reps[6]);

/* Farey parents and companion slope of a non-integer slope: out = {r1,r2,r3}. */
ish_status ish_farey_split(ish_slope r0, ish_slope out[3]);

/* ---- dimension formula ------------------------------------------------ */

ish_status ish_dim(const ish_invariants* inv, ish_slope slope, ish_bundle bundle,
                   int64_t* value, int* exceptional);

/* Fills out[0 .. n_hi-n_lo] with the integer-slope dimensions. */
ish_status ish_dim_sequence(const ish_invariants* inv, int64_t n_lo, int64_t n_hi,
                            ish_bundle bundle, int64_t* out);

/* Recovers (nu, r, shape) from the two sequences on the contiguous domain
 * starting at n_lo (count entries each). */
ish_status ish_infer_invariants(int64_t n_lo, const int64_t* trivial,
                                const int64_t* meridian, int64_t count,
                                int64_t characteristic, ish_invariants* out);

ish_status ish_mirror(const ish_invariants* inv, ish_invariants* out);

ish_status ish_lspace_slopes(const ish_invariants* inv, int* exists,
                             int64_t* threshold, int* exceptional_excluded);

/* ---- triangle algebra -------------------------------------------------- */

ish_status ish_check_exactness_dims(int64_t a, int64_t b, int64_t c, int* feasible);

/* Epsilon decorations as 2-bit codes (core bit 2, cocore bit 1).
 * ISH_ERR_NO_RULE for the pairs outside the blow-down table. */
ish_status ish_compose_epsilon(int first, int second, int* out);

ish_status ish_sphere_rule(int self_intersection, int l_odd, int split_off,
                           ish_sphere_consequence* out);

/* ---- Z/4 grading ------------------------------------------------------- */

ish_status ish_shift_table(ish_k_class k, int meridian_route, int spin_s0,
                           int out[6]);

ish_status ish_propagate_triangle(const int64_t x[4], const int shifts[3],
                                  int delta, int64_t out[4]);

ish_status ish_vw_contradiction(ish_k_class k, const int64_t x[4],
                                int* contradiction);

/* ---- SU(2) obstructions ------------------------------------------------ */

/* *admissible = 1 iff p = a^e or 2a^e; witness via prime_a (0 when p is 1
 * or 2 with no prime needed), exponent_e, doubled. */
ish_status ish_admissible_numerator(int64_t p, int* admissible, int64_t* prime_a,
                                    int64_t* exponent_e, int* doubled);

/* Coefficients of the d-th cyclotomic polynomial, constant term first.
 * Free with ish_buffer_free. */
ish_status ish_cyclotomic(int64_t d, int64_t** coeffs, int64_t* count);

/* Alexander polynomial given as the exponent-symmetric coefficient list
 * (odd count). *holds = 1 when no cyclotomic divisor obstructs;
 * *violating_d = 0 or the first violating index. */
ish_status ish_nondegenerate(const int64_t* symmetric_coeffs, int64_t count,
                             int64_t p, int* holds, int64_t* violating_d);

/* ---- knot database ------------------------------------------------------ */

ish_status ish_db_builtin(ish_db** out);
ish_status ish_db_load(const char* path, ish_db** out);
/* Loads path and overlays its records on db (matching names shadowed). */
ish_status ish_db_merge_file(ish_db* db, const char* path);
ish_status ish_db_save(const ish_db* db, const char* path);
void ish_db_free(ish_db* db);
int64_t ish_db_size(const ish_db* db);
ish_status ish_db_knot_name(const ish_db* db, int64_t index, char** out);
/* field: "C", "char0", "F2" or "Fp:<p>". */
ish_status ish_db_invariants(const ish_db* db, const char* knot, const char* field,
                             ish_invariants* out);

/* ---- rendered commands -------------------------------------------------- */
/* Text or JSON renderings of the command-level operations; both formats
 * present identical numbers. */

ish_status ish_render_dim(const ish_db* db, const char* knot, const char* field,
                          const char* slope, ish_bundle bundle, ish_format fmt,
                          char** out);

ish_status ish_render_table(const ish_db* db, const char* knot, const char* field,
                            int64_t n_lo, int64_t n_hi, int64_t den_max,
                            ish_format fmt, char** out);

ish_status ish_render_farey(const char* slope, ish_format fmt, char** out);

ish_status ish_render_check_triangles(const ish_db* db, const char* knot,
                                      const char* field, int64_t den_max,
                                      int64_t num_max, ish_format fmt, char** out,
                                      int64_t* failures);

/* k_class: "positive", "zero", "negative" or "all". */
ish_status ish_render_check_grading(const char* k_class, ish_format fmt, char** out,
                                    int64_t* failures);

ish_status ish_render_su2(const ish_db* db, const char* knot, const char* field,
                          const char* lo, const char* hi, int64_t den_max,
                          ish_format fmt, char** out);

ish_status ish_render_db_validate(const ish_db* db, ish_format fmt, char** out,
                                  int64_t* violations);

#ifdef __cplusplus
}
#endif

#endif /* ISHARP_ISHARP_H_ */
