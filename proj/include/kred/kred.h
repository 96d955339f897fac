/*
 * Copyright 2026 the kred developers
 *
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

/* C interface to the kred core. All functions are thread-safe; every
 * handle and string returned through an out-parameter is owned by the
 * caller and released with the matching *_free. Out-parameters are only
 * written on KRED_OK. */

#ifndef KRED_H
#define KRED_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kred_status {
    KRED_OK = 0,
    KRED_ERR_INVALID = 1,  /* argument outside the supported range */
    KRED_ERR_PARSE = 2,    /* malformed element, partition, or number text */
    KRED_ERR_LIMIT = 3,    /* computation exceeds a built-in resource cap */
    KRED_ERR_NOMEM = 4,
    KRED_ERR_INTERNAL = 5
} kred_status;

/* KRED_MODE_M: exterior powers vanish above n.
 * KRED_MODE_GL: additionally the top power acts as the unit. */
typedef enum kred_mode {
    KRED_MODE_M = 0,
    KRED_MODE_GL = 1
} kred_mode;

typedef enum kred_format {
    KRED_FORMAT_PAPER = 0, /* plain text matching the published table layout */
    KRED_FORMAT_JSON = 1,
    KRED_FORMAT_CSV = 2
} kred_format;

/* Ring element together with its ambient mode. */
typedef struct kred_elem kred_elem;

/* Dense matrix of arbitrary-precision integers. */
typedef struct kred_mat kred_mat;

const char* kred_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * the last call succeeded. The pointer stays valid until the next call. */
const char* kred_last_error(void);

void kred_string_free(char* s);
void kred_elem_free(kred_elem* e);
void kred_mat_free(kred_mat* m);

/* ---- elements ---------------------------------------------------------- */

/* Parses additive coefficient(parts) notation, e.g. "(1)+2(2)-1(4,1)".
 * Catalogued token errata are applied silently; see kred_verify_tables for
 * the audited path. */
kred_status kred_elem_parse(kred_mode mode, int n, const char* text, kred_elem** out);

kred_status kred_elem_render(const kred_elem* e, char** out);
kred_status kred_elem_mul(const kred_elem* a, const kred_elem* b, kred_elem** out);
kred_status kred_elem_add(const kred_elem* a, const kred_elem* b, kred_elem** out);
kred_status kred_elem_mod2(const kred_elem* e, kred_elem** out);
kred_status kred_elem_equal(const kred_elem* a, const kred_elem* b, int* out);
kred_status kred_elem_is_zero(const kred_elem* e, int* out);

/* k-th symmetric power class in the rank-n truncated ring. */
kred_status kred_sym_row(int n, int k, kred_elem** out);

/* Alternating Koszul sum for (n, k); zero certifies the recursion. */
kred_status kred_koszul_residual(int n, int k, kred_elem** out);

/* Image of e under multiplication by the sum of all exterior powers. */
kred_status kred_mult_by_sum_lambda(const kred_elem* e, kred_elem** out);

/* Normal form of the square of the k-th exterior power. */
kred_status kred_straighten_pair(kred_mode mode, int n, int k, kred_elem** out);

/* ---- matrices ---------------------------------------------------------- */

kred_status kred_t_matrix(int n, kred_mat** out);
kred_status kred_tau_matrix(int n, kred_mat** out);

kred_status kred_mat_rows(const kred_mat* m, size_t* out);
kred_status kred_mat_cols(const kred_mat* m, size_t* out);

/* Entry as a decimal string. */
kred_status kred_mat_entry(const kred_mat* m, size_t row, size_t col, char** out);

kred_status kred_mat_rank(const kred_mat* m, size_t* out);

/* Multiplicity of the given eigenvalue of the degree-n duplication operator. */
kred_status kred_eigen_multiplicity(int n, long eigenvalue, size_t* out);

/* Whether the product of (t - 2^i I) over i = 0..n vanishes. */
kred_status kred_annihilates(int n, int* out);

/* ---- formatted reports -------------------------------------------------
 * Each renderer writes a complete, byte-deterministic report. */

kred_status kred_sym_rows_render(int n, int max_k, int mod2, kred_format fmt, char** out);
kred_status kred_tau_render(int n, kred_format fmt, char** out);
kred_status kred_t_render(int n, int with_blocks, kred_format fmt, char** out);

/* pass receives 1 when the full spectrum report checks out, else 0. */
kred_status kred_eigen_report(int n, int with_kernel, int with_timings, kred_format fmt,
                              char** out, int* pass);

kred_status kred_rank_profile_render(int n, int max_k, int with_covectors, kred_format fmt,
                                     char** out);

kred_status kred_series_steinberg_render(int n, int order, kred_format fmt, char** out);
kred_status kred_series_chi_render(int j, int order, kred_format fmt, char** out);

/* numerator: comma-separated integer coefficients from degree 0 upward.
 * denominator: comma-separated positive exponents d, one factor 1 - q^d
 * each; the empty string means no factors. */
kred_status kred_series_expand_render(const char* numerator, const char* denominator,
                                      int order, kred_format fmt, char** out);
kred_status kred_series_pole_order_render(const char* numerator, const char* denominator,
                                          kred_format fmt, char** out);

/* lambda: comma-separated strictly decreasing positive parts, e.g. "5,2,1". */
kred_status kred_connectivity_render(const char* lambda, kred_format fmt, char** out);

/* lambda: comma-separated weakly decreasing positive parts. */
kred_status kred_simple_dim_render(const char* lambda, int m, kred_format fmt, char** out);

/* Loads the reference tables under dir, recomputes everything, and writes
 * the line-by-line report. A load failure or a mismatch is reported in the
 * text with *pass = 0; the status stays KRED_OK unless the arguments
 * themselves are unusable. */
kred_status kred_verify_tables(const char* dir, kred_format fmt, char** out, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* KRED_H */
