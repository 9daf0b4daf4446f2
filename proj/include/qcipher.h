/* Copyright 2026 The qcipher Authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to the qcipher library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a qc_status; on
 * failure qc_last_error() describes the problem for the calling thread until
 * the next failing call on that thread. Output handles are only written on
 * success.
 *
 * Element indices, permutations (one-line notation) and tables are passed as
 * uint32_t arrays. Tables are row-major, order*order entries.
 */

#ifndef QCIPHER_H
#define QCIPHER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QCIPHER_BUILDING)
#    define QC_API __declspec(dllexport)
#  else
#    define QC_API __declspec(dllimport)
#  endif
#else
#  define QC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qc_status {
  QC_OK = 0,
  QC_ERR_INVALID_ARGUMENT = 1,
  QC_ERR_NOT_LATIN = 2,
  QC_ERR_NOT_CLOSED = 3,
  QC_ERR_OUT_OF_RANGE = 4,
  QC_ERR_PRECONDITION = 5,
  QC_ERR_LIMIT = 6,
  QC_ERR_PARSE = 7,
  QC_ERR_IO = 8,
  QC_ERR_INTERNAL = 9
} qc_status;

typedef enum qc_eval_kind {
  QC_PRODUCT = 0,
  QC_LEFT_DIVIDE = 1,
  QC_RIGHT_DIVIDE = 2
} qc_eval_kind;

typedef enum qc_property {
  QC_PROP_WIP = 0,
  QC_PROP_CIP = 1,
  QC_PROP_AIP = 2
} qc_property;

typedef enum qc_perm_op {
  QC_PERM_COMPOSE = 0,
  QC_PERM_INVERT = 1,
  QC_PERM_CONJUGATE = 2
} qc_perm_op;

/* A quasigroup, optionally carrying a designated sub. */
typedef struct qc_quasigroup qc_quasigroup;
/* A list of permutations (automorphism groups). */
typedef struct qc_group qc_group;
typedef struct qc_triple qc_triple;
typedef struct qc_key qc_key;
typedef struct qc_ciphertext qc_ciphertext;

QC_API const char *qc_last_error(void);
QC_API const char *qc_status_name(qc_status status);
QC_API const char *qc_version(void);

/* Strings and byte buffers returned by the library. */
QC_API void qc_string_free(char *s);
QC_API void qc_bytes_free(uint8_t *bytes);

/* ---- quasigroups ---------------------------------------------------- */

QC_API qc_status qc_quasigroup_from_table(const uint32_t *table, size_t order,
                                          qc_quasigroup **out);
QC_API void qc_quasigroup_free(qc_quasigroup *q);
QC_API size_t qc_quasigroup_order(const qc_quasigroup *q);
/* Copies order*order entries into `table`. */
QC_API qc_status qc_quasigroup_table(const qc_quasigroup *q, uint32_t *table,
                                     size_t capacity);
/* Designates a closed sub with 2 <= len < order. */
QC_API qc_status qc_quasigroup_set_sub(qc_quasigroup *q, const uint32_t *sub,
                                       size_t len);
/* *len receives the sub size (0 when none); up to `capacity` are copied. */
QC_API qc_status qc_quasigroup_sub(const qc_quasigroup *q, uint32_t *sub,
                                   size_t capacity, size_t *len);
QC_API qc_status qc_evaluate(const qc_quasigroup *q, qc_eval_kind kind,
                             uint32_t a, uint32_t b, uint32_t *out);
/* *out receives the identity or UINT32_MAX when there is none. */
QC_API qc_status qc_identity_element(const qc_quasigroup *q, uint32_t *out);
/* Crossed inverse maps; *has_rho / *has_lambda report existence. `rho` and
 * `lambda` need `order` slots each and may be NULL. */
QC_API qc_status qc_inverse_maps(const qc_quasigroup *q, uint32_t *rho,
                                 int *has_rho, uint32_t *lambda,
                                 int *has_lambda);
QC_API qc_status qc_isomorphism(const qc_quasigroup *q1,
                                const qc_quasigroup *q2, uint32_t *sigma,
                                int *found);

QC_API qc_status qc_load_quasigroup(const char *path, qc_quasigroup **out);
QC_API qc_status qc_store_quasigroup(const qc_quasigroup *q, const char *path);
QC_API qc_status qc_quasigroup_to_text(const qc_quasigroup *q, char **out);
QC_API qc_status qc_quasigroup_from_text(const char *text, qc_quasigroup **out);

/* ---- constructions -------------------------------------------------- */

QC_API qc_status qc_build_cyclic(uint32_t n, qc_quasigroup **out);
QC_API qc_status qc_build_keedwell(uint32_t n, uint32_t r, uint32_t s,
                                   qc_quasigroup **out);
/* *recommended receives 1 when r + s != 0 (mod n). */
QC_API qc_status qc_keedwell_check(uint32_t n, uint32_t r, uint32_t s,
                                   int *recommended);
QC_API qc_status qc_embed_initial(const qc_quasigroup *p, uint64_t seed,
                                  int strict, qc_quasigroup **out);
/* Holomorph over the full automorphism group, or over the Smarandache
 * automorphism group of q's designated sub when `smarandache` is set. */
QC_API qc_status qc_holomorph(const qc_quasigroup *q, int smarandache,
                              qc_quasigroup **out);
QC_API qc_status qc_apply_isotopism(const qc_quasigroup *q, const qc_triple *t,
                                    qc_quasigroup **out);

/* ---- properties ----------------------------------------------------- */

/* With `smarandache`, the property is evaluated on the designated sub. */
QC_API qc_status qc_has_property(const qc_quasigroup *q, qc_property prop,
                                 int smarandache, int *out);
QC_API qc_status qc_is_unipotent(const qc_quasigroup *q, int *out);
/* Cycles of rho, concatenated into `elements` (order slots); `lengths`
 * (order slots) receives each cycle length; *count the number of cycles. */
QC_API qc_status qc_inverse_cycles(const qc_quasigroup *q, uint32_t *elements,
                                   size_t *lengths, size_t *count);

/* ---- permutations and morphisms ------------------------------------- */

/* `q` is ignored for QC_PERM_INVERT and may be NULL. */
QC_API qc_status qc_perm_algebra(qc_perm_op op, const uint32_t *p,
                                 const uint32_t *q, size_t size, uint32_t *out);
QC_API qc_status qc_automorphism_group(const qc_quasigroup *q, int smarandache,
                                       size_t max_order, qc_group **out);
QC_API void qc_group_free(qc_group *g);
QC_API size_t qc_group_size(const qc_group *g);
QC_API size_t qc_group_degree(const qc_group *g);
QC_API qc_status qc_group_element(const qc_group *g, size_t index,
                                  uint32_t *out);

QC_API qc_status qc_triple_create(const uint32_t *a, const uint32_t *b,
                                  const uint32_t *c, size_t size,
                                  qc_triple **out);
QC_API void qc_triple_free(qc_triple *t);
QC_API qc_status qc_load_triple(const char *path, qc_triple **out);
QC_API qc_status qc_store_triple(const qc_triple *t, const char *path);
QC_API qc_status qc_is_autotopism(const qc_quasigroup *q, const qc_triple *t,
                                  int smarandache, int *out);
QC_API qc_status qc_is_s_isotopism(const qc_quasigroup *u,
                                   const qc_quasigroup *v, const qc_triple *t,
                                   int *out);
QC_API qc_status qc_transfer_check(const qc_quasigroup *u,
                                   const qc_quasigroup *v, const uint32_t *beta,
                                   const uint32_t *delta, const uint32_t *gamma,
                                   size_t size, int *out);
/* V and the triple carrying U onto V. */
QC_API qc_status qc_build_v_from_u(const qc_quasigroup *u, const uint32_t *beta,
                                   const uint32_t *delta, const uint32_t *gamma,
                                   size_t size, qc_quasigroup **v,
                                   qc_triple **forward);

/* ---- cipher --------------------------------------------------------- */

QC_API qc_status qc_keygen(uint32_t n, uint32_t r, uint32_t s, uint64_t seed,
                           int strict, int allow_unipotent, qc_key **out);
QC_API void qc_key_free(qc_key *key);
QC_API qc_status qc_load_key(const char *path, qc_key **out);
QC_API qc_status qc_store_key(const qc_key *key, const char *path);
QC_API qc_status qc_key_to_text(const qc_key *key, char **out);
QC_API size_t qc_key_order(const qc_key *key);
QC_API uint32_t qc_key_y0(const qc_key *key);
QC_API size_t qc_key_period(const qc_key *key);
/* 1 when delta / gamma are Smarandache automorphisms of V. */
QC_API int qc_key_delta_in_saum_v(const qc_key *key);
QC_API int qc_key_gamma_in_saum_v(const qc_key *key);
QC_API qc_status qc_key_rotate(const qc_key *key, int64_t steps, qc_key **out);

QC_API qc_status qc_encrypt(const qc_key *key, const uint8_t *data, size_t len,
                            qc_ciphertext **out);
/* *out is allocated with the library and released with qc_bytes_free. */
QC_API qc_status qc_decrypt(const qc_key *key, const qc_ciphertext *ct,
                            uint8_t **out, size_t *len);
QC_API void qc_ciphertext_free(qc_ciphertext *ct);
QC_API size_t qc_ciphertext_size(const qc_ciphertext *ct);
QC_API size_t qc_ciphertext_length(const qc_ciphertext *ct);
QC_API const uint32_t *qc_ciphertext_body(const qc_ciphertext *ct);
QC_API qc_status qc_load_ciphertext(const char *path, qc_ciphertext **out);
QC_API qc_status qc_store_ciphertext(const qc_ciphertext *ct, const char *path);

#ifdef __cplusplus
}
#endif

#endif /* QCIPHER_H */
