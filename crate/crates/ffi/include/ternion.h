/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef TERNION_H
#define TERNION_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TernionBasis {
  TERNION_BASIS_NONION = 0,
  TERNION_BASIS_TU3 = 1,
} TernionBasis;

/**
 * Result of every fallible call.
 */
typedef enum TernionStatus {
  TERNION_STATUS_OK = 0,
  TERNION_STATUS_NULL_POINTER = 1,
  TERNION_STATUS_INVALID_ARGUMENT = 2,
  TERNION_STATUS_PARSE = 3,
  TERNION_STATUS_DIVISION_BY_ZERO = 4,
  TERNION_STATUS_OUT_OF_RANGE = 5,
  TERNION_STATUS_NOT_IN_SPAN = 6,
  TERNION_STATUS_FIXTURE = 7,
  TERNION_STATUS_IO = 8,
  TERNION_STATUS_INTERNAL = 9,
} TernionStatus;

/**
 * An element of Q(j, √2, √3).
 */
typedef struct TernionField TernionField;

/**
 * A 3×3 matrix over the field.
 */
typedef struct TernionMat3 TernionMat3;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on this thread.
 */
const char *ternion_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *ternion_version(void);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void ternion_string_free(char *s);

/**
 * A rational field element from `"p/q"` or `"p"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TernionStatus ternion_field_from_rational(const char *text, struct TernionField **out);

/**
 * A field element from its eight `"p/q"` coordinates over
 * `1, j, √2, j√2, √3, j√3, √6, j√6`.
 *
 * # Safety
 * `coords` must point to 8 NUL-terminated strings; `out` must be writable.
 */
enum TernionStatus ternion_field_from_coords(const char *const *coords, struct TernionField **out);

/**
 * The named constants `"j"`, `"i"`, `"sqrt2"`, `"sqrt3"`, `"sqrt6"`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum TernionStatus ternion_field_constant(const char *name, struct TernionField **out);

/**
 * # Safety
 * `x` must come from this library, or be null.
 */
void ternion_field_free(struct TernionField *x);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_field_add(const struct TernionField *a,
                                     const struct TernionField *b,
                                     struct TernionField **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_field_sub(const struct TernionField *a,
                                     const struct TernionField *b,
                                     struct TernionField **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_field_mul(const struct TernionField *a,
                                     const struct TernionField *b,
                                     struct TernionField **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_field_div(const struct TernionField *a,
                                     const struct TernionField *b,
                                     struct TernionField **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum TernionStatus ternion_field_conjugate_j(const struct TernionField *a,
                                             struct TernionField **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_field_equal(const struct TernionField *a,
                                       const struct TernionField *b,
                                       bool *out);

/**
 * Floating-point approximation `re + i·im`.
 *
 * # Safety
 * `a` must be a live handle; `re`, `im` must be writable.
 */
enum TernionStatus ternion_field_approx(const struct TernionField *a, double *re, double *im);

/**
 * Human-readable form such as `"-1 - 2j"`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum TernionStatus ternion_field_to_string(const struct TernionField *a, char **out);

/**
 * Basis element `index` (0..=8) of the chosen basis.
 *
 * # Safety
 * `out` must be writable.
 */
enum TernionStatus ternion_mat3_basis(enum TernionBasis basis,
                                      size_t index,
                                      struct TernionMat3 **out);

/**
 * A matrix from 9 row-major entries.
 *
 * # Safety
 * `entries` must point to 9 live handles; `out` must be writable.
 */
enum TernionStatus ternion_mat3_from_entries(const struct TernionField *const *entries,
                                             struct TernionMat3 **out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum TernionStatus ternion_mat3_get(const struct TernionMat3 *m,
                                    size_t row,
                                    size_t col,
                                    struct TernionField **out);

/**
 * # Safety
 * `m` must come from this library, or be null.
 */
void ternion_mat3_free(struct TernionMat3 *m);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_mat3_mul(const struct TernionMat3 *a,
                                    const struct TernionMat3 *b,
                                    struct TernionMat3 **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_mat3_add(const struct TernionMat3 *a,
                                    const struct TernionMat3 *b,
                                    struct TernionMat3 **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_mat3_equal(const struct TernionMat3 *a,
                                      const struct TernionMat3 *b,
                                      bool *out);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum TernionStatus ternion_mat3_det(const struct TernionMat3 *m, struct TernionField **out);

/**
 * The S3 bracket `{a, b, c}`.
 *
 * # Safety
 * `a`, `b`, `c` must be live handles; `out` must be writable.
 */
enum TernionStatus ternion_mat3_bracket(const struct TernionMat3 *a,
                                        const struct TernionMat3 *b,
                                        const struct TernionMat3 *c,
                                        struct TernionMat3 **out);

/**
 * Coordinates of `m` in the chosen basis, written as 9 new handles.
 *
 * # Safety
 * `m` must be a live handle; `coeffs` must have room for 9 pointers.
 */
enum TernionStatus ternion_mat3_decompose(enum TernionBasis basis,
                                          const struct TernionMat3 *m,
                                          struct TernionField **coeffs);

/**
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum TernionStatus ternion_mat3_to_string(const struct TernionMat3 *m, char **out);

/**
 * `det Q̂` at nine rational coordinates `"p/q"`.
 *
 * # Safety
 * `coords` must point to 9 NUL-terminated strings; `out` must be writable.
 */
enum TernionStatus ternion_cubic_norm(const char *const *coords, struct TernionField **out);

/**
 * The 84 brackets `k < l < m` as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum TernionStatus ternion_structure_table_json(enum TernionBasis basis, char **out);

/**
 * Runs a verification scope (`"all"`, `"roots"`, ...) and returns the JSON
 * report. `data_dir` may be null to use the bundled fixtures.
 *
 * # Safety
 * `scope` must be a NUL-terminated string, `data_dir` one or null; `out` and
 * `passed` must be writable.
 */
enum TernionStatus ternion_verify_json(const char *scope,
                                       const char *data_dir,
                                       bool strict,
                                       char **out,
                                       bool *passed);

/**
 * `3ⁿ` for `1 ≤ n ≤ 12`.
 *
 * # Safety
 * `out` must be writable.
 */
enum TernionStatus ternion_clifford_dimension(size_t n, uint64_t *out);

/**
 * Monomial counts per total degree `0..=2n`. Writes up to `capacity` values
 * and the full length to `len`.
 *
 * # Safety
 * `buf` must have room for `capacity` values (or be null when `capacity` is
 * 0); `len` must be writable.
 */
enum TernionStatus ternion_clifford_degree_census(size_t n,
                                                  uint64_t *buf,
                                                  size_t capacity,
                                                  size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TERNION_H */
