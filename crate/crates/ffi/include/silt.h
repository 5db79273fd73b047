#ifndef SILT_H
#define SILT_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result codes. `Ok` is zero; library errors map to one code per kind.
 */
typedef enum SiltStatus {
  SILT_STATUS_OK = 0,
  SILT_STATUS_NULL_ARGUMENT = 1,
  SILT_STATUS_INVALID_UTF8 = 2,
  SILT_STATUS_BUFFER_TOO_SMALL = 3,
  SILT_STATUS_PARSE = 10,
  SILT_STATUS_FIELD = 11,
  SILT_STATUS_QUIVER = 12,
  SILT_STATUS_RELATIONS = 13,
  SILT_STATUS_GRAPH = 14,
  SILT_STATUS_UNKNOWN_NAME = 15,
  SILT_STATUS_COMPLEX = 16,
  SILT_STATUS_CRYSTAL = 17,
  SILT_STATUS_NO_SOLUTION = 18,
  SILT_STATUS_USAGE = 19,
  SILT_STATUS_IO = 20,
  SILT_STATUS_PANIC = 99,
} SiltStatus;

/**
 * A finite-dimensional algebra built from a presentation.
 */
typedef struct SiltAlgebra SiltAlgebra;

/**
 * A basic complex of projectives, one entry per indecomposable summand.
 */
typedef struct SiltComplex SiltComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Borrowed; valid
 * until the next call into this library on the same thread.
 */
const char *silt_last_error(void);

/**
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void silt_string_free(char *s);

/**
 * Builds a named fixture, e.g. `A(2,2,2)` or `kronecker`.
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum SiltStatus silt_algebra_from_fixture(const char *name, struct SiltAlgebra **out);

/**
 * Builds the algebra of a named Brauer graph from the catalogue.
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum SiltStatus silt_algebra_from_catalogue(const char *name, struct SiltAlgebra **out);

/**
 * Builds an algebra from presentation text.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum SiltStatus silt_algebra_from_text(const char *text, struct SiltAlgebra **out);

/**
 * # Safety
 * `a` is null or a handle from this library not yet freed.
 */
void silt_algebra_free(struct SiltAlgebra *a);

/**
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum SiltStatus silt_algebra_dim(const struct SiltAlgebra *a, uintptr_t *out);

/**
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum SiltStatus silt_algebra_vertex_count(const struct SiltAlgebra *a, uintptr_t *out);

/**
 * Cartan matrix, row-major; entry `(i, j)` is `dim e_i A e_j`.
 *
 * # Safety
 * `a` is a live handle; `buf` is writable for `len` elements; `n` is writable.
 */
enum SiltStatus silt_algebra_cartan(const struct SiltAlgebra *a,
                                    uintptr_t *buf,
                                    uintptr_t len,
                                    uintptr_t *n);

/**
 * Presentation text of the algebra.
 *
 * # Safety
 * `a` is a live handle; `out` is writable. Free the result with `silt_string_free`.
 */
enum SiltStatus silt_algebra_to_text(const struct SiltAlgebra *a, char **out);

/**
 * Whether the presentations agree after relabelling and rescaling arrows.
 *
 * # Safety
 * `a`, `b` are live handles; `out` is writable.
 */
enum SiltStatus silt_algebra_match(const struct SiltAlgebra *a,
                                   const struct SiltAlgebra *b,
                                   bool *out);

/**
 * The stalk complex of the regular module in degree zero.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum SiltStatus silt_stalk(const struct SiltAlgebra *a, struct SiltComplex **out);

/**
 * Parses complex text over the algebra of `a`.
 *
 * # Safety
 * `a` is a live handle; `text` is a NUL-terminated string; `out` is writable.
 */
enum SiltStatus silt_complex_from_text(const struct SiltAlgebra *a,
                                       const char *text,
                                       struct SiltComplex **out);

/**
 * # Safety
 * `t` is null or a handle from this library not yet freed.
 */
void silt_complex_free(struct SiltComplex *t);

/**
 * # Safety
 * `t` is a live handle; `out` is writable.
 */
enum SiltStatus silt_complex_summand_count(const struct SiltComplex *t, uintptr_t *out);

/**
 * # Safety
 * `t` is a live handle; `out` is writable. Free the result with `silt_string_free`.
 */
enum SiltStatus silt_complex_to_text(const struct SiltComplex *t, char **out);

/**
 * Left mutation at the zero-based summand `x`.
 *
 * # Safety
 * `t` is a live handle; `out` is writable.
 */
enum SiltStatus silt_mutate_left(const struct SiltComplex *t,
                                 uintptr_t x,
                                 struct SiltComplex **out);

/**
 * Right mutation at the zero-based summand `x`.
 *
 * # Safety
 * `t` is a live handle; `out` is writable.
 */
enum SiltStatus silt_mutate_right(const struct SiltComplex *t,
                                  uintptr_t x,
                                  struct SiltComplex **out);

/**
 * The endomorphism algebra of `t` as a new algebra handle.
 *
 * # Safety
 * `t` is a live handle; `out` is writable.
 */
enum SiltStatus silt_end_algebra(const struct SiltComplex *t, struct SiltAlgebra **out);

/**
 * Runs the command line with `argc` arguments (program name excluded).
 * `code` receives the exit code and `report` the output text.
 *
 * # Safety
 * `argv` is readable for `argc` NUL-terminated strings; `code` and `report`
 * are writable. Free `*report` with `silt_string_free`.
 */
enum SiltStatus silt_run(uintptr_t argc, const char *const *argv, int32_t *code, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SILT_H */
