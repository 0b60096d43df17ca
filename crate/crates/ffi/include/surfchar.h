#ifndef SURFCHAR_H
#define SURFCHAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SurfcharStatus {
  SURFCHAR_STATUS_OK = 0,
  SURFCHAR_STATUS_NULL_POINTER = 1,
  SURFCHAR_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed or out-of-range input (CLI exit class 2).
   */
  SURFCHAR_STATUS_INVALID_INPUT = 3,
  /**
   * Budget, solver or geometry failure (CLI exit class 3).
   */
  SURFCHAR_STATUS_COMPUTATION_FAILED = 4,
  SURFCHAR_STATUS_PANIC = 5,
} SurfcharStatus;

/**
 * Opaque handle to a surface of fixed genus.
 */
typedef struct SurfcharSurface SurfcharSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a surface of genus `genus >= 2`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SurfcharStatus surfchar_surface_new(size_t genus, struct SurfcharSurface **out);

/**
 * # Safety
 * `s` must come from [`surfchar_surface_new`] and not be used afterwards.
 */
void surfchar_surface_free(struct SurfcharSurface *s);

/**
 * # Safety
 * `s` must be a live handle or null.
 */
size_t surfchar_surface_genus(const struct SurfcharSurface *s);

/**
 * Geometric intersection number of two curves given as words.
 *
 * # Safety
 * Pointers must be valid; strings NUL-terminated.
 */
enum SurfcharStatus surfchar_intersection_number(const struct SurfcharSurface *s,
                                                 const char *x,
                                                 const char *y,
                                                 uint64_t *out);

/**
 * # Safety
 * Pointers must be valid; strings NUL-terminated.
 */
enum SurfcharStatus surfchar_self_intersection(const struct SurfcharSurface *s,
                                               const char *word,
                                               uint64_t *out);

/**
 * # Safety
 * Pointers must be valid; strings NUL-terminated.
 */
enum SurfcharStatus surfchar_is_simple(const struct SurfcharSurface *s,
                                       const char *word,
                                       bool *out);

/**
 * Expansion of `t_word` as `RATIONAL<TAB>multicurve` lines.
 *
 * # Safety
 * Pointers must be valid; free the result with [`surfchar_string_free`].
 */
enum SurfcharStatus surfchar_expand_trace(const struct SurfcharSurface *s,
                                          const char *word,
                                          char **out);

/**
 * Product of two expressions in the `RATIONAL<TAB>multicurve` format.
 *
 * # Safety
 * Pointers must be valid; free the result with [`surfchar_string_free`].
 */
enum SurfcharStatus surfchar_multiply(const struct SurfcharSurface *s,
                                      const char *f,
                                      const char *g,
                                      char **out);

/**
 * Value of the lamination valuation on `t_word`; `-inf` for zero.
 * The lamination uses the inline `RATIONAL word; ...` format.
 *
 * # Safety
 * Pointers must be valid; free the result with [`surfchar_string_free`].
 */
enum SurfcharStatus surfchar_valuate(const struct SurfcharSurface *s,
                                     const char *lamination,
                                     const char *word,
                                     char **out);

/**
 * `Discrete` or `NotDiscrete witness=... value=...`.
 *
 * # Safety
 * Pointers must be valid; free the result with [`surfchar_string_free`].
 */
enum SurfcharStatus surfchar_classify(const struct SurfcharSurface *s,
                                      const char *lamination,
                                      char **out);

/**
 * Image of a word under a Humphries twist generator (or its inverse).
 *
 * # Safety
 * Pointers must be valid; free the result with [`surfchar_string_free`].
 */
enum SurfcharStatus surfchar_twist_word(const struct SurfcharSurface *s,
                                        size_t which,
                                        bool inverse,
                                        const char *word,
                                        char **out);

/**
 * Sign action of the character `bits` (`a1 b1 ... ag bg`) on an expression.
 *
 * # Safety
 * Pointers must be valid; free the result with [`surfchar_string_free`].
 */
enum SurfcharStatus surfchar_sign_action(const struct SurfcharSurface *s,
                                         const char *bits,
                                         const char *f,
                                         char **out);

/**
 * # Safety
 * `p` must come from this library or be null.
 */
void surfchar_string_free(char *p);

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * call into the library on the same thread.
 */
const char *surfchar_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SURFCHAR_H */
