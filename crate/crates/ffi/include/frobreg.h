#ifndef FROBREG_H
#define FROBREG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FrobregStatus {
  FROBREG_STATUS_OK = 0,
  FROBREG_STATUS_NULL_POINTER = 1,
  FROBREG_STATUS_INVALID_UTF8 = 2,
  FROBREG_STATUS_INPUT_ERROR = 3,
  FROBREG_STATUS_TIMEOUT = 4,
  FROBREG_STATUS_MATH_ERROR = 5,
  FROBREG_STATUS_BUFFER_TOO_SMALL = 6,
  FROBREG_STATUS_PANIC = 7,
} FrobregStatus;

/**
 * Opaque handle to a graded quotient ring `F_p[vars]/(relations)`.
 */
typedef struct FrobregRing FrobregRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *frobreg_last_error(void);

/**
 * Creates `F_p[vars]/(relations)`. `vars` is whitespace separated;
 * `relations` is comma separated and may be NULL.
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum FrobregStatus frobreg_ring_new(uint64_t p,
                                    const char *vars,
                                    const char *relations,
                                    struct FrobregRing **out);

/**
 * # Safety
 * `ring` must come from `frobreg_ring_new` and not have been freed. NULL is ignored.
 */
void frobreg_ring_free(struct FrobregRing *ring);

/**
 * Krull dimension of the ring.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum FrobregStatus frobreg_ring_dim(const struct FrobregRing *ring, size_t *out);

/**
 * Kunz's exact regularity test.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum FrobregStatus frobreg_kunz_test(const struct FrobregRing *ring, bool *out);

/**
 * Writes `ℓ(R/I^[p^n])` for `n = 1..=n_max` into `out[0..n_max]`. A NULL
 * `ideal` means the maximal ideal; otherwise generators are comma separated.
 *
 * # Safety
 * `ring` must be a live handle and `out` must have room for `capacity` values.
 */
enum FrobregStatus frobreg_ehk_sequence(const struct FrobregRing *ring,
                                        const char *ideal,
                                        uint32_t n_max,
                                        uint64_t *out,
                                        size_t capacity);

/**
 * `ℓ(Tor_i(R/I, F^n R))`. A NULL `ideal` means the maximal ideal.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum FrobregStatus frobreg_tor_length(const struct FrobregRing *ring,
                                      const char *ideal,
                                      size_t i,
                                      uint32_t n,
                                      uint64_t *out);

/**
 * Runs a task file and returns the JSON result document through `out_json`.
 * Free the string with `frobreg_string_free`.
 *
 * # Safety
 * `text` must be NUL-terminated; `out_json` must be writable.
 */
enum FrobregStatus frobreg_run_taskfile(const char *text, char **out_json);

/**
 * # Safety
 * `s` must come from this library and not have been freed. NULL is ignored.
 */
void frobreg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FROBREG_H */
