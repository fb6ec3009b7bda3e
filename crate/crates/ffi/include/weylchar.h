#ifndef WEYLCHAR_H
#define WEYLCHAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WcStatus {
  WC_STATUS_OK = 0,
  // The request is well formed but has no answer (e.g. non-dominant weight).
  WC_STATUS_DOMAIN = 1,
  // Malformed input: unknown algebra, wrong number of labels, bad number.
  WC_STATUS_USAGE = 2,
  // A tensor product exceeded the handle's weight budget.
  WC_STATUS_BUDGET = 3,
  // A required pointer was null.
  WC_STATUS_NULL = 4,
  // Internal panic; the handle should not be reused.
  WC_STATUS_PANIC = 5,
} WcStatus;

// An algebra together with its character cache. Safe to share between
// threads.
typedef struct WcAlgebra WcAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds an algebra from a type string such as `"E8"` or `"A2"`.
// A `budget` of 0 selects the default weight budget.
//
// # Safety
// `type_spec` must be a NUL-terminated string and `out` a writable pointer.
enum WcStatus wc_algebra_new(const char *type_spec, uint64_t budget, struct WcAlgebra **out);

// # Safety
// `alg` must come from [`wc_algebra_new`] and not be used afterwards.
void wc_algebra_free(struct WcAlgebra *alg);

// Rank of the algebra, or 0 for a null handle.
//
// # Safety
// `alg` must be null or a live handle.
uintptr_t wc_algebra_rank(const struct WcAlgebra *alg);

// Dimension of the irreducible representation, as a decimal string.
//
// # Safety
// `labels` must point to `len` values; `alg` must be live.
enum WcStatus wc_weyl_dim(const struct WcAlgebra *alg,
                          const int64_t *labels,
                          uintptr_t len,
                          char **out);

// Clebsch-Gordan series of `left ⊗ right` as JSON.
//
// # Safety
// `left` and `right` must each point to `len` values; `alg` must be live.
enum WcStatus wc_tensor_json(const struct WcAlgebra *alg,
                             const int64_t *left,
                             const int64_t *right,
                             uintptr_t len,
                             char **out);

// Character as a polynomial in the fundamental characters, in the text
// form `-1 + z1*z2`.
//
// # Safety
// `labels` must point to `len` values; `alg` must be live.
enum WcStatus wc_character(const struct WcAlgebra *alg,
                           const int64_t *labels,
                           uintptr_t len,
                           char **out);

// Same as [`wc_character`] but as JSON `{"terms": [...], "text": ...}`.
//
// # Safety
// See [`wc_character`].
enum WcStatus wc_character_json(const struct WcAlgebra *alg,
                                const int64_t *labels,
                                uintptr_t len,
                                char **out);

// Excitation energy `ε_m(κ)` as an exact rational string. `kappa` is a
// rational such as `"1"` or `"3/2"`.
//
// # Safety
// `labels` must point to `len` values, `kappa` must be NUL-terminated.
enum WcStatus wc_epsilon(const struct WcAlgebra *alg,
                         const int64_t *labels,
                         uintptr_t len,
                         const char *kappa,
                         char **out);

// First-order coefficients `b_j` as a JSON array of decimal strings.
//
// # Safety
// `alg` must be live.
enum WcStatus wc_b_coeffs_json(const struct WcAlgebra *alg, char **out);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void wc_string_free(char *s);

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next call on the same thread.
const char *wc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEYLCHAR_H */
