#ifndef QNEWTON_H
#define QNEWTON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

// Which polynomial of a result to export.
typedef enum QnPolynomial {
  // `F`, the extension sum of the naturally labeled dual.
  QN_POLYNOMIAL_F = 0,
  // `N = F / phi`.
  QN_POLYNOMIAL_N = 1,
  // `phi = gcd(F, [m]_q!)`.
  QN_POLYNOMIAL_PHI = 2,
  // `D = [m]_q! / phi`.
  QN_POLYNOMIAL_D = 3,
  // The q-Ehrhart polynomial, as `[c_k]*x^k + ...` over `Q(q)`.
  QN_POLYNOMIAL_E = 4,
} QnPolynomial;

// Status codes. Zero is success.
typedef enum QnStatus {
  QN_STATUS_OK = 0,
  QN_STATUS_NULL_POINTER = 1,
  QN_STATUS_INVALID_UTF8 = 2,
  // Malformed poset, cycle, label out of range, bad argument.
  QN_STATUS_INVALID_INPUT = 3,
  // Extension budget or lattice size guard exceeded.
  QN_STATUS_LIMIT_EXCEEDED = 4,
  // Internal arithmetic failure (inexact or zero division).
  QN_STATUS_ARITHMETIC = 5,
  // A Rust panic was caught at the boundary.
  QN_STATUS_PANIC = 6,
} QnStatus;

// Opaque poset handle.
typedef struct QnPoset QnPoset;

// Opaque handle to a computed q-Ehrhart result.
typedef struct QnResult QnResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after success.
// The pointer stays valid until the next `qn_*` call on the same thread.
const char *qn_last_error_message(void);

// Library version, static storage.
const char *qn_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void qn_string_free(char *s);

// Parses `{"m": 3, "covers": [[1,3],[2,3]]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum QnStatus qn_poset_from_json(const char *json, struct QnPoset **out);

// Builds a poset on `1..=m` from `n_pairs` relations `x < y`, passed
// flattened as `pairs[2i] < pairs[2i+1]`.
//
// # Safety
// `pairs` must point to `2 * n_pairs` values (may be null when
// `n_pairs == 0`); `out` must be writable.
enum QnStatus qn_poset_from_covers(uintptr_t m,
                                   const uintptr_t *pairs,
                                   uintptr_t n_pairs,
                                   struct QnPoset **out);

// # Safety
// `p` must be null or a live handle from this library.
void qn_poset_free(struct QnPoset *p);

// Number of elements, or 0 for a null handle.
//
// # Safety
// `p` must be null or a live handle.
uintptr_t qn_poset_len(const struct QnPoset *p);

// Canonical JSON (cover relations only).
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum QnStatus qn_poset_to_json(const struct QnPoset *p, char **out);

// Computes `F`, `N`, `phi`, `D` and `E`. `max_extensions == 0` selects the
// default budget.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum QnStatus qn_compute(const struct QnPoset *p, uint64_t max_extensions, struct QnResult **out);

// # Safety
// `r` must be null or a live handle from this library.
void qn_result_free(struct QnResult *r);

// The whole result as JSON (`m`, `F`, `N`, `phi`, `D`, `E_numerator`,
// `E_denominator`).
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum QnStatus qn_result_json(const struct QnResult *r, char **out);

// One polynomial in canonical text form.
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum QnStatus qn_result_polynomial(const struct QnResult *r, enum QnPolynomial which, char **out);

// `deg phi`, or 0 for a null handle.
//
// # Safety
// `r` must be null or a live handle.
uint32_t qn_result_phi_degree(const struct QnResult *r);

// Newton polygon of `F` or `N` as TSV (`q<TAB>x` per vertex,
// counterclockwise from the lexicographic minimum).
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum QnStatus qn_result_newton_tsv(const struct QnResult *r, enum QnPolynomial which, char **out);

// Runs the full check suite on one poset. `*passed` is set to 1 when
// every check holds and 0 on a counterexample; `report` (optional)
// receives the JSON report. Zero budgets select the defaults.
//
// # Safety
// `p` must be a live handle; `passed` must be writable; `report` may be
// null.
enum QnStatus qn_verify(const struct QnPoset *p,
                        uint64_t max_extensions,
                        uint32_t max_n,
                        int32_t *passed,
                        char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QNEWTON_H */
