#ifndef STRONGCURV_H
#define STRONGCURV_H

/* Generated by cbindgen from strongcurv-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Coset selector for `sc_operator_normal_homogeneous`.
typedef enum ScCoset {
  ScTotalSpace = 0,
  ScBase = 1,
  ScFiber = 2,
} ScCoset;

// Status codes returned by fallible functions.
typedef enum ScStatus {
  ScOk = 0,
  ScNullArgument = 1,
  ScInvalidArgument = 2,
  ScComputationFailed = 3,
  ScInvalidUtf8 = 4,
  ScPanic = 5,
} ScStatus;

// Certification outcomes (see `sc_certificate_kind`).
typedef enum ScCertKind {
  ScPrimalPositive = 0,
  ScPrimalNonnegative = 1,
  ScDualInfeasible = 2,
  ScInconclusive = 3,
} ScCertKind;

// Opaque certificate handle.
typedef struct ScCertificate ScCertificate;

// Opaque symmetric-operator handle (over the full pair basis).
typedef struct ScOperator ScOperator;

// Opaque homogeneous-splitting handle.
typedef struct ScSplit ScSplit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The pointer
// stays valid until the next failing call on the same thread.
const char *sc_last_error_message(void);

// Library version as a static string.
const char *sc_version(void);

// Build a built-in splitting. `name` is one of sphere, cpn, hpn, w6,
// w12, w7, b7, b13, berger7; `n` feeds sphere/cpn/hpn, `k`/`l` feed w7
// (pass 0 when unused). Returns NULL on failure.
//
// # Safety
// `name` must be a valid NUL-terminated string.
struct ScSplit *sc_split_builtin(const char *name, size_t n, int64_t k, int64_t l);

// Load a splitting from its JSON schema. Returns NULL on failure.
//
// # Safety
// `json` must be a valid NUL-terminated string.
struct ScSplit *sc_split_from_json(const char *json);

// Serialize a splitting to JSON; free the string with `sc_string_free`.
//
// # Safety
// `split` must be a live handle from this library or NULL.
char *sc_split_to_json(const struct ScSplit *split);

// Tangent dimension (dim m + dim p) of a splitting; 0 for NULL.
//
// # Safety
// `split` must be a live handle or NULL.
size_t sc_split_tangent_dim(const struct ScSplit *split);

// # Safety
// `split` must come from this library and not be freed twice.
void sc_split_free(struct ScSplit *split);

// Normal homogeneous curvature operator of the selected coset.
//
// # Safety
// `split` must be a live handle or NULL.
struct ScOperator *sc_operator_normal_homogeneous(const struct ScSplit *split, enum ScCoset coset);

// Curvature operator of the fiber-rescaled metric g_t.
//
// # Safety
// `split` must be a live handle or NULL.
struct ScOperator *sc_operator_fiber_rescaled(const struct ScSplit *split, double t);

// Side length of the operator matrix (the number of basis 2-vectors).
//
// # Safety
// `op` must be a live handle or NULL.
size_t sc_operator_dim(const struct ScOperator *op);

// Matrix entry in the lexicographic pair basis.
//
// # Safety
// `op` must be a live handle or NULL; `out` must point at a writable f64.
enum ScStatus sc_operator_entry(const struct ScOperator *op, size_t row, size_t col, double *out);

// Smallest eigenvalue of the operator.
//
// # Safety
// `op` must be a live handle or NULL; `out` must point at a writable f64.
enum ScStatus sc_operator_lambda_min(const struct ScOperator *op, double *out);

// Heuristic minimum of the sectional-curvature function (an upper bound
// on the true minimum), deterministic for a fixed seed.
//
// # Safety
// `op` must be a live handle or NULL; `out` must point at a writable f64.
enum ScStatus sc_operator_min_sec(const struct ScOperator *op,
                                  size_t restarts,
                                  uint64_t seed,
                                  double *out);

// # Safety
// `op` must come from this library and not be freed twice.
void sc_operator_free(struct ScOperator *op);

// Certify the operator over the H-invariant 4-forms of the split (the
// operator must live over Λ² of the split's tangent space, or of m for
// base operators). Set `nonnegative` for the semidefinite variant.
//
// # Safety
// `split` and `op` must be live handles or NULL.
struct ScCertificate *sc_certify(const struct ScSplit *split,
                                 const struct ScOperator *op,
                                 bool nonnegative);

// Certify over the full 4-form space of the operator's dimension.
//
// # Safety
// `op` must be a live handle or NULL.
struct ScCertificate *sc_certify_full(const struct ScOperator *op, bool nonnegative);

// Strong-fatness certification of a fibration split.
//
// # Safety
// `split` must be a live handle or NULL.
struct ScCertificate *sc_strong_fatness(const struct ScSplit *split);

// Outcome kind, or -1 for NULL.
//
// # Safety
// `cert` must be a live handle or NULL.
int sc_certificate_kind(const struct ScCertificate *cert);

// Verified λ_min of the modified operator (primal outcomes only).
//
// # Safety
// `cert` must be a live handle or NULL; `out` must point at a writable f64.
enum ScStatus sc_certificate_lambda_min(const struct ScCertificate *cert, double *out);

// `tr(R S)` of a dual certificate.
//
// # Safety
// `cert` must be a live handle or NULL; `out` must point at a writable f64.
enum ScStatus sc_certificate_pairing(const struct ScCertificate *cert, double *out);

// Serialize the certificate summary to JSON; free with `sc_string_free`.
//
// # Safety
// `cert` must be a live handle or NULL.
char *sc_certificate_to_json(const struct ScCertificate *cert);

// # Safety
// `cert` must come from this library and not be freed twice.
void sc_certificate_free(struct ScCertificate *cert);

// Free a string returned by this library.
//
// # Safety
// `s` must come from this library and not be freed twice.
void sc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRONGCURV_H */
