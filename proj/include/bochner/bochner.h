/* Copyright 2026 The bochner-scan Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the bochner library. Functions are opaque handles; every
 * call returns a status code and, on failure, leaves a message retrievable
 * with bochner_last_error() on the calling thread. Strings returned through
 * char** outputs are owned by the caller and released with
 * bochner_string_free().
 */

#ifndef BOCHNER_BOCHNER_H_
#define BOCHNER_BOCHNER_H_

#include <stddef.h>

#if defined(BOCHNER_BUILDING_LIBRARY)
#define BOCHNER_API __attribute__((visibility("default")))
#else
#define BOCHNER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bochner_status {
  BOCHNER_OK = 0,
  BOCHNER_INVALID_ARGUMENT = 1, /* bad input or configuration */
  BOCHNER_NUMERIC_ERROR = 2,    /* a computation failed to produce a finite result */
  BOCHNER_IO_ERROR = 3,         /* output could not be written */
  BOCHNER_INTERNAL_ERROR = 4
} bochner_status;

/* e^{-a r^2} Q(r^2) in dimension 1 or 2. */
typedef struct bochner_func bochner_func;

BOCHNER_API const char* bochner_version(void);

/* Message of the last failed call on this thread; "" if none. */
BOCHNER_API const char* bochner_last_error(void);

/* Mix of basis functions (even Hermite functions in 1D, Laguerre functions in 2D). */
BOCHNER_API bochner_status bochner_func_from_basis(int dim, const double* coeffs, size_t n, int normalized,
                                                   bochner_func** out);

/* Width a > 0 and coefficients p_0..p_{n-1} of Q. */
BOCHNER_API bochner_status bochner_func_from_poly(int dim, double width, const double* p, size_t n,
                                                  bochner_func** out);

BOCHNER_API void bochner_func_free(bochner_func* f);

/* Copies out the representation. *n receives the coefficient count even when
 * it exceeds cap; only min(cap, *n) values are written. */
BOCHNER_API bochner_status bochner_func_get(const bochner_func* f, int* dim, double* width, double* p, size_t cap,
                                            size_t* n);

BOCHNER_API bochner_status bochner_func_eval(const bochner_func* f, double r, double* value);

/* f(i r); saturates to +/-inf. */
BOCHNER_API bochner_status bochner_func_eval_imag(const bochner_func* f, double r, double* value);

/* Exact cosine (1D) or Fourier-Bessel (2D) transform. */
BOCHNER_API bochner_status bochner_func_transform(const bochner_func* f, bochner_func** out);

/* Nonnegativity of the function on [0, inf). *witness_r is r with f(r) < 0,
 * or -1 when nonnegative. */
BOCHNER_API bochner_status bochner_func_is_nonneg(const bochner_func* f, int* nonneg, double* witness_r);

/* First odd moment of the transform from the r-space formula, and <s> = mu1 / mu0. */
BOCHNER_API bochner_status bochner_func_mean_s(const bochner_func* f, double* mu1, double* mean_s);

/* Runs the criterion checklist on f. options_json may be NULL or an object
 * with any of: criteria, orders, b, qmax, rmin, rmax, rstep, imag_rmax,
 * imag_rstep, early_exit. The result is a JSON array of verdicts. */
BOCHNER_API bochner_status bochner_analyze(const bochner_func* f, const char* options_json, char** result_json);

/* Executes a full run from a configuration document and returns the summary. */
BOCHNER_API bochner_status bochner_run(const char* config_json, char** summary_json);

BOCHNER_API void bochner_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BOCHNER_BOCHNER_H_ */
