#ifndef COULOMB_HANKEL_H
#define COULOMB_HANKEL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum {
  CH_STATUS_OK = 0,
  CH_STATUS_NULL_POINTER = 1,
  CH_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Parameter on an excluded set or at a pole of the recurrence.
   */
  CH_STATUS_EXCLUDED_PARAMETER = 3,
  /**
   * Numerical evaluation or zero search could not meet its guarantees.
   */
  CH_STATUS_NUMERIC = 4,
  CH_STATUS_IDENTITY_MISMATCH = 5,
  CH_STATUS_OUT_OF_RANGE = 6,
  CH_STATUS_PANIC = 7,
} ChStatus;

typedef enum {
  CH_RAYLEIGH_METHOD_DIRECT = 0,
  CH_RAYLEIGH_METHOD_CLOSED = 1,
  CH_RAYLEIGH_METHOD_DESNANOT_JACOBI = 2,
} ChRayleighMethod;

typedef enum {
  CH_ZERO_KIND_REAL = 0,
  CH_ZERO_KIND_COMPLEX = 1,
  CH_ZERO_KIND_IMAGINARY = 2,
} ChZeroKind;

/**
 * Opaque result of a zero search.
 */
typedef struct ChZeroReport ChZeroReport;

/**
 * Opaque table of `zeta_L(k)`.
 */
typedef struct ChZetaTable ChZetaTable;

typedef struct {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
} ChRect;

typedef struct {
  double re;
  double im;
  size_t multiplicity;
  ChZeroKind kind;
  double residual;
} ChZero;

typedef struct {
  size_t real;
  size_t complex_pairs;
  size_t imaginary_pairs;
  size_t winding_count;
  size_t unresolved;
} ChZeroCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or `NULL` after a
 * success. The pointer stays valid until the next call on this thread.
 */
const char *ch_last_error(void);

/**
 * Library version as a static string.
 */
const char *ch_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be `NULL` or a string obtained from this library, not yet freed.
 */
void ch_string_free(char *s);

/**
 * Builds `zeta_L(k)` for `k = 2..=kmax`.
 *
 * # Safety
 * `l` and `eta` must be NUL-terminated strings; `out` must be writable.
 */
ChStatus ch_zeta_table_new(const char *l, const char *eta, size_t kmax, ChZetaTable **out);

/**
 * # Safety
 * `table` must be a live handle from [`ch_zeta_table_new`].
 */
size_t ch_zeta_table_kmax(const ChZetaTable *table);

/**
 * `zeta_L(k)` as a reduced fraction string.
 *
 * # Safety
 * `table` must be a live handle; `out` must be writable.
 */
ChStatus ch_zeta_table_get(const ChZetaTable *table, size_t k, char **out);

/**
 * # Safety
 * `table` must be `NULL` or a live handle, released at most once.
 */
void ch_zeta_table_free(ChZetaTable *table);

/**
 * Exact `det H_n(L, eta)`.
 *
 * # Safety
 * `l` and `eta` must be NUL-terminated strings; `out` must be writable.
 */
ChStatus ch_hankel_det(const char *l, const char *eta, size_t n, char **out);

/**
 * Exact Rayleigh Hankel determinant of order `n` and shift `ell`.
 *
 * # Safety
 * `nu` must be a NUL-terminated string; `out` must be writable.
 */
ChStatus ch_rayleigh_det(const char *nu,
                         uint32_t ell,
                         size_t n,
                         ChRayleighMethod method,
                         char **out);

/**
 * Number of complex-conjugate zero pairs of `phi_L(eta, .)`. `nmax = 0`
 * picks the order automatically.
 *
 * # Safety
 * `l` and `eta` must be NUL-terminated strings; `out_pairs` must be writable.
 */
ChStatus ch_classify(const char *l, const char *eta, size_t nmax, size_t *out_pairs);

/**
 * `phi_L(eta, rho)` at `rho = re + i im`.
 *
 * # Safety
 * `out_re` and `out_im` must be writable.
 */
ChStatus ch_phi(double l,
                double eta,
                double re,
                double im,
                double tol,
                double *out_re,
                double *out_im);

/**
 * Locates the zeros of `phi_L(eta, .)`. `region` may be `NULL` for the
 * default search rectangle; `tol <= 0` keeps the default tolerance.
 *
 * # Safety
 * `region` must be `NULL` or readable; `out` must be writable.
 */
ChStatus ch_find_zeros(double l, double eta, const ChRect *region, double tol, ChZeroReport **out);

/**
 * Number of zeros in the report, conjugates and real zeros included.
 *
 * # Safety
 * `report` must be a live handle.
 */
size_t ch_zero_report_len(const ChZeroReport *report);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
ChStatus ch_zero_report_get(const ChZeroReport *report, size_t index, ChZero *out);

/**
 * # Safety
 * `report` must be a live handle; `out` must be writable.
 */
ChStatus ch_zero_report_counts(const ChZeroReport *report, ChZeroCounts *out);

/**
 * # Safety
 * `report` must be `NULL` or a live handle, released at most once.
 */
void ch_zero_report_free(ChZeroReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COULOMB_HANKEL_H */
