#ifndef UALP_H
#define UALP_H

/* Generated by cbindgen from the ualp-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum UalpStatus {
  UALP_STATUS_OK = 0,
  // Input outside a function's mathematical domain.
  UALP_STATUS_DOMAIN_ERROR = 1,
  // Argument outside an algorithm's supported numerical range.
  UALP_STATUS_RANGE_ERROR = 2,
  // An integrand produced a non-finite value.
  UALP_STATUS_EVALUATION_ERROR = 3,
  // An iteration cap was hit before the stopping rule.
  UALP_STATUS_CONVERGENCE_ERROR = 4,
  // A required pointer argument was null.
  UALP_STATUS_NULL_POINTER = 5,
  // Verification identity name not recognized.
  UALP_STATUS_UNKNOWN_IDENTITY = 6,
  // A verification grid entry was malformed.
  UALP_STATUS_MALFORMED_GRID = 7,
  // A string argument was not valid UTF-8.
  UALP_STATUS_INVALID_UTF8 = 8,
  // Internal numerical assertion failure.
  UALP_STATUS_INTERNAL_ERROR = 9,
} UalpStatus;

// Opaque quadrature configuration handle.
typedef struct UalpQuadratureSpec UalpQuadratureSpec;

// Opaque verification report handle.
typedef struct UalpReport UalpReport;

// Value, error estimate, convergence flag, and evaluation count of one
// quadrature run.
typedef struct UalpIntegralResult {
  double value;
  double error_estimate;
  bool converged;
  uint64_t evaluations;
} UalpIntegralResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Largest argument accepted by `ualp_bessel_j`.
double ualp_bessel_j_max_arg(void);

// ln Gamma(x) for x > 0.
enum UalpStatus ualp_log_gamma(double x, double *out);

// Gamma(a) / Gamma(b) for positive a, b, computed in log space.
enum UalpStatus ualp_gamma_ratio(double a, double b, double *out);

// Bessel J_nu(x) for nu >= 0 and 0 <= x <= ualp_bessel_j_max_arg().
enum UalpStatus ualp_bessel_j(double nu, double x, double *out);

// k-th positive zero (k >= 1) of the integer-order Bessel function J_n.
enum UalpStatus ualp_bessel_j_zero(uint32_t n, uint32_t k, double *out);

// Gegenbauer polynomial C_n^lambda(x) for lambda > 0 and x in [-1, 1].
enum UalpStatus ualp_gegenbauer_c(uint32_t n, double lambda, double x, double *out);

// P_{l'}^{m'}(x) by the defining series, with l' = m_prime + n.
enum UalpStatus ualp_eval(double m_prime, uint32_t n, double x, double *out);

// P_{l'}^{m'}(x) by the Gegenbauer (generating-function) route.
enum UalpStatus ualp_eval_gegenbauer(double m_prime, uint32_t n, double x, double *out);

// Generating function value for |v| < 1 (negative v only for integer m').
enum UalpStatus ualp_generating_fn(double m_prime, double x, double v, double *out);

// Squared L2 norm of P_{l'}^{m'} on [-1, 1].
enum UalpStatus ualp_norm_sq(double m_prime, uint32_t n, double *out);

// Squared norm weighted by 1/(1-x^2); diverges (domain error) at m' = 0.
enum UalpStatus ualp_weighted_norm_sq(double m_prime, uint32_t n, double *out);

// The composed-argument integrand factor
// P_{l'}^{m'}((xt-1)/sqrt(1+t^2-2tx)) (1+t^2-2tx)^{-(l'+1)/2}, 0 < t < 1.
enum UalpStatus ualp_shifted_integrand(double m_prime, uint32_t n, double x, double t, double *out);

// Effective order m' = sqrt(b + m^2) of the ring-shaped potential.
enum UalpStatus ualp_effective_order(double b, uint32_t m, double *out);

// Angular eigenvalue l'(l'+1) with l' = m_prime + n.
enum UalpStatus ualp_angular_eigenvalue(double m_prime, uint32_t n, double *out);

// Maximum normalized residual of the polar angular equation over a theta
// grid of `len` points (each at least 0.05 rad away from 0 and pi).
//
// # Safety
// `theta_grid` must point to `len` readable f64 values.
enum UalpStatus ualp_ode_residual(double m_prime,
                                  uint32_t n,
                                  const double *theta_grid,
                                  size_t len,
                                  double *out);

// Orthogonality closed form (0 off the diagonal n_l != n_k).
enum UalpStatus ualp_orthogonality_closed_form(double m_prime,
                                               uint32_t n_l,
                                               uint32_t n_k,
                                               double *out);

// Closed form of the composed-argument integral.
enum UalpStatus ualp_main_integral_closed_form(double m_prime,
                                               uint32_t n_l,
                                               uint32_t n_k,
                                               double t,
                                               double *out);

// Closed form of the Bessel integral (requires n - m - 1 >= 0).
enum UalpStatus ualp_bessel_integral_closed_form(uint32_t n,
                                                 double m,
                                                 double alpha,
                                                 double z,
                                                 double *out);

// Closed form of Int_0^inf x^m exp(-beta x^n) dx.
enum UalpStatus ualp_power_exp_integral_closed_form(double m, double n, double beta, double *out);

// New quadrature configuration; NULL when the settings are invalid
// (tolerances must be positive, max_levels >= 3, max_segments >= 10).
struct UalpQuadratureSpec *ualp_quadrature_spec_new(double abs_tol,
                                                    double rel_tol,
                                                    uint32_t max_levels,
                                                    uint32_t max_segments);

// Default engine configuration (abs/rel 1e-9, 12 levels, 200 segments).
struct UalpQuadratureSpec *ualp_quadrature_spec_default(void);

// # Safety
// `spec` must be a pointer previously returned by one of the
// `ualp_quadrature_spec_*` constructors, not yet freed; NULL is a no-op.
void ualp_quadrature_spec_free(struct UalpQuadratureSpec *spec);

// Quadrature of the composed-argument integral. `spec` may be NULL for the
// default configuration.
//
// # Safety
// `spec`, when non-NULL, must be a live `ualp_quadrature_spec_*` handle.
enum UalpStatus ualp_main_integral_numeric(double m_prime,
                                           uint32_t n_l,
                                           uint32_t n_k,
                                           double t,
                                           const struct UalpQuadratureSpec *spec,
                                           struct UalpIntegralResult *out);

// Quadrature of the Bessel integral (convergence guard n > 2m + 1/2).
// `spec` may be NULL for the default oscillatory configuration.
//
// # Safety
// `spec`, when non-NULL, must be a live `ualp_quadrature_spec_*` handle.
enum UalpStatus ualp_bessel_integral_numeric(uint32_t n,
                                             double m,
                                             double alpha,
                                             double z,
                                             const struct UalpQuadratureSpec *spec,
                                             struct UalpIntegralResult *out);

// Run one identity's compiled-in default grid and return a report handle
// through `out`. `identity` is one of "norm", "weighted-norm",
// "orthogonality", "main-integral", "bessel-integral", "power-exp".
//
// # Safety
// `identity` must be a NUL-terminated C string; `out` must be writable.
enum UalpStatus ualp_verify_default_grid(const char *identity,
                                         double abs_tol,
                                         double rel_tol,
                                         struct UalpReport **out);

// Number of records in the report.
//
// # Safety
// `report` must be a live handle from `ualp_verify_default_grid`.
size_t ualp_report_len(const struct UalpReport *report);

// 1 if record `index` passed, 0 if it failed, -1 if out of range.
//
// # Safety
// `report` must be a live handle from `ualp_verify_default_grid`.
int32_t ualp_report_record_passed(const struct UalpReport *report, size_t index);

// Pass/fail tallies of the report.
//
// # Safety
// `report` must be a live handle; the out-pointers must be writable or NULL.
enum UalpStatus ualp_report_summary(const struct UalpReport *report,
                                    size_t *total,
                                    size_t *passed,
                                    size_t *failed);

// The report as a JSON document; free the returned string with
// `ualp_string_free`. Returns NULL on a NULL handle.
//
// # Safety
// `report` must be a live handle from `ualp_verify_default_grid`.
char *ualp_report_to_json(const struct UalpReport *report);

// # Safety
// `report` must be a pointer previously returned by
// `ualp_verify_default_grid`, not yet freed; NULL is a no-op.
void ualp_report_free(struct UalpReport *report);

// # Safety
// `s` must be a pointer previously returned by `ualp_report_to_json`, not
// yet freed; NULL is a no-op.
void ualp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UALP_H */
