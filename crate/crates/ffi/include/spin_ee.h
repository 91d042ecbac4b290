#ifndef SPIN_EE_H
#define SPIN_EE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every binding.
 */
typedef enum SpinEeStatus {
  Ok = 0,
  InvalidParams = 1,
  InvalidInput = 2,
  DosDomain = 3,
  Capacity = 4,
  NumericalFailure = 5,
  NullPointer = 6,
} SpinEeStatus;

/**
 * Opaque model-parameter handle.
 */
typedef struct SpinEeParams SpinEeParams;

/**
 * Per-orbital spectrum record. `beta_eff` is `INFINITY` outside the
 * Debye shell and in the gapless limit.
 */
typedef struct SpinEeSpectrumPoint {
  double xi;
  double u2;
  double v2;
  double entropy;
  double beta_eff;
} SpinEeSpectrumPoint;

/**
 * Constant effective and critical reciprocal temperatures.
 */
typedef struct SpinEeTemperatures {
  double beta_eff_0;
  double beta_c;
  double relative_gap;
} SpinEeTemperatures;

/**
 * Integral value with the quadrature error estimate.
 */
typedef struct SpinEeIntegral {
  double value;
  double error_estimate;
} SpinEeIntegral;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a parameter handle; writes it to `out` on success.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum SpinEeStatus spinee_params_new(double delta,
                                    double debye,
                                    double mu,
                                    struct SpinEeParams **out);

/**
 * Releases a handle created by `spinee_params_new`. Null is a no-op.
 *
 * # Safety
 * `params` must be null or a pointer previously returned by
 * `spinee_params_new` that has not been freed.
 */
void spinee_params_free(struct SpinEeParams *params);

/**
 * Pair-orbital occupation probability `|v(xi)|^2`.
 *
 * # Safety
 * `params` must be a live handle; `out` a valid pointer.
 */
enum SpinEeStatus spinee_occupation_probability(const struct SpinEeParams *params,
                                                double xi,
                                                double *out);

/**
 * Full spectrum record at one orbital energy.
 *
 * # Safety
 * `params` must be a live handle; `out` a valid pointer.
 */
enum SpinEeStatus spinee_spectrum_point(const struct SpinEeParams *params,
                                        double xi,
                                        struct SpinEeSpectrumPoint *out);

/**
 * Mode-dependent effective reciprocal temperature.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SpinEeStatus spinee_beta_eff(double xi, double delta, double *out);

/**
 * Overflow-safe Fermi-Dirac occupation `1/(1 + e^{beta xi})`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SpinEeStatus spinee_fermi_occupation(double xi, double beta, double *out);

/**
 * Canonical effective temperature, BCS critical temperature, and their
 * relative gap.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SpinEeStatus spinee_canonical_temperatures(double delta, struct SpinEeTemperatures *out);

/**
 * Closed-form area law `pi g0 delta`.
 */
double spinee_entropy_area_law(double g0, double delta);

/**
 * Spin entanglement entropy over the Debye shell for a constant DOS
 * and constant gap, by adaptive quadrature at tolerance `abs_tol`.
 *
 * # Safety
 * `params` must be a live handle; `out` a valid pointer.
 */
enum SpinEeStatus spinee_entropy_integral_constant(const struct SpinEeParams *params,
                                                   double g0,
                                                   double abs_tol,
                                                   struct SpinEeIntegral *out);

/**
 * Spin-up and total number variances for a constant DOS and gap.
 *
 * # Safety
 * `params` must be a live handle; both out-pointers must be valid.
 */
enum SpinEeStatus spinee_variance_integral_constant(const struct SpinEeParams *params,
                                                    double g0,
                                                    double abs_tol,
                                                    double *sigma_up_sq,
                                                    double *sigma_total_sq);

/**
 * Macrocanonical entanglement of pairing from the total entropy.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SpinEeStatus spinee_mep_from_entropy(double entropy, double *out);

/**
 * Static description of a status code.
 */
const char *spinee_status_message(enum SpinEeStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPIN_EE_H */
