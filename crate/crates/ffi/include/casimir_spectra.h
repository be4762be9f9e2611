#ifndef CASIMIR_SPECTRA_H
#define CASIMIR_SPECTRA_H

/* Generated by cbindgen from casimir-spectra-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum {
  CASIMIR_STATUS_OK = 0,
  // A parameter failed validation (non-finite, out of range…).
  CASIMIR_STATUS_INVALID_ARGUMENT = 1,
  // A required pointer was null.
  CASIMIR_STATUS_NULL_POINTER = 2,
  // Quadrature or root finding failed to converge.
  CASIMIR_STATUS_NUMERICAL_FAILURE = 3,
  // The queried roots do not exist in this parameter regime.
  CASIMIR_STATUS_NO_ROOTS = 4,
  // Unexpected internal failure.
  CASIMIR_STATUS_INTERNAL = 5,
} CasimirStatus;

// Which half of space a spectral quantity refers to.
typedef enum {
  CASIMIR_SIDE_RIGHT = 0,
  CASIMIR_SIDE_LEFT = 1,
} CasimirSide;

// Provenance of a rate component.
typedef enum {
  CASIMIR_RATE_METHOD_CLOSED_FORM = 0,
  CASIMIR_RATE_METHOD_QUADRATURE = 1,
} CasimirRateMethod;

// Opaque handle to a monochromatic run configuration. Create with
// `casimir_mono_config_new`, release with `casimir_mono_config_free`.
typedef struct CasimirMonoConfig CasimirMonoConfig;

// Per-frequency spectral decomposition for one side.
typedef struct {
  double n_q;
  double n_mu;
  double n_int;
  double n_total;
} CasimirSpectrum;

// Per-frequency left-minus-right difference decomposition.
typedef struct {
  double d_q;
  double d_mu;
  double d_int;
  double d_total;
} CasimirDifference;

// Total created-particle numbers with per-component provenance.
typedef struct {
  double n_q;
  double n_mu;
  double n_int;
  double n_total;
  double xi;
  CasimirRateMethod method_q;
  CasimirRateMethod method_mu;
  CasimirRateMethod method_int;
} CasimirRates;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of the underlying library as a static NUL-terminated string.
const char *casimir_version(void);

// Allocate a monochromatic configuration handle.
//
// On success writes the handle to `out` and returns `Ok`; the caller
// owns the handle and must release it with `casimir_mono_config_free`.
CasimirStatus casimir_mono_config_new(double mu0,
                                      double lambda0,
                                      double omega0,
                                      double phi,
                                      double eps,
                                      double tau,
                                      CasimirMonoConfig **out);

// Release a configuration handle. Null is accepted and ignored.
void casimir_mono_config_free(CasimirMonoConfig *cfg);

// Monochromatic spectral components (per unit τ) at one frequency.
CasimirStatus casimir_spectrum_components(const CasimirMonoConfig *cfg,
                                          double omega,
                                          CasimirSide side,
                                          CasimirSpectrum *out);

// Left-minus-right difference components (per unit τ) at one frequency.
CasimirStatus casimir_difference_components(const CasimirMonoConfig *cfg,
                                            double omega,
                                            CasimirDifference *out);

// Total created-particle numbers; the motion component is evaluated by
// adaptive quadrature at relative tolerance `tol`.
CasimirStatus casimir_rate_breakdown(const CasimirMonoConfig *cfg, double tol, CasimirRates *out);

// Sign-change frequencies of the right-side interference spectrum.
// Returns `NoRoots` (outputs untouched) when the sign is constant.
CasimirStatus casimir_interference_roots(const CasimirMonoConfig *cfg,
                                         double *out_minus,
                                         double *out_plus);

// Sign-change frequencies of the interference difference. Returns
// `NoRoots` (outputs untouched) when the sign is constant.
CasimirStatus casimir_diff_roots(const CasimirMonoConfig *cfg, double *out_minus, double *out_plus);

// The dimensionless drive parameter ξ = (1+λ₀²)ω₀/μ₀.
CasimirStatus casimir_xi(const CasimirMonoConfig *cfg, double *out);

// Closed-form rate function of the coupling-fluctuation channel.
CasimirStatus casimir_g_of_xi(double xi, double *out);

// Closed-form rate function of the interference channel.
CasimirStatus casimir_i_of_xi(double xi, double *out);

// The parameter-independent zero ξ* ≈ 2.23 of the interference rate.
CasimirStatus casimir_interference_null(double *out);

// The spectral kernel Υ(ω) = ω/[μ₀² + ω²(1+λ₀²)²].
CasimirStatus casimir_upsilon(double mu0, double lambda0, double omega, double *out);

// Reflection amplitude for one side, split into real and imaginary parts.
CasimirStatus casimir_reflection(double mu0,
                                 double lambda0,
                                 double omega,
                                 CasimirSide side,
                                 double *out_re,
                                 double *out_im);

// Transmission amplitude (side-independent), split into parts.
CasimirStatus casimir_transmission(double mu0,
                                   double lambda0,
                                   double omega,
                                   double *out_re,
                                   double *out_im);

// The static S-matrix at ω, written row-major (s₊, r₊, r₋, s₋) into two
// four-element arrays for the real and imaginary parts.
CasimirStatus casimir_s0_matrix(double mu0,
                                double lambda0,
                                double omega,
                                double *out_re,
                                double *out_im);

// Effective squared amplitude |Σᵢ εᵢ e^{iφᵢ}|² of `len` coherent sources
// described by parallel `eps`/`phi` arrays.
CasimirStatus casimir_effective_eps_sq(const double *eps,
                                       const double *phi,
                                       size_t len,
                                       double *out);

// Resonantly enhanced coupling-channel spectral difference (per unit τ)
// of `len` sources sharing frequency ω₀, at spectral frequency ω.
// The first source's phase must be 0.
CasimirStatus casimir_enhanced_delta_n_mu(double mu0,
                                          double lambda0,
                                          double omega0,
                                          double tau,
                                          const double *eps,
                                          const double *phi,
                                          size_t len,
                                          double omega,
                                          double *out);

// General-path spectral components (raw densities) for independently
// driven motion (`omega2`, phase `phi`) and coupling (`omega1`) channels
// sharing amplitude ε and oscillation time τ.
CasimirStatus casimir_general_components(double mu0,
                                         double lambda0,
                                         double omega1,
                                         double omega2,
                                         double phi,
                                         double eps,
                                         double tau,
                                         double omega,
                                         CasimirSide side,
                                         double tol,
                                         CasimirSpectrum *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CASIMIR_SPECTRA_H */
