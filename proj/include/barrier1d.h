/* C interface to the barrier spectral toolkit.
 *
 * All functions return a b1d_status; on any failure b1d_last_error() holds a
 * human-readable message for the calling thread. Handles are opaque and must
 * be released with their matching _free function.
 */
#ifndef BARRIER1D_H
#define BARRIER1D_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  B1D_OK = 0,
  B1D_CHECK_FAILED = 1, /* a verification check reported pass=false */
  B1D_ERR_CONFIG = 2,   /* bad key, value, file, or invariant */
  B1D_ERR_NUMERIC = 3   /* numeric failure (quadrature, guards, domain) */
} b1d_status;

typedef struct b1d_config b1d_config;

b1d_config* b1d_config_create(void);
void b1d_config_free(b1d_config* cfg);

/* assign one key (same keys as the config file); flags and files share this */
b1d_status b1d_config_set(b1d_config* cfg, const char* key, const char* value);
/* merge a key=value file ('#' comments) into cfg */
b1d_status b1d_config_load(b1d_config* cfg, const char* path);

/* message of the last failure on this thread; empty string if none */
const char* b1d_last_error(void);

/* ------------------------------------------------------------------ math */

/* square root on the branch with arg in (-pi/2, pi/2] */
b1d_status b1d_branch_sqrt(double re, double im, double* out_re,
                           double* out_im);

/* the eight closed-form amplitudes at complex wavenumber k, written as
 * re/im pairs in the order t, r_l, r_r, a_l, b_l, a_r, b_r, q (16 doubles) */
b1d_status b1d_coefficients(const b1d_config* cfg, double k_re, double k_im,
                            double out[16]);

/* piecewise eigensolution value and derivative at x;
 * family: "plus" | "minus" | "tilde", side: "left" | "right" */
b1d_status b1d_chi(const b1d_config* cfg, const char* family, const char* side,
                   double e_re, double e_im, double x, double* v_re,
                   double* v_im, double* d_re, double* d_im);

/* resolvent kernel at complex energy (off the nonnegative real axis) */
b1d_status b1d_green(const b1d_config* cfg, double x, double x_prime,
                     double e_re, double e_im, double* out_re, double* out_im);

/* unified wavenumber form of the kernel, valid for all complex k */
b1d_status b1d_green_k(const b1d_config* cfg, double x, double x_prime,
                       double k_re, double k_im, double* out_re,
                       double* out_im);

/* -------------------------------------------------------------- commands */
/* Each command renders a dataset in the config's format ("csv" | "json") to
 * the config's "out" path, or stdout when "out" is empty. */

b1d_status b1d_cmd_coeffs(const b1d_config* cfg);
b1d_status b1d_cmd_eigen(const b1d_config* cfg);
b1d_status b1d_cmd_green(const b1d_config* cfg);
b1d_status b1d_cmd_transform(const b1d_config* cfg);
b1d_status b1d_cmd_wavepacket(const b1d_config* cfg);
b1d_status b1d_cmd_free_limit(const b1d_config* cfg);

/* Runs a check suite ("all" | "coeffs" | "eigen" | "green" | "measure" |
 * "transforms" | "testspace") and emits the report. tol_overrides is an
 * optional array of "name=value" strings. inject_coeff_fault perturbs the
 * transmission amplitude inside the coefficient checks (self-test hook).
 * Returns B1D_CHECK_FAILED, and lists failing checks on stderr, if any check
 * fails. */
b1d_status b1d_cmd_verify(const b1d_config* cfg, const char* suite,
                          double inject_coeff_fault,
                          const char* const* tol_overrides, int n_overrides);

#ifdef __cplusplus
}
#endif

#endif
