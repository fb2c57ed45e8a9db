#ifndef ANTIQ_H
#define ANTIQ_H

/*
 * C interface to the antiq library.
 *
 * All functions returning a char** allocate a NUL-terminated JSON string
 * that the caller must release with antiq_string_free(). On failure the
 * output pointer is left untouched and antiq_last_error() describes the
 * problem for the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum antiq_status {
  ANTIQ_OK = 0,
  ANTIQ_ERR_INVALID_ARGUMENT = 1,
  ANTIQ_ERR_PARSE = 2,
  ANTIQ_ERR_DIMENSION = 3,
  ANTIQ_ERR_DOMAIN = 4,
  ANTIQ_ERR_INTERNAL = 5
} antiq_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* antiq_last_error(void);

void antiq_string_free(char* s);

/* ---- Hilbert-Schmidt basis ---- */

typedef struct antiq_basis antiq_basis;

/* Generalized Gell-Mann basis of dimension d >= 2. */
antiq_status antiq_basis_create(int d, antiq_basis** out);
void antiq_basis_destroy(antiq_basis* b);

/* Basis as JSON: {"d", "tag", "elements"}. */
antiq_status antiq_basis_json(const antiq_basis* b, char** out_json);

/* Basis dump plus verification report; includes a top-level "pass". */
antiq_status antiq_basis_report(const antiq_basis* b, char** out_json);

/* ---- antilinear superoperators ---- */

typedef struct antiq_superop antiq_superop;

/* Parse {"dim_in", "dim_out", "pairs": [{"A", "B"}, ...]}. */
antiq_status antiq_superop_from_json(const char* json_in, antiq_superop** out);
void antiq_superop_destroy(antiq_superop* m);

/* CP/TP/unital/antiunitary report with residual witnesses; "pass" is the
 * channel property (CP and TP). */
antiq_status antiq_superop_report(const antiq_superop* m, double tol,
                                  char** out_json);

/* Apply to a density matrix given as a JSON matrix; returns the image. */
antiq_status antiq_superop_apply(const antiq_superop* m, const char* rho_json,
                                 char** out_json);

/* ---- report functions (JSON in, JSON out) ---- */

/* State report: hermiticity, trace, purity, characteristic-polynomial
 * coefficients, Bloch-body membership. Input is either a bare JSON matrix,
 * {"matrix": ...}, or a Bloch vector {"d", "x", ...}. */
antiq_status antiq_check_state(const char* json_in, double tol,
                               char** out_json);

/* Theta-conjugation report. Input: {"signature": {...}, "state": matrix,
 * optional "state2": matrix, optional "p": double (default 2),
 * optional "shrink": bool (default true)}. */
antiq_status antiq_theta_report(const char* json_in, double tol,
                                char** out_json);

/* Residuals of the pure-state space-time norm identity over Haar samples. */
antiq_status antiq_verify_eqr(int n, int d, int samples,
                              unsigned long long seed, double tol,
                              char** out_json);

/* Coefficient table and residuals of the entanglement-distribution
 * equality over Haar samples. */
antiq_status antiq_verify_distribution(int n, int d, int samples,
                                       unsigned long long seed, double tol,
                                       char** out_json);

/* Haar-random pure state of the given dimension. */
antiq_status antiq_sample_state(int dim, unsigned long long seed,
                                char** out_json);

/* Random antilinear channel (PSD Choi, trace-preserving by construction). */
antiq_status antiq_sample_channel(int dim_in, int dim_out, int rank,
                                  unsigned long long seed, char** out_json);

/* Apply an orthogonal/Lorentz transform to a Bloch vector. Input:
 * {"transform": {...}, "bloch": {...}, optional "want_physical": bool}. */
antiq_status antiq_transform(const char* json_in, double tol, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ANTIQ_H */
