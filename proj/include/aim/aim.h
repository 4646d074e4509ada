/* C interface to the AIM spin-boson solver. */
#ifndef AIM_AIM_H
#define AIM_AIM_H

#include <stddef.h>

#if defined(_WIN32)
#define AIM_API __declspec(dllexport)
#else
#define AIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aim_status {
  AIM_OK = 0,
  AIM_E_INVALID_ARGUMENT,
  AIM_E_PARSE,
  AIM_E_ZERO_POLYNOMIAL,
  AIM_E_DEGREE_ZERO,
  AIM_E_BAD_PATTERN,
  AIM_E_ZERO_FREQUENCY,
  AIM_E_CONSTRAINT_VIOLATION,
  AIM_E_SINGULAR_SYSTEM,
  AIM_E_COMPLEX_ENERGY,
  AIM_E_IDENTICALLY_ZERO,
  AIM_E_NO_REAL_ROOTS,
  AIM_E_DECOUPLED,
  AIM_E_NOT_POLYNOMIAL,
  AIM_E_DOMAIN_ERROR,
  AIM_E_INTERNAL
} aim_status;

typedef struct aim_model aim_model;
typedef struct aim_spectrum aim_spectrum;
typedef struct aim_eigenfunction aim_eigenfunction;
typedef struct aim_report aim_report;

typedef enum aim_delta { AIM_DELTA_1 = 1, AIM_DELTA_2 = 2, AIM_DELTA_BOTH = 3 } aim_delta;

typedef struct aim_solve_options {
  const char* z0; /* rational text; NULL means 0 */
  int n_max;
  double tol;
  aim_delta which;
} aim_solve_options;

typedef struct aim_level_info {
  int index; /* -1 for flagged roots */
  double energy;
  int converged;
  int n_converged;
  int flagged;
  int delta;
  size_t history_len;
} aim_level_info;

typedef struct aim_check_info {
  const char* suite;
  const char* name;
  double observed;
  double expected;
  double tol;
  int pass;
  const char* note;
} aim_check_info;

/* Message of the last failure on the calling thread. */
AIM_API const char* aim_last_error(void);
AIM_API const char* aim_status_name(aim_status s);

/* Writes the canonical "p/q" form of a rational literal into buf. */
AIM_API aim_status aim_rational_normalize(const char* text, char* buf, size_t len);
/* from + (to - from) * i / (steps - 1), exactly, as canonical text. */
AIM_API aim_status aim_rational_interpolate(const char* from, const char* to, int i, int steps,
                                            char* buf, size_t len);
AIM_API aim_status aim_rational_to_double(const char* text, double* out);

/* Models: "jt", "rashba", "jc", "mjc", "dirac", "custom".
 * Parameters are set by name with rational text values. */
AIM_API aim_status aim_model_create(const char* kind, aim_model** out);
AIM_API void aim_model_free(aim_model* m);
AIM_API aim_status aim_model_set(aim_model* m, const char* key, const char* value);
/* 1 if the model is solved by iteration, 0 if only closed forms apply. */
AIM_API int aim_model_iterative(const aim_model* m);
/* Hermiticity and the satisfied symmetry classes as a bitmask
 * (1 = K1, 2 = N1, 4 = K2, 8 = N2). */
AIM_API aim_status aim_model_validate(const aim_model* m, int* hermitian, int* classes);

AIM_API aim_status aim_solve(const aim_model* m, const aim_solve_options* opts,
                             aim_spectrum** out);
AIM_API void aim_spectrum_free(aim_spectrum* s);
AIM_API size_t aim_spectrum_level_count(const aim_spectrum* s);
AIM_API aim_status aim_spectrum_level(const aim_spectrum* s, size_t i, aim_level_info* out);
AIM_API aim_status aim_spectrum_history(const aim_spectrum* s, size_t level, size_t j, int* n,
                                        double* value);
AIM_API int aim_spectrum_discarded_first_root(const aim_spectrum* s);

/* Closed-form spectra; out receives the (minus, plus) branches. */
AIM_API aim_status aim_closed_form_jc(const char* k, int n, const char* omega, const char* omega0,
                                      const char* kappa_sq, double out[2]);
AIM_API aim_status aim_closed_form_mjc(const char* k, int n, const char* kappa,
                                       const char* omega0, double out[2]);
/* energy[0..1]: inner sign +, outer -/+; energy[2..3]: inner sign -. */
AIM_API aim_status aim_closed_form_dirac(const char* mass, const char* c, const char* omega_prime,
                                         const char* hbar, const char* k, int n,
                                         double energy[4], int real[4]);

AIM_API aim_status aim_eigenfunction_compute(const aim_model* m, double energy, int max_deg,
                                             double sample_tol, aim_eigenfunction** out);
AIM_API void aim_eigenfunction_free(aim_eigenfunction* f);
/* component 1 or 2; coefficients lowest power first, owned by f. */
AIM_API aim_status aim_eigenfunction_coeffs(const aim_eigenfunction* f, int component,
                                            const double** data, size_t* len);
AIM_API double aim_eigenfunction_residual(const aim_eigenfunction* f);
AIM_API aim_status aim_wavefunction(const aim_model* m, const aim_eigenfunction* f,
                                    const double* xs, const double* ys, size_t count,
                                    double* up, double* down);

/* Suites: "table1", "jc", "mjc", "dirac", "all". */
AIM_API aim_status aim_verify(const char* suite, aim_report** out);
AIM_API void aim_report_free(aim_report* r);
AIM_API size_t aim_report_count(const aim_report* r);
AIM_API aim_status aim_report_case(const aim_report* r, size_t i, aim_check_info* out);

#ifdef __cplusplus
}
#endif

#endif
