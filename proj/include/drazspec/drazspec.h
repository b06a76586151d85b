#ifndef DRAZSPEC_H
#define DRAZSPEC_H

/* C interface to the drazspec library. Every object is an opaque handle
 * released with its *_free function; every call returns a dsp_status and
 * leaves a message retrievable with dsp_last_error() on failure.
 * Strings returned through char** are owned by the caller and released with
 * dsp_string_free. Reports are JSON documents (see README for schemas). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DRAZSPEC_BUILDING)
#    define DSP_API __declspec(dllexport)
#  else
#    define DSP_API __declspec(dllimport)
#  endif
#else
#  define DSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsp_status {
  DSP_OK = 0,
  DSP_ERR_INVALID_ARGUMENT = 1,
  DSP_ERR_PARSE = 2,
  DSP_ERR_NOT_SQUARE = 3,
  DSP_ERR_NO_CONVERGENCE = 4,
  DSP_ERR_SINGULAR = 5,
  DSP_ERR_ILL_CONDITIONED = 6,
  DSP_ERR_INVALID_DESCRIPTOR = 7,
  DSP_ERR_NOT_IN_SPECTRUM = 8,
  DSP_ERR_CHECK_FAILED = 9,
  DSP_ERR_INTERNAL = 10
} dsp_status;

typedef struct dsp_matrix dsp_matrix;
typedef struct dsp_descriptor dsp_descriptor;

/* Overrides for the numerical tolerances; a field <= 0 keeps the default. */
typedef struct dsp_tolerance {
  double eig_cluster;
  double rank_rel;
  double residual_rel;
} dsp_tolerance;

DSP_API const char* dsp_version(void);
DSP_API const char* dsp_status_string(dsp_status s);
/* Message of the last failed call on this thread ("" if none). */
DSP_API const char* dsp_last_error(void);
DSP_API void dsp_string_free(char* s);

/* Matrices. data is row-major interleaved (re, im), 2*rows*cols doubles. */
DSP_API dsp_status dsp_matrix_create(size_t rows, size_t cols, const double* data, dsp_matrix** out);
DSP_API dsp_status dsp_matrix_from_json(const char* json, dsp_matrix** out);
DSP_API dsp_status dsp_matrix_to_json(const dsp_matrix* m, char** out);
DSP_API size_t dsp_matrix_rows(const dsp_matrix* m);
DSP_API size_t dsp_matrix_cols(const dsp_matrix* m);
DSP_API dsp_status dsp_matrix_get(const dsp_matrix* m, size_t i, size_t j, double* re, double* im);
DSP_API void dsp_matrix_free(dsp_matrix* m);

/* Spectral descriptors. from_json parses only; validation is separate. */
DSP_API dsp_status dsp_descriptor_from_json(const char* json, dsp_descriptor** out);
DSP_API dsp_status dsp_descriptor_to_json(const dsp_descriptor* d, char** out);
DSP_API void dsp_descriptor_free(dsp_descriptor* d);
/* Writes a validation report; *valid is 1 when no invariant is violated. */
DSP_API dsp_status dsp_descriptor_validate(const dsp_descriptor* d, int* valid, char** report_json);

/* Numerical classification of a square matrix (every point is a pole). */
DSP_API dsp_status dsp_classify_matrix(const dsp_matrix* a, const dsp_tolerance* tol, dsp_descriptor** out);
DSP_API dsp_status dsp_drazin_index(const dsp_matrix* a, const dsp_tolerance* tol, size_t* index);
DSP_API dsp_status dsp_drazin_inverse(const dsp_matrix* a, const dsp_tolerance* tol, dsp_matrix** out);
/* Full report (inverse, index, residuals). *within_tolerance is 1 when the
 * axiom residuals are within the residual tolerance. */
DSP_API dsp_status dsp_drazin_report(const dsp_matrix* a, const dsp_tolerance* tol, int* within_tolerance,
                                     char** report_json);
DSP_API dsp_status dsp_pole_order(const dsp_matrix* a, double re, double im, const dsp_tolerance* tol,
                                  size_t* order);

/* Tensor product report for two validated descriptors. DSP_ERR_INTERNAL
 * signals that the two Drazin spectrum paths disagreed. */
DSP_API dsp_status dsp_tensor_report(const dsp_descriptor* a, const dsp_descriptor* b, char** report_json);

/* Elementary operator X -> S X T on matrices. *match is 1 when the operator
 * spectrum equals the product spectrum as multisets. */
DSP_API dsp_status dsp_elementary_report(const dsp_matrix* s, const dsp_matrix* t, const dsp_tolerance* tol,
                                         int* match, char** report_json);
DSP_API dsp_status dsp_elementary_descriptor_report(const dsp_descriptor* s, const dsp_descriptor* t,
                                                    char** report_json);

/* Runs a verification suite ("drazin", "symbolic", "matrix-tensor",
 * "elementary", "adjoint"). jsonl receives one report per line followed by a
 * summary line. trials == 0 selects the suite default. */
DSP_API dsp_status dsp_verify(const char* suite, size_t trials, uint64_t seed, const dsp_tolerance* tol,
                              char** jsonl, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* DRAZSPEC_H */
