#ifndef FIBRA_FIBRA_H
#define FIBRA_FIBRA_H

/*
 * C interface of the fibra library.
 *
 * Every input and every result is a JSON document (UTF-8, NUL terminated).
 * Result strings are allocated by the library and released with
 * fibra_string_free. Functions return a status code; on failure the message
 * of the most recent error on the calling thread is available from
 * fibra_last_error until the next call on that thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FIBRA_BUILDING_LIBRARY)
#define FIBRA_API __attribute__((visibility("default")))
#else
#define FIBRA_API
#endif

typedef enum fibra_status {
  FIBRA_OK = 0,
  FIBRA_ERR_PARSE = 1,            /* malformed JSON or numbers */
  FIBRA_ERR_INVALID_ARGUMENT = 2, /* out-of-range or inconsistent arguments */
  FIBRA_ERR_DOMAIN = 3,           /* mathematical precondition failed */
  FIBRA_ERR_RESOURCE = 4,         /* a size or time limit would be exceeded */
  FIBRA_ERR_INTERNAL = 5
} fibra_status;

typedef struct fibra_surface fibra_surface;

FIBRA_API const char* fibra_version(void);
FIBRA_API const char* fibra_last_error(void);
/* Machine-readable name of the last error, e.g. "not_on_curve". */
FIBRA_API const char* fibra_last_error_code(void);
FIBRA_API void fibra_string_free(char* s);

/* {"d", "caps", "B", "mazur"}; mazur != 0 selects the bound 2520 for d = 1. */
FIBRA_API fibra_status fibra_bound(unsigned degree, int mazur, char** out_json);

FIBRA_API fibra_status fibra_surface_parse(const char* json, fibra_surface** out);
FIBRA_API void fibra_surface_free(fibra_surface* surface);
FIBRA_API fibra_status fibra_surface_json(const fibra_surface* surface, char** out_json);

/* Validation, d_i, M_i, singular loci, j-maps and rational singular fibres. */
FIBRA_API fibra_status fibra_analyze(const fibra_surface* surface, char** out_json);

FIBRA_API fibra_status fibra_order(const fibra_surface* surface, int axis, const char* point_json, char** out_json);

/* r_max (at most 15) and monomial_budget: 0 selects the defaults 5 and 5000. */
FIBRA_API fibra_status fibra_exclusion(const fibra_surface* surface, int axis, unsigned r, unsigned r_max,
                                       unsigned long monomial_budget, char** out_json);

/* Verdict JSON; *dense is set to 1 for a Dense verdict and 0 otherwise. */
FIBRA_API fibra_status fibra_certify(const fibra_surface* surface, const char* point_json, unsigned degree,
                                     int* dense, char** out_json);

/* points_json is an array of points; n_k a decimal string; mode "min" or "sum". */
FIBRA_API fibra_status fibra_certify_threshold(const fibra_surface* surface, const char* points_json,
                                               const char* n_k, const char* mode, int* dense, char** out_json);

/* *ok is 1 when every fact of the verdict replays. */
FIBRA_API fibra_status fibra_recheck(const char* verdict_json, int* ok, char** out_json);

/* t is "a/b"; threads 0 uses every available core. */
FIBRA_API fibra_status fibra_quartic_search(const char* t, unsigned height, int all, unsigned threads,
                                            int* found, char** out_json);

/* coeffs_json is [a, b, c, d]; point_json is [x, y, z, w]. */
FIBRA_API fibra_status fibra_quartic_certify(const char* coeffs_json, const char* point_json, int* dense,
                                             char** out_json);

/* Searches every t = a/b with 1 <= a, b <= max_term in lowest terms. */
FIBRA_API fibra_status fibra_quartic_sweep(unsigned max_term, unsigned height, unsigned threads, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
