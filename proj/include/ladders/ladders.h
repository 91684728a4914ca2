/* C interface to the ladder-operator verification library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every function that can fail returns a
 * ladders_status; the message of the most recent failure on the calling
 * thread is available from ladders_last_error().
 */
#ifndef LADDERS_LADDERS_H
#define LADDERS_LADDERS_H

#include <stddef.h>
#include <stdint.h>

#if defined(LADDERS_BUILDING_LIBRARY)
#define LADDERS_API __attribute__((visibility("default")))
#else
#define LADDERS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ladders_status {
  LADDERS_OK = 0,
  LADDERS_CHECKS_FAILED = 1,
  LADDERS_ERR_CONFIG = 2,
  LADDERS_ERR_NUMERIC = 3,
  LADDERS_ERR_IO = 4,
  LADDERS_ERR_DOMAIN = 5,
  LADDERS_ERR_INVALID_ARGUMENT = 6,
  LADDERS_ERR_INTERNAL = 7
} ladders_status;

typedef struct ladders_config ladders_config;
typedef struct ladders_report ladders_report;
typedef struct ladders_matrix ladders_matrix;

typedef struct ladders_suite_options {
  int has_tolerance;
  double tolerance;
  int has_seed;
  uint64_t seed;
  const char *dump_dir; /* NULL: no dumps */
} ladders_suite_options;

typedef struct ladders_check_info {
  const char *name; /* valid until the report is freed */
  double residual;
  double tolerance;
  int passed;
  int enforced;
} ladders_check_info;

LADDERS_API const char *ladders_version(void);
LADDERS_API const char *ladders_last_error(void);

/* Strings returned through char** are heap-allocated; release them with
 * ladders_string_free. */
LADDERS_API void ladders_string_free(char *s);

LADDERS_API ladders_status ladders_config_parse(const char *text, ladders_config **out);
LADDERS_API ladders_status ladders_config_load(const char *path, ladders_config **out);
LADDERS_API ladders_status ladders_config_descriptor(const ladders_config *cfg, char **out);
LADDERS_API void ladders_config_free(ladders_config *cfg);

/* options may be NULL. */
LADDERS_API ladders_status ladders_run_suite(const ladders_config *cfg,
                                             const ladders_suite_options *options,
                                             ladders_report **out);
LADDERS_API int ladders_report_all_passed(const ladders_report *report);
LADDERS_API size_t ladders_report_check_count(const ladders_report *report);
LADDERS_API ladders_status ladders_report_check(const ladders_report *report, size_t index,
                                                ladders_check_info *out);
LADDERS_API size_t ladders_report_skipped_count(const ladders_report *report);
LADDERS_API ladders_status ladders_report_to_json(const ladders_report *report, char **out);
LADDERS_API ladders_status ladders_report_write(const ladders_report *report, const char *path);
LADDERS_API void ladders_report_free(ladders_report *report);

LADDERS_API ladders_status ladders_build_operator(const ladders_config *cfg, const char *what,
                                                  ladders_matrix **out);
LADDERS_API size_t ladders_matrix_dim(const ladders_matrix *m);
LADDERS_API ladders_status ladders_matrix_entry(const ladders_matrix *m, size_t row, size_t col,
                                                double *re, double *im);
LADDERS_API ladders_status ladders_matrix_to_text(const ladders_matrix *m, char **out);
LADDERS_API ladders_status ladders_matrix_dump(const ladders_matrix *m, const char *path);
LADDERS_API ladders_status ladders_matrix_load(const char *path, ladders_matrix **out);
LADDERS_API void ladders_matrix_free(ladders_matrix *m);

/* Sorted eigenvalues of the family's lowering operator as interleaved
 * (re, im) pairs. Call with values == NULL to query *count, then again with
 * room for 2 * *count doubles. A short buffer fails with
 * LADDERS_ERR_INVALID_ARGUMENT and sets *count to the size needed. */
LADDERS_API ladders_status ladders_spectrum(const ladders_config *cfg, double *values,
                                            size_t *count);

/* Round-trip text form of one complex number. */
LADDERS_API ladders_status ladders_complex_to_text(double re, double im, char **out);

#ifdef __cplusplus
}
#endif

#endif
