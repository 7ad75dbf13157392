/* C interface to the kappa verification engine.
 *
 * Opaque handles, integer status codes, UTF-8 strings. Strings returned by
 * kappa_*_render functions are heap-allocated; release them with
 * kappa_string_free. All other const char* results point into the handle
 * and stay valid until it is freed.
 *
 * Status codes mirror the CLI exit codes:
 *   0  all checks passed
 *   1  at least one check failed
 *   2  invalid configuration
 */
#ifndef KAPPA_H
#define KAPPA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kappa_config kappa_config;
typedef struct kappa_report kappa_report;

enum {
  KAPPA_OK = 0,
  KAPPA_CHECK_FAILED = 1,
  KAPPA_CONFIG_ERROR = 2,
};

enum {
  KAPPA_CHECK_PASS = 0,
  KAPPA_CHECK_FAIL = 1,
  KAPPA_CHECK_SKIPPED = 2,
};

/* Last error message of the calling thread (empty string when none). */
const char* kappa_last_error(void);

/* Configuration ---------------------------------------------------------- */

/* Fresh configuration with defaults (order=4, degree=3, samples=20, seed=0,
 * layer=all, deformation=poincare). The metric must be set before running. */
kappa_config* kappa_config_new(void);

/* Parses the line-oriented "key = value" spec format. Returns NULL on
 * syntax or validation errors (see kappa_last_error). */
kappa_config* kappa_config_parse(const char* text);

/* Sets one key (n, metric, deformation, layer, order, degree, samples,
 * seed, output). Returns KAPPA_OK or KAPPA_CONFIG_ERROR. */
int kappa_config_set(kappa_config* cfg, const char* key, const char* value);

/* Validates without running. Returns KAPPA_OK or KAPPA_CONFIG_ERROR. */
int kappa_config_validate(const kappa_config* cfg);

/* Configured report path ("output" key), or empty string. */
const char* kappa_config_output_path(const kappa_config* cfg);

void kappa_config_free(kappa_config* cfg);

/* Running ----------------------------------------------------------------- */

/* Runs the configured layers. Returns NULL on configuration errors. */
kappa_report* kappa_run(const kappa_config* cfg);

/* Overall status: KAPPA_OK or KAPPA_CHECK_FAILED. */
int kappa_report_status(const kappa_report* rep);

size_t kappa_report_check_count(const kappa_report* rep);
const char* kappa_report_check_name(const kappa_report* rep, size_t i);
const char* kappa_report_check_params(const kappa_report* rep, size_t i);
/* KAPPA_CHECK_PASS / FAIL / SKIPPED, or -1 when out of range. */
int kappa_report_check_status(const kappa_report* rep, size_t i);
/* Residual or skip reason (canonical text form; empty when none). */
const char* kappa_report_check_detail(const kappa_report* rep, size_t i);
/* First failing lam order, or -1 when not applicable. */
int kappa_report_check_lambda_order(const kappa_report* rep, size_t i);
double kappa_report_check_wall_ms(const kappa_report* rep, size_t i);

/* Full report as JSON (header with timings + deterministic body) or as
 * human-readable text. Free with kappa_string_free. */
char* kappa_report_render_json(const kappa_report* rep);
char* kappa_report_render_text(const kappa_report* rep);

void kappa_string_free(char* s);
void kappa_report_free(kappa_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* KAPPA_H */
