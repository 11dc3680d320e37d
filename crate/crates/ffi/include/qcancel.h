#ifndef QCANCEL_H
#define QCANCEL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes returned by every fallible entry point.
typedef enum QcStatus {
  QC_STATUS_OK = 0,
  QC_STATUS_NULL_POINTER = 1,
  QC_STATUS_INVALID_WORD = 2,
  QC_STATUS_INVALID_ROOT_ORDER = 3,
  QC_STATUS_INVALID_PARAMETER = 4,
  QC_STATUS_INTERNAL = 5,
} QcStatus;

// Opaque check report.
typedef struct QcReport QcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// `(X+Y)^n - X^n - Y^n` with `YX = qXY`, `q` a root of the `m`-th
// cyclotomic polynomial.
//
// # Safety
// `out` must be a valid pointer to writable storage for one pointer.
enum QcStatus qc_check_frobenius(uint32_t n, uint32_t m, struct QcReport **out);

// Trace identity at a root of unity for the word `word` over `{U, L}`.
//
// # Safety
// `word` must be a NUL-terminated string and `out` writable.
enum QcStatus qc_check_main(const char *word, uint32_t n, uint32_t m, struct QcReport **out);

// # Safety
// `word` must be a NUL-terminated string and `out` writable.
enum QcStatus qc_check_count(const char *word, uint32_t n, struct QcReport **out);

// # Safety
// `word` must be a NUL-terminated string and `out` writable.
enum QcStatus qc_check_positivity(const char *word, uint32_t n, struct QcReport **out);

// # Safety
// `out` must be writable.
enum QcStatus qc_check_sn_trace(uint32_t n, struct QcReport **out);

// `gen` is the ASCII letter `'U'` or `'L'`.
//
// # Safety
// `out` must be writable.
enum QcStatus qc_check_rho_oracle(char gen, uint32_t n, struct QcReport **out);

// # Safety
// `out` must be writable.
enum QcStatus qc_check_qbinom_vanishing(uint32_t n, struct QcReport **out);

// `1` on PASS, `0` on FAIL, `-1` for a null report.
//
// # Safety
// `report` must be null or a live report.
int32_t qc_report_passed(const struct QcReport *report);

// # Safety
// `report` must be null or a live report.
uint64_t qc_report_residual_terms(const struct QcReport *report);

// The report as a JSON object. Null for a null report.
//
// # Safety
// `report` must be null or a live report.
char *qc_report_json(const struct QcReport *report);

// # Safety
// `report` must be null or a live report.
char *qc_report_lhs(const struct QcReport *report);

// # Safety
// `report` must be null or a live report.
char *qc_report_rhs(const struct QcReport *report);

// # Safety
// `report` must be null or a pointer obtained from a `qc_check_*` call that
// has not been freed yet.
void qc_report_free(struct QcReport *report);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void qc_string_free(char *s);

// Static description of a status code. Never null; do not free.
const char *qc_status_message(enum QcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QCANCEL_H */
