#ifndef QUARTIC_FORGE_H
#define QUARTIC_FORGE_H

/* Generated by cbindgen from quartic-forge-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call across the C boundary.
 */
typedef enum QfStatus {
  /**
   * The call succeeded; for `qf_certify` the verdict is END_Z_CERTIFIED.
   */
  QF_STATUS_OK = 0,
  /**
   * The pipeline ran but at least one hypothesis was not certified.
   */
  QF_STATUS_NOT_CERTIFIED = 1,
  /**
   * The input was rejected (parse error, wrong degree, inseparable,
   * reducible, bad UTF-8 or bad JSON).
   */
  QF_STATUS_INPUT_ERROR = 2,
  /**
   * An internal invariant, validation, or replay check failed.
   */
  QF_STATUS_INTERNAL_ERROR = 3,
  /**
   * A required pointer argument was null.
   */
  QF_STATUS_NULL_ARGUMENT = 4,
} QfStatus;

/**
 * Opaque certification report handle.
 */
typedef struct QfReport QfReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Certifies `poly` (degree 7, written in one variable, e.g. "t^7 - t - 1")
 * and stores a report handle in `out_report` on any completed run.
 *
 * Returns `Ok` when the verdict is END_Z_CERTIFIED, `NotCertified` when the
 * pipeline completed with a failed stage (a report is still produced), and
 * an error status with no report otherwise. Pass 0 for `prime_bound`,
 * `five_part_budget`, or `seed` to use the defaults.
 *
 * # Safety
 * `poly` must be a valid NUL-terminated string; `out_report` must be a
 * valid pointer. The returned handle must be released with
 * `qf_report_free`.
 */
enum QfStatus qf_certify(const char *poly,
                         uint64_t prime_bound,
                         uint64_t five_part_budget,
                         uint64_t seed,
                         struct QfReport **out_report);

/**
 * Renders a report as JSON into `out_json`.
 *
 * # Safety
 * `report` must be a live handle from `qf_certify`; `out_json` must be a
 * valid pointer. The string is released with `qf_string_free`.
 */
enum QfStatus qf_report_json(const struct QfReport *report, char **out_json);

/**
 * Copies the report's final verdict ("END_Z_CERTIFIED" or
 * "HYPOTHESES_NOT_CERTIFIED") into `out_verdict`.
 *
 * # Safety
 * `report` must be a live handle from `qf_certify`; `out_verdict` must be
 * a valid pointer. The string is released with `qf_string_free`.
 */
enum QfStatus qf_report_verdict(const struct QfReport *report, char **out_verdict);

/**
 * Re-verifies a JSON report produced by `qf_report_json` (or the CLI)
 * without re-running the prime scan. Returns `Ok` when every recorded
 * witness checks out; on failure `qf_last_error` names the stage.
 *
 * # Safety
 * `report_json` must be a valid NUL-terminated string.
 */
enum QfStatus qf_replay_json(const char *report_json);

/**
 * Computes the cubic basis u, v, w and the branch sextic of `poly` and
 * stores them as a JSON object of display strings.
 *
 * # Safety
 * `poly` must be a valid NUL-terminated string; `out_json` must be a valid
 * pointer. The string is released with `qf_string_free`.
 */
enum QfStatus qf_forms_json(const char *poly, char **out_json);

/**
 * Releases a report handle. Null is a no-op.
 *
 * # Safety
 * `report` must be null or a handle from `qf_certify` that has not been
 * freed already.
 */
void qf_report_free(struct QfReport *report);

/**
 * Releases a string produced by this library. Null is a no-op.
 *
 * # Safety
 * `text` must be null or a string returned through one of the out-string
 * parameters, not freed already.
 */
void qf_string_free(char *text);

/**
 * Returns the calling thread's most recent error message, or null when the
 * last call succeeded. The pointer is valid until the next call into this
 * library from the same thread; do not free it.
 */
const char *qf_last_error(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QUARTIC_FORGE_H */
