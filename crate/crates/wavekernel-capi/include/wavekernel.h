#ifndef WAVEKERNEL_H
#define WAVEKERNEL_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by the fallible entry points.
typedef enum WkStatus {
  WK_STATUS_OK = 0,
  WK_STATUS_NULL_ARGUMENT = 1,
  WK_STATUS_INVALID_UTF8 = 2,
  WK_STATUS_CONFIG_ERROR = 3,
  WK_STATUS_UNKNOWN_CHECK = 4,
  WK_STATUS_INTERNAL = 5,
} WkStatus;

// An assembled verification report behind an opaque handle.
typedef struct WkReport WkReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of the underlying verification library, as a static string.
// The pointer is owned by the library and must not be freed.
const char *wk_version(void);

// Message describing the most recent failure on this thread, or null
// when the last call succeeded. The pointer stays valid until the next
// library call on the same thread; do not free it.
const char *wk_last_error_message(void);

// Runs the configured check suites and stores a report handle in
// `out_report`. A null or blank `config_json` runs every suite with
// the built-in fixtures. On any non-`Ok` status the handle is null and
// `wk_last_error_message` carries the detail.
//
// # Safety
// `config_json`, when non-null, must point to a NUL-terminated string
// that stays valid for the duration of the call. `out_report` must be
// a valid writable pointer.
enum WkStatus wk_run(const char *config_json, struct WkReport **out_report);

// Number of checks in the report; 0 for a null handle.
//
// # Safety
// `report`, when non-null, must be a live handle from `wk_run`.
uintptr_t wk_report_total(const struct WkReport *report);

// Number of failed checks; 0 for a null handle.
//
// # Safety
// `report`, when non-null, must be a live handle from `wk_run`.
uintptr_t wk_report_failed(const struct WkReport *report);

// True when every check in the report passed; false for a null handle.
//
// # Safety
// `report`, when non-null, must be a live handle from `wk_run`.
bool wk_report_all_passed(const struct WkReport *report);

// Serializes the report as deterministic pretty-printed JSON into
// `out_json`. Free the string with `wk_string_free`.
//
// # Safety
// `report` must be a live handle from `wk_run`; `out_json` must be a
// valid writable pointer.
enum WkStatus wk_report_to_json(const struct WkReport *report, char **out_json);

// Renders the report as plain text into `out_text`. A non-negative
// `decimal_digits` annotates rational witness values with decimal
// approximations to that many digits; a negative value omits the
// annotations. Free the string with `wk_string_free`.
//
// # Safety
// `report` must be a live handle from `wk_run`; `out_text` must be a
// valid writable pointer.
enum WkStatus wk_report_render_text(const struct WkReport *report,
                                    int32_t decimal_digits,
                                    char **out_text);

// Looks up a check id and stores a one-line description
// `suite/check_id: summary` into `out_text`. Free the string with
// `wk_string_free`.
//
// # Safety
// `check_id` must point to a NUL-terminated string valid for the
// duration of the call; `out_text` must be a valid writable pointer.
enum WkStatus wk_describe_check(const char *check_id, char **out_text);

// Releases a report handle. Null is ignored.
//
// # Safety
// `report` must be a handle from `wk_run` that has not been freed.
void wk_report_free(struct WkReport *report);

// Releases a string produced by this library. Null is ignored.
//
// # Safety
// `s` must be a string from this library that has not been freed.
void wk_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* WAVEKERNEL_H */
