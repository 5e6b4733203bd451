#ifndef SL3COH_H
#define SL3COH_H

/* Generated from the Rust sources by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum Sl3cohStatus {
  // The call succeeded.
  SL3COH_STATUS_OK = 0,
  // A verification sweep ran to completion and found counterexamples.
  SL3COH_STATUS_VERIFICATION_FAILED = 1,
  // An argument was rejected (bad prime, weight, degree, id, or pointer).
  SL3COH_STATUS_INVALID_ARGUMENT = 2,
  // An internal invariant failed; the library state is still usable.
  SL3COH_STATUS_INTERNAL_ERROR = 3,
} Sl3cohStatus;

// Opaque handle owning one memoized engine for a fixed prime.
typedef struct Sl3cohEngine Sl3cohEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Creates an engine for the prime `p` and stores it in `*out_engine`.
//
// # Safety
// `out_engine` must be a valid pointer.  On success the caller owns the
// handle and must release it with [`sl3coh_engine_free`].
enum Sl3cohStatus sl3coh_engine_new(int64_t p, struct Sl3cohEngine **out_engine);

// Releases an engine created by [`sl3coh_engine_new`].  `engine` may be null.
//
// # Safety
// `engine` must be a pointer previously returned by [`sl3coh_engine_new`]
// that has not already been freed.
void sl3coh_engine_free(struct Sl3cohEngine *engine);

// Computes the cohomology table of the weight `(r, s)` twisted by `bundle`
// (0 = plain, 1 = α, 2 = β) and stores it as JSON in `*out_json`.
//
// # Safety
// `engine` must be a live handle from [`sl3coh_engine_new`]; `out_json`
// must be a valid pointer.  The returned string must be released with
// [`sl3coh_string_free`].
enum Sl3cohStatus sl3coh_table_json(const struct Sl3cohEngine *engine,
                                    int64_t r,
                                    int64_t s,
                                    int32_t bundle,
                                    char **out_json);

// Classifies the support variety of `H^i(r, s)` and stores the report as
// JSON in `*out_json`.  A zero module reports `{"zero": true, ...}`.
//
// # Safety
// `engine` must be a live handle from [`sl3coh_engine_new`]; `out_json`
// must be a valid pointer.  The returned string must be released with
// [`sl3coh_string_free`].
enum Sl3cohStatus sl3coh_support_json(const struct Sl3cohEngine *engine,
                                      int64_t r,
                                      int64_t s,
                                      uint32_t degree,
                                      char **out_json);

// Runs the verification law `prop` (or `"all"`) at the prime `p` over the
// sweep box `|r|,|s| <= box_bound` (negative means the law's default) and
// stores the report array as JSON in `*out_json`.
//
// Returns [`Sl3cohStatus::VerificationFailed`] when every sweep ran but at
// least one law reported counterexamples; the JSON is still written.
//
// # Safety
// `prop` must be a valid NUL-terminated string; `out_json` must be a valid
// pointer.  The returned string must be released with
// [`sl3coh_string_free`].
enum Sl3cohStatus sl3coh_verify_json(const char *prop,
                                     int64_t p,
                                     int64_t box_bound,
                                     char **out_json);

// Renders the weight-lattice figure for the prime `p` as SVG and stores it
// in `*out_svg`.  A negative `box_bound` selects the default; `degree`
// picks the annotated cohomology degree.
//
// # Safety
// `out_svg` must be a valid pointer.  The returned string must be released
// with [`sl3coh_string_free`].
enum Sl3cohStatus sl3coh_figure_svg(int64_t p, int64_t box_bound, uint32_t degree, char **out_svg);

// Releases a string returned by any of the `*_json` / `*_svg` functions.
// `text` may be null.
//
// # Safety
// `text` must be a pointer previously returned by this library that has
// not already been freed.
void sl3coh_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SL3COH_H */
