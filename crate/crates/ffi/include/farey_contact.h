#ifndef FAREY_CONTACT_H
#define FAREY_CONTACT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum FcStatus {
  FC_STATUS_OK = 0,
  FC_STATUS_NULL_POINTER = 1,
  FC_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed slope, curve, matrix or coefficient.
   */
  FC_STATUS_PARSE = 3,
  /**
   * Valid input outside an operation's domain.
   */
  FC_STATUS_DOMAIN = 4,
  FC_STATUS_OVERFLOW = 5,
  FC_STATUS_JSON = 6,
  /**
   * The output buffer is too small; the required length was written.
   */
  FC_STATUS_BUFFER_TOO_SMALL = 7,
  FC_STATUS_PANIC = 8,
} FcStatus;

/**
 * A proof trace.
 */
typedef struct FcTrace FcTrace;

/**
 * A verdict together with the trace that justifies it.
 */
typedef struct FcVerdict FcVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Borrowed; valid
 * until the next failing call on the same thread.
 */
const char *fc_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void fc_string_free(char *s);

/**
 * New dividing slope after a bypass along `ruling` (front if `front`).
 *
 * # Safety
 * `dividing` and `ruling` must be NUL-terminated strings; `out` must be writable.
 */
enum FcStatus fc_bypass_attach(const char *dividing, const char *ruling, bool front, char **out);

/**
 * Shortest Farey path, written as `"a -> b -> c"`.
 *
 * # Safety
 * `from` and `to` must be NUL-terminated strings; `out` must be writable.
 */
enum FcStatus fc_farey_path(const char *from, const char *to, char **out);

/**
 * Geometric intersection number of the classes `(a1,b1)` and `(a2,b2)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum FcStatus fc_intersection(int64_t a1, int64_t b1, int64_t a2, int64_t b2, uint64_t *out);

/**
 * Image of the class `(a,b)` under the figure-eight monodromy, or its inverse.
 *
 * # Safety
 * `out_a` and `out_b` must be writable.
 */
enum FcStatus fc_apply_monodromy(int64_t a,
                                 int64_t b,
                                 bool inverse,
                                 int64_t *out_a,
                                 int64_t *out_b);

/**
 * Rotation numbers realised at `tb`, ascending. Writes the count to
 * `out_len`; returns `BufferTooSmall` if it exceeds `capacity`.
 *
 * # Safety
 * `out` must have room for `capacity` values; `out_len` must be writable.
 */
enum FcStatus fc_mountain_range(int64_t tb, int64_t *out, size_t capacity, size_t *out_len);

/**
 * Replays the whole argument.
 *
 * # Safety
 * `out` must be writable.
 */
enum FcStatus fc_walkthrough(struct FcTrace **out);

/**
 * Parses a trace from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum FcStatus fc_trace_from_json(const char *json, struct FcTrace **out);

/**
 * JSON form of a trace.
 *
 * # Safety
 * `trace` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_trace_to_json(const struct FcTrace *trace, char **out);

/**
 * Re-executes every step against the standard ledger.
 *
 * # Safety
 * `trace` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_trace_reverify(const struct FcTrace *trace, struct FcTrace **out);

/**
 * Number of steps and of failed steps.
 *
 * # Safety
 * `trace` must be a live handle; the out pointers must be writable.
 */
enum FcStatus fc_trace_counts(const struct FcTrace *trace, size_t *steps, size_t *failed);

/**
 * Whether no step failed. A null handle is not sound.
 *
 * # Safety
 * `trace` must be null or a live handle.
 */
bool fc_trace_is_sound(const struct FcTrace *trace);

/**
 * # Safety
 * `trace` must be null or a handle not yet freed.
 */
void fc_trace_free(struct FcTrace *trace);

/**
 * Positive contact surgery with coefficient `coefficient` (e.g. `"3/2"`) on
 * the figure-eight knot with invariants `(tb, rot)`.
 *
 * # Safety
 * `coefficient` must be a NUL-terminated string; `out` must be writable.
 */
enum FcStatus fc_classify_surgery(int64_t tb,
                                  int64_t rot,
                                  const char *coefficient,
                                  struct FcVerdict **out);

/**
 * # Safety
 * `verdict` must be null or a live handle.
 */
bool fc_verdict_is_overtwisted(const struct FcVerdict *verdict);

/**
 * Human-readable reason for the verdict.
 *
 * # Safety
 * `verdict` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_verdict_reason(const struct FcVerdict *verdict, char **out);

/**
 * A copy of the trace behind the verdict, as a separate handle.
 *
 * # Safety
 * `verdict` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_verdict_trace(const struct FcVerdict *verdict, struct FcTrace **out);

/**
 * # Safety
 * `verdict` must be null or a handle not yet freed.
 */
void fc_verdict_free(struct FcVerdict *verdict);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FAREY_CONTACT_H */
