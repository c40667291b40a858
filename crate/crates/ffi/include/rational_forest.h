#ifndef RATIONAL_FOREST_H
#define RATIONAL_FOREST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of every call.
typedef enum RfStatus {
  RF_STATUS_OK = 0,
  RF_STATUS_NULL_POINTER = 1,
  RF_STATUS_INVALID_UTF8 = 2,
  RF_STATUS_PARSE = 3,
  // The fraction does not belong to the requested tree, or is `1/0`/`0/1`.
  RF_STATUS_OUT_OF_TREE = 4,
  // A level or index outside its range, or a depth over the cap.
  RF_STATUS_OUT_OF_RANGE = 5,
  // Any other rejected argument.
  RF_STATUS_DOMAIN = 6,
  // A Rust panic was caught at the boundary.
  RF_STATUS_INTERNAL = 7,
} RfStatus;

typedef enum RfTree {
  RF_TREE_S = 0,
  RF_TREE_SC = 1,
  RF_TREE_SB = 2,
  RF_TREE_CW = 3,
} RfTree;

// Opaque result of [`rf_locate`].
typedef struct RfLocation RfLocation;

// Opaque positive fraction (or one of the pseudo-fractions `1/0`, `0/1`).
typedef struct RfRational RfRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `"n/d"` or `"n"`.
//
// # Safety
// `text` must be NUL-terminated; `out` must be writable.
enum RfStatus rf_rational_parse(const char *text, struct RfRational **out);

// Builds the reduced form of `numer/denom`.
//
// # Safety
// `out` must be writable.
enum RfStatus rf_rational_new(uint64_t numer, uint64_t denom, struct RfRational **out);

// # Safety
// `q` must come from this library and not be freed twice. Null is ignored.
void rf_rational_free(struct RfRational *q);

// Writes `"n/d"`.
//
// # Safety
// `q` must be a live handle; `out` must be writable.
enum RfStatus rf_rational_to_string(const struct RfRational *q, char **out);

// Closed-form position of `q` in `tree`.
//
// # Safety
// `q` must be a live handle; `out` must be writable.
enum RfStatus rf_locate(enum RfTree tree, const struct RfRational *q, struct RfLocation **out);

// # Safety
// `loc` must come from [`rf_locate`] and not be freed twice. Null is ignored.
void rf_location_free(struct RfLocation *loc);

// # Safety
// `loc` must be a live handle; `out` must be writable.
enum RfStatus rf_location_level(const struct RfLocation *loc, uint64_t *out);

// 1-based index within the level, as a decimal string.
//
// # Safety
// `loc` must be a live handle; `out` must be writable.
enum RfStatus rf_location_index(const struct RfLocation *loc, char **out);

// The 0-1 path; empty for vertices above the first path level.
//
// # Safety
// `loc` must be a live handle; `out` must be writable.
enum RfStatus rf_location_path(const struct RfLocation *loc, char **out);

// The vertex of `tree` reached by a 0-1 path.
//
// # Safety
// `path` must be NUL-terminated; `out` must be writable.
enum RfStatus rf_value_at(enum RfTree tree, const char *path, struct RfRational **out);

// Stern-Brocot path to SC-tree path.
//
// # Safety
// `path` must be NUL-terminated; `out` must be writable.
enum RfStatus rf_sb_to_sc(const char *path, char **out);

// SC-tree path to Stern-Brocot path.
//
// # Safety
// `path` must be NUL-terminated; `out` must be writable.
enum RfStatus rf_sc_to_sb(const char *path, char **out);

// Index on Calkin-Wilf level `level` of the vertex at S-tree index `index`
// (decimal strings in and out).
//
// # Safety
// `index` must be NUL-terminated; `out` must be writable.
enum RfStatus rf_s_to_cw_index(uint64_t level, const char *index, char **out);

// The `n`-th Fibonacci number as a decimal string, `F(1) = F(2) = 1`.
//
// # Safety
// `out` must be writable.
enum RfStatus rf_fibonacci(uint64_t n, char **out);

// Space-separated calculator keys that turn `0` into `q`, checked by exact
// replay before returning.
//
// # Safety
// `q` must be a live handle; `out` must be writable.
enum RfStatus rf_buttons(const struct RfRational *q, char **out);

// # Safety
// `s` must come from this library and not be freed twice. Null is ignored.
void rf_string_free(char *s);

// Static description of a status code.
const char *rf_status_message(enum RfStatus status);

// Message for the most recent failure on this thread, or `""`. Valid until
// the next call from the same thread.
const char *rf_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RATIONAL_FOREST_H */
