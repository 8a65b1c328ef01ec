/* C interface to tropval: exact tropical (max-plus) algebra, valuations, and finite hyperstructures. */

#ifndef TROPVAL_H
#define TROPVAL_H

/* Generated by cbindgen from the tropval-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call. Domain and syntax failures mirror the
// CLI exit codes 1 and 2.
typedef enum TvStatus {
  TV_STATUS_OK = 0,
  TV_STATUS_DOMAIN = 1,
  TV_STATUS_SYNTAX = 2,
  TV_STATUS_NULL_POINTER = 3,
  TV_STATUS_INVALID_UTF8 = 4,
} TvStatus;

// Opaque handle to a finite hyperstructure table.
typedef struct TvHyper TvHyper;

// Opaque handle to a parsed value: a tropical polynomial in Q_max[T] or a
// fraction in Q_max(T).
typedef struct TvValue TvValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parse a tropical expression into a value handle.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be a valid pointer.
enum TvStatus tv_value_parse(const char *src, struct TvValue **out);

// Release a value handle (null is accepted).
//
// # Safety
// `v` must be null or a pointer produced by this library and not yet freed.
void tv_value_free(struct TvValue *v);

// Print a value in the surface syntax (re-parseable).
//
// # Safety
// `v` must be a live value handle; `out` must be a valid pointer.
enum TvStatus tv_value_print(const struct TvValue *v, char **out);

// Canonical form of a polynomial value:
// `coeffs=[...] torder=... degree=...` (exponent 0 upward).
//
// # Safety
// `v` must be a live value handle; `out` must be a valid pointer.
enum TvStatus tv_value_canon(const struct TvValue *v, char **out);

// Unique factorization of a nonzero polynomial value:
// `unit=... tpower=... roots=[...]` with roots in non-increasing order.
//
// # Safety
// `v` must be a live value handle; `out` must be a valid pointer.
enum TvStatus tv_value_factor(const struct TvValue *v, char **out);

// Evaluate a value at a scalar point given in the surface syntax
// (`3/2`, `-inf`, ...); writes the exact result scalar.
//
// # Safety
// `v` must be a live value handle; `at` must be a NUL-terminated string;
// `out` must be a valid pointer.
enum TvStatus tv_value_eval(const struct TvValue *v, const char *at, char **out);

// Normal form of a value as a fraction, printed `(num)/(den)`.
//
// # Safety
// `v` must be a live value handle; `out` must be a valid pointer.
enum TvStatus tv_value_ratify(const struct TvValue *v, char **out);

// Equality test: functional equivalence for polynomials, fraction
// equality (cross-multiplication) otherwise. Writes `true`/`false` into
// `out`.
//
// # Safety
// `a` and `b` must be live value handles; `out` must be a valid pointer.
enum TvStatus tv_value_equiv(const struct TvValue *a, const struct TvValue *b, bool *out);

// Tropical sum (pointwise max) of two values.
//
// # Safety
// `a` and `b` must be live value handles; `out` must be a valid pointer.
enum TvStatus tv_value_add(const struct TvValue *a, const struct TvValue *b, struct TvValue **out);

// Tropical product (classical addition of values) of two values.
//
// # Safety
// `a` and `b` must be live value handles; `out` must be a valid pointer.
enum TvStatus tv_value_mul(const struct TvValue *a, const struct TvValue *b, struct TvValue **out);

// Quotient of two values in Q_max(T); fails on a zero denominator.
//
// # Safety
// `a` and `b` must be live value handles; `out` must be a valid pointer.
enum TvStatus tv_value_div(const struct TvValue *a, const struct TvValue *b, struct TvValue **out);

// Apply a valuation given by a spec string, e.g.
// `kind=strict; base=qmax(T); param=-1`, to an expression; writes the
// exact value (`-inf`, a rational, or `inf`).
//
// # Safety
// `spec` and `expr` must be NUL-terminated strings; `out` must be a valid
// pointer.
enum TvStatus tv_valuate(const char *spec, const char *expr, char **out);

// List the valuation equivalence classes for a kind
// (`classical|strict|hyper`) and carrier (`qmax|qmax(T)`), one
// `label=... param=...` row per line.
//
// # Safety
// `kind` and `carrier` must be NUL-terminated strings; `out` must be a
// valid pointer.
enum TvStatus tv_classify(const char *kind, const char *carrier, char **out);

// The abstract curve attached to Q_max(T): three `point=...` rows plus a
// `points=3 closed_points=2` summary, matching the CLI.
//
// # Safety
// `out` must be a valid pointer.
enum TvStatus tv_curve(char **out);

// Load a built-in hyperstructure: `krasner` or `signs`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be a valid pointer.
enum TvStatus tv_hyper_builtin(const char *name, struct TvHyper **out);

// Parse a hyperstructure table from its textual format.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be a valid pointer.
enum TvStatus tv_hyper_parse(const char *text, struct TvHyper **out);

// Build the quotient hyperring (Z/modulus)/G. `units` is a
// comma-separated list of generators of G, or `full` for the whole unit
// group.
//
// # Safety
// `units` must be a NUL-terminated string; `out` must be a valid pointer.
enum TvStatus tv_hyper_quotient(uint64_t modulus, const char *units, struct TvHyper **out);

// Serialize a hyperstructure to its textual table format (round-trips
// through [`tv_hyper_parse`]).
//
// # Safety
// `h` must be a live hyperstructure handle; `out` must be a valid pointer.
enum TvStatus tv_hyper_serialize(const struct TvHyper *h, char **out);

// Check axioms at a level (`group|ring|field`). `passed` receives the
// verdict; `report` receives the per-axiom report (ends `result=pass` or
// `result=fail`). A failed axiom check still returns `TV_STATUS_OK` —
// the check itself succeeded.
//
// # Safety
// `h` must be a live hyperstructure handle; `level` must be a
// NUL-terminated string; `passed` and `report` must be valid pointers.
enum TvStatus tv_hyper_check(const struct TvHyper *h,
                             const char *level,
                             bool *passed,
                             char **report);

// Search for an isomorphism between two tables. Writes `iso=false` or
// `iso=true` followed by `map=x:y` lines.
//
// # Safety
// `a` and `b` must be live hyperstructure handles; `out` must be a valid
// pointer.
enum TvStatus tv_hyper_iso(const struct TvHyper *a, const struct TvHyper *b, char **out);

// Release a hyperstructure handle (null is accepted).
//
// # Safety
// `h` must be null or a pointer produced by this library and not yet freed.
void tv_hyper_free(struct TvHyper *h);

// Check the R_{+,val} hyperfield axioms exhaustively over a
// comma-separated scalar sample set (e.g. `-inf, 0, 1, 5/2`).
//
// # Safety
// `samples` must be a NUL-terminated string; `passed` and `report` must
// be valid pointers.
enum TvStatus tv_rval_check(const char *samples, bool *passed, char **report);

// Release a string returned by this library (null is accepted).
//
// # Safety
// `s` must be null or a string produced by this library and not yet freed.
void tv_string_free(char *s);

// Copy the current thread's last error message (empty if none). The copy
// must be released with [`tv_string_free`].
//
// # Safety
// `out` must be a valid pointer.
enum TvStatus tv_last_error_message(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TROPVAL_H */
