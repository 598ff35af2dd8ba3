#ifndef SHIFTED_CHAINS_H
#define SHIFTED_CHAINS_H

/* Generated by cbindgen from the shifted-chains-ffi sources. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  // A required pointer argument was null.
  SC_STATUS_NULL_ARGUMENT = 1,
  SC_STATUS_INVALID_UTF8 = 2,
  // Malformed path word, tableau JSON or multichain text.
  SC_STATUS_PARSE_ERROR = 3,
  // Well-formed input outside the domain of the operation.
  SC_STATUS_INVALID_INPUT = 4,
  // A bound or size limit was exceeded.
  SC_STATUS_OUT_OF_RANGE = 5,
  // A panic or broken invariant inside the library.
  SC_STATUS_INTERNAL = 6,
} ScStatus;

// A binary path.
typedef struct ScPath ScPath;

// A shifted tableau.
typedef struct ScTableau ScTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The message of the last failure on this thread, or null after a success.
// The pointer stays valid until the next call into this library on the
// same thread.
const char *sc_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void sc_string_free(char *s);

// Parses a word over `u` and `d`.
//
// # Safety
// `word` must be a nul-terminated string and `out` a valid pointer.
enum ScStatus sc_path_parse(const char *word, struct ScPath **out);

// # Safety
// `path` must be null or a handle from [`sc_path_parse`], not yet freed.
void sc_path_free(struct ScPath *path);

// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_length(const struct ScPath *path, size_t *out);

// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_to_string(const struct ScPath *path, char **out);

// The number of fillings from the path to the top.
//
// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_degree(const struct ScPath *path, uint64_t *out);

// The parts of `λ(P)` as a JSON array, `[]` for `u^n`.
//
// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_shape(const struct ScPath *path, char **out);

// The number of minimal small-interval chains to the top.
//
// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_f(const struct ScPath *path, char **out);

// The number of saturated chains to the top; fails for `u^n`.
//
// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_saturated_count(const struct ScPath *path, char **out);

// The number of multichains of length `k` from the path to the top.
//
// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_multichain_count(const struct ScPath *path, uint32_t k, char **out);

// Summary statistics as a JSON object with string values.
//
// # Safety
// `path` must be a live handle and `out` a valid pointer.
enum ScStatus sc_path_analyze(const struct ScPath *path, char **out);

// Parses a tableau from `{"shape": [...], "rows": [[...], ...]}` or a bare
// array of rows.
//
// # Safety
// `json` must be a nul-terminated string and `out` a valid pointer.
enum ScStatus sc_tableau_parse(const char *json, struct ScTableau **out);

// # Safety
// `tableau` must be null or a handle from this library, not yet freed.
void sc_tableau_free(struct ScTableau *tableau);

// # Safety
// `tableau` must be a live handle and `out` a valid pointer.
enum ScStatus sc_tableau_to_json(const struct ScTableau *tableau, char **out);

// The largest entry, 0 for the empty tableau.
//
// # Safety
// `tableau` must be a live handle and `out` a valid pointer.
enum ScStatus sc_tableau_max(const struct ScTableau *tableau, uint32_t *out);

// The tableau of a multichain given as one word per line, bottom first.
//
// # Safety
// `chain` must be a nul-terminated string and `out` a valid pointer.
enum ScStatus sc_theta(const char *chain, struct ScTableau **out);

// The multichain of length `k` encoded by a tableau, one word per line.
//
// # Safety
// `tableau` must be a live handle and `out` a valid pointer.
enum ScStatus sc_theta_inv(const struct ScTableau *tableau, size_t k, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHIFTED_CHAINS_H */
