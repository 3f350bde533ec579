#ifndef SPTRACE_H
#define SPTRACE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum SptraceStatus {
  SPTRACE_STATUS_OK = 0,
  /*
   A check ran and failed; the report is still produced.
   */
  SPTRACE_STATUS_CHECK_FAILED = 1,
  SPTRACE_STATUS_NULL_POINTER = 2,
  SPTRACE_STATUS_INVALID_UTF8 = 3,
  SPTRACE_STATUS_PARSE = 4,
  SPTRACE_STATUS_IO = 5,
  SPTRACE_STATUS_CHECKSUM = 6,
  SPTRACE_STATUS_INCOMPATIBLE = 7,
  /*
   A value does not fit the requested integer type.
   */
  SPTRACE_STATUS_OVERFLOW = 8,
  /*
   Rank runs disagreed or had too few samples.
   */
  SPTRACE_STATUS_NUMERIC = 9,
  SPTRACE_STATUS_CONFIG = 10,
  SPTRACE_STATUS_PANIC = 11,
} SptraceStatus;

/*
 A rational series N / ∏(1 − x^μ).
 */
typedef struct SptraceSeries SptraceSeries;

/*
 Taylor coefficients up to a total degree.
 */
typedef struct SptraceTable SptraceTable;

/*
 A word list with its alphabet.
 */
typedef struct SptraceWords SptraceWords;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or null. Valid
 until the next failing call on the same thread.
 */
const char *sptrace_last_error_message(void);

/*
 Library version, static storage.
 */
const char *sptrace_version(void);

/*
 # Safety
 `s` must come from this library or be null.
 */
void sptrace_string_free(char *s);

/*
 Parse a series fixture from its text.

 # Safety
 `text` must be a valid C string and `out` a valid pointer.
 */
enum SptraceStatus sptrace_series_parse(const char *text, struct SptraceSeries **out);

/*
 Load a series by file name from the bundled, checksummed data
 directory, or by path.

 # Safety
 `name` must be a valid C string and `out` a valid pointer.
 */
enum SptraceStatus sptrace_series_load(const char *name, struct SptraceSeries **out);

/*
 # Safety
 `s` must come from this library or be null.
 */
void sptrace_series_free(struct SptraceSeries *s);

/*
 Number of series variables, 0 for null.

 # Safety
 `s` must be a live handle or null.
 */
uintptr_t sptrace_series_nvars(const struct SptraceSeries *s);

/*
 Sets `*holds` to 1 when the functional equation holds, else 0.

 # Safety
 `s` must be a live handle and `holds` a valid pointer.
 */
enum SptraceStatus sptrace_series_check_functional_equation(const struct SptraceSeries *s,
                                                            int32_t *holds);

/*
 Expand up to total degree `bound`.

 # Safety
 `s` must be a live handle and `out` a valid pointer.
 */
enum SptraceStatus sptrace_series_expand(const struct SptraceSeries *s,
                                         uint32_t bound,
                                         struct SptraceTable **out);

/*
 # Safety
 `t` must come from this library or be null.
 */
void sptrace_table_free(struct SptraceTable *t);

/*
 Coefficient at the exponent vector `exps` (length `len`, equal to
 the number of variables). Degrees beyond the bound read as 0.

 # Safety
 `t` must be a live handle, `exps` must point to `len` values and
 `out` must be valid.
 */
enum SptraceStatus sptrace_table_get(const struct SptraceTable *t,
                                     const uint32_t *exps,
                                     uintptr_t len,
                                     int64_t *out);

/*
 Parse a word list (`alphabet:` header, one word per line).

 # Safety
 `text` must be a valid C string and `out` a valid pointer.
 */
enum SptraceStatus sptrace_words_parse(const char *text, struct SptraceWords **out);

/*
 Load a word list from the bundled data directory, or by path.

 # Safety
 `name` must be a valid C string and `out` a valid pointer.
 */
enum SptraceStatus sptrace_words_load(const char *name, struct SptraceWords **out);

/*
 # Safety
 `w` must come from this library or be null.
 */
void sptrace_words_free(struct SptraceWords *w);

/*
 Number of words, 0 for null.

 # Safety
 `w` must be a live handle or null.
 */
uintptr_t sptrace_words_len(const struct SptraceWords *w);

/*
 Canonical form of `word` over `alphabet`; `*sign` is 0 when the
 trace vanishes identically.

 # Safety
 Strings must be valid C strings; `canon` and `sign` valid pointers.
 */
enum SptraceStatus sptrace_canonicalize(const char *alphabet,
                                        const char *word,
                                        char **canon,
                                        int8_t *sign);

/*
 Spanning check of `words` against `series` up to total degree
 `bound`, with removals up to `minimality` when it is nonnegative.
 The JSON report goes to `*json`; returns `CheckFailed` when some
 degree is deficient.

 # Safety
 Handles must be live; `json` must be a valid pointer.
 */
enum SptraceStatus sptrace_verify_msg(const struct SptraceWords *words,
                                      const struct SptraceSeries *series,
                                      uint32_t bound,
                                      int32_t minimality,
                                      char **json);

/*
 Run the command line with `argc` arguments (program name excluded);
 the report goes to `*output`. Returns the exit code (0, 1 or 2).

 # Safety
 `argv` must hold `argc` valid C strings; `output` must be valid.
 */
int32_t sptrace_run_cli(uintptr_t argc, const char *const *argv, char **output);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPTRACE_H */
