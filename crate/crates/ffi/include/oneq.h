/* C ABI for the one-query quantum algorithm toolkit. */

#ifndef ONEQ_H
#define ONEQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum {
  ONEQ_STATUS_OK = 0,
  ONEQ_STATUS_NULL_ARGUMENT = 1,
  ONEQ_STATUS_INVALID_UTF8 = 2,
  ONEQ_STATUS_PARSE_ERROR = 3,
  ONEQ_STATUS_DIMENSION_MISMATCH = 4,
  ONEQ_STATUS_INVALID_ARGUMENT = 5,
  /**
   * The function admits no exact one-query algorithm; not an error, but
   * no certificate handle is produced.
   */
  ONEQ_STATUS_NOT_ONE_QUERY = 6,
  ONEQ_STATUS_INTERNAL_ERROR = 7,
} OneqStatus;

/**
 * Opaque handle to a weight certificate.
 */
typedef struct OneqCertificate OneqCertificate;

/**
 * Opaque handle to a parsed partial Boolean function.
 */
typedef struct OneqFunction OneqFunction;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread, or null. The
 * caller frees it with [`oneq_string_free`].
 */
char *oneq_last_error_message(void);

/**
 * Frees a string returned by this library. Null is accepted.
 *
 * # Safety
 * `s` must have been returned by a function of this library and not freed
 * before.
 */
void oneq_string_free(char *s);

/**
 * Parses a function file (UTF-8 text) into a handle stored in `*out`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be a valid
 * pointer to write a handle into.
 */
OneqStatus oneq_function_parse(const char *text, OneqFunction **out);

/**
 * Releases a function handle. Null is accepted.
 *
 * # Safety
 * `f` must have come from [`oneq_function_parse`] and not be freed twice.
 */
void oneq_function_free(OneqFunction *f);

/**
 * Number of variables, or 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
uintptr_t oneq_function_arity(const OneqFunction *f);

/**
 * Number of domain points, or 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
uintptr_t oneq_function_domain_size(const OneqFunction *f);

/**
 * Serializes a function back to the file format. The caller frees the
 * string.
 *
 * # Safety
 * `f` must be a live handle.
 */
char *oneq_function_to_text(const OneqFunction *f);

/**
 * Decides one-query computability, writing the verdict into `*one_query`.
 *
 * # Safety
 * `f` must be a live handle; `one_query` must be valid for a write.
 */
OneqStatus oneq_check(const OneqFunction *f, bool *one_query);

/**
 * Solves for a weight certificate. On success stores a certificate handle
 * in `*out`; returns `NotOneQuery` (with the contradiction trace as the
 * last error message) when the function is not one-query.
 *
 * # Safety
 * `f` must be a live handle; `out` must be valid for a write.
 */
OneqStatus oneq_solve_certificate(const OneqFunction *f, OneqCertificate **out);

/**
 * Parses a certificate file into a handle stored in `*out`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must be valid for a
 * write.
 */
OneqStatus oneq_certificate_parse(const char *text, OneqCertificate **out);

/**
 * Releases a certificate handle. Null is accepted.
 *
 * # Safety
 * `c` must have come from this library and not be freed twice.
 */
void oneq_certificate_free(OneqCertificate *c);

/**
 * Number of variables covered by the certificate (`n`), or 0 for null.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
uintptr_t oneq_certificate_arity(const OneqCertificate *c);

/**
 * Serializes a certificate to the certificate file format. The caller
 * frees the string.
 *
 * # Safety
 * `c` must be a live handle.
 */
char *oneq_certificate_to_text(const OneqCertificate *c);

/**
 * Verifies a certificate against a function, writing the verdict into
 * `*ok`.
 *
 * # Safety
 * `f` and `c` must be live handles; `ok` must be valid for a write.
 */
OneqStatus oneq_verify_certificate(const OneqFunction *f, const OneqCertificate *c, bool *ok);

/**
 * Evaluates `g(x) = <x_D|P|x_D>` exactly for the bit string `bits`
 * (for example "0110") and stores the rational as text `p/q` in `*value`.
 * The caller frees the string.
 *
 * # Safety
 * `f` and `c` must be live handles; `bits` a valid NUL-terminated string;
 * `value` valid for a write.
 */
OneqStatus oneq_evaluate_g(const OneqFunction *f,
                           const OneqCertificate *c,
                           const char *bits,
                           char **value);

/**
 * Runs the one-query algorithm over the whole domain, writing the largest
 * deviation from `f` into `*max_deviation` and whether every input stayed
 * within `tolerance` into `*all_pass`.
 *
 * # Safety
 * `f` and `c` must be live handles; `max_deviation` and `all_pass` must be
 * valid for writes.
 */
OneqStatus oneq_simulate(const OneqFunction *f,
                         const OneqCertificate *c,
                         double tolerance,
                         double *max_deviation,
                         bool *all_pass);

/**
 * Smallest multilinear degree agreeing with the function on its domain,
 * written into `*degree`.
 *
 * # Safety
 * `f` must be a live handle; `degree` must be valid for a write.
 */
OneqStatus oneq_min_degree(const OneqFunction *f, uintptr_t *degree);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ONEQ_H */
