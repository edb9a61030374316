#ifndef WEAKHOPF_H
#define WEAKHOPF_H

/* This file is generated by cbindgen from weakhopf-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every C-ABI call.
 */
typedef enum WhfStatus {
  /**
   * Operation succeeded and every requested check passed.
   */
  WHF_STATUS_OK = 0,
  /**
   * Checks ran but at least one axiom failed; reports are still written.
   */
  WHF_STATUS_AXIOM_FAILURE = 1,
  /**
   * Unusable input: parse error, unknown target, bad parameters.
   */
  WHF_STATUS_INPUT_ERROR = 2,
  /**
   * A required pointer argument was NULL or not valid UTF-8.
   */
  WHF_STATUS_BAD_POINTER = 3,
} WhfStatus;

/**
 * Opaque handle to a parsed spec file.
 */
typedef struct WhfSpec WhfSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread; do not free.
 */
const char *whf_last_error(void);

/**
 * Library version as a static string; do not free.
 */
const char *whf_version(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `s` must have been produced by a `whf_` function, or be NULL.
 */
void whf_string_free(char *s);

/**
 * Release a spec handle.
 *
 * # Safety
 * `spec` must have been produced by this library, or be NULL.
 */
void whf_spec_free(struct WhfSpec *spec);

/**
 * Parse a spec file from a JSON string into a new handle.
 *
 * # Safety
 * `json` must be a NUL-terminated UTF-8 string; `out` must be valid.
 */
enum WhfStatus whf_spec_parse(const char *json, struct WhfSpec **out);

/**
 * Load and parse a spec file from disk.
 *
 * # Safety
 * `path` must be a NUL-terminated UTF-8 string; `out` must be valid.
 */
enum WhfStatus whf_spec_load(const char *path, struct WhfSpec **out);

/**
 * Canonical JSON of a spec handle, written to `out_json`.
 *
 * # Safety
 * `spec` must be a live handle; `out_json` must be valid.
 */
enum WhfStatus whf_spec_to_json(const struct WhfSpec *spec, char **out_json);

/**
 * Run the checker stack for a named algebra or law; the JSON report is
 * written to `out_report` in either case.
 *
 * # Safety
 * `spec` must be a live handle, `target` a NUL-terminated UTF-8 string.
 */
enum WhfStatus whf_verify(const struct WhfSpec *spec, const char *target, char **out_report);

/**
 * Build the wreath product of a named law. On success `out_product` holds
 * a new spec handle containing the product algebra and `out_report` the
 * combined verification/consistency report.
 *
 * # Safety
 * `spec` must be a live handle, `law` a NUL-terminated UTF-8 string, and
 * `out_product` a valid pointer.
 */
enum WhfStatus whf_wreath(const struct WhfSpec *spec,
                          const char *law,
                          bool with_antipode,
                          struct WhfSpec **out_product,
                          char **out_report);

/**
 * Construct a named gallery example. `params` is a space-separated
 * parameter list (may be empty or NULL), `field` one of `Q`, `F<p>`,
 * `Phi<N>`, `QExt:c0,c1,...` (NULL means `Q`).
 *
 * # Safety
 * `name` must be a NUL-terminated UTF-8 string; `out` must be valid.
 */
enum WhfStatus whf_gallery(const char *name,
                           const char *params,
                           const char *field,
                           struct WhfSpec **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WEAKHOPF_H */
