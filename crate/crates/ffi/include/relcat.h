#ifndef RELCAT_H
#define RELCAT_H

#include <stddef.h>
#include <stdint.h>

typedef enum RelcatStatus {
  RELCAT_STATUS_OK = 0,
  RELCAT_STATUS_NULL_POINTER = 1,
  RELCAT_STATUS_INVALID_UTF8 = 2,
  RELCAT_STATUS_INVALID_MODEL = 3,
  RELCAT_STATUS_INVALID_TERM = 4,
  RELCAT_STATUS_UNKNOWN_LAW = 5,
  RELCAT_STATUS_CAP_EXCEEDED = 6,
  RELCAT_STATUS_CHECK_FAILED = 7,
  RELCAT_STATUS_BUFFER_TOO_SMALL = 8,
  RELCAT_STATUS_PANIC = 9,
} RelcatStatus;

/**
 * Opaque model handle.
 */
typedef struct RelcatModel RelcatModel;

/**
 * Outcome counts of one law check.
 */
typedef struct RelcatCheckSummary {
  uint64_t assignments;
  uint64_t satisfying;
  uint64_t violations;
  /**
   * Non-zero when no assignment satisfied the assumptions.
   */
  uint8_t vacuous;
} RelcatCheckSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *relcat_version(void);

/**
 * Copies the last error message of this thread into `buf`.
 *
 * # Safety
 * `buf` must be valid for `cap` bytes; `needed` may be null.
 */
enum RelcatStatus relcat_last_error(char *buf, size_t cap, size_t *needed);

/**
 * Parses a model from JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RelcatStatus relcat_model_from_json(const char *json, struct RelcatModel **out);

/**
 * The embedded three-element chain model.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RelcatStatus relcat_model_embedded(struct RelcatModel **out);

/**
 * Releases a model. Null is ignored.
 *
 * # Safety
 * `model` must come from this library and not be used afterwards.
 */
void relcat_model_free(struct RelcatModel *model);

/**
 * Evaluates `term` and writes the matrix in inline form, e.g. `(0 1) (1 0)`.
 *
 * # Safety
 * `model` must be a live handle, `term` NUL-terminated, `buf` valid for
 * `cap` bytes; `needed` may be null.
 */
enum RelcatStatus relcat_eval(const struct RelcatModel *model,
                              const char *term,
                              char *buf,
                              size_t cap,
                              size_t *needed);

/**
 * Checks a catalog law exhaustively, or by random sampling when `samples`
 * is non-zero.
 *
 * # Safety
 * `model` must be a live handle, `law_id` NUL-terminated and `summary` valid.
 */
enum RelcatStatus relcat_check_law(const struct RelcatModel *model,
                                   const char *law_id,
                                   uint64_t samples,
                                   uint64_t seed,
                                   struct RelcatCheckSummary *summary);

/**
 * Evaluates the six counterexample matrices; `all_match` is set to 1 when
 * every one equals its known value.
 *
 * # Safety
 * `model` must be a live handle and `all_match` valid.
 */
enum RelcatStatus relcat_golden_example(const struct RelcatModel *model, uint8_t *all_match);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELCAT_H */
