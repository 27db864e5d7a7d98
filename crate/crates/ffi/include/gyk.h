/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef GYK_H
#define GYK_H

#include <stdbool.h>
#include <stddef.h>

typedef enum GykStatus {
  GYK_STATUS_OK = 0,
  GYK_STATUS_NULL_POINTER = 1,
  GYK_STATUS_INVALID_ARGUMENT = 2,
  GYK_STATUS_PARSE = 3,
  /**
   * The input is well formed but fails the axioms.
   */
  GYK_STATUS_AXIOMS = 4,
  GYK_STATUS_BUDGET = 5,
  GYK_STATUS_BUFFER_TOO_SMALL = 6,
  GYK_STATUS_INTERNAL = 7,
} GykStatus;

typedef struct GykGgc GykGgc;

typedef struct GykGyrogroup GykGyrogroup;

typedef struct GykRightGyrogroup GykRightGyrogroup;

/**
 * Orders of the objects built by the completion.
 */
typedef struct GykGgcOrders {
  size_t gyrogroup;
  size_t gyration_group;
  size_t pair_group;
  size_t normal_closure;
  size_t completion;
  size_t kernel;
} GykGgcOrders;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *gyk_last_error(void);

/**
 * Frees a string returned by the library.
 */
void gyk_string_free(char *s);

enum GykStatus gyk_gyrogroup_from_table(size_t n, const size_t *table, struct GykGyrogroup **out);

/**
 * Parses the text table format.
 */
enum GykStatus gyk_gyrogroup_parse(const char *text, struct GykGyrogroup **out);

void gyk_gyrogroup_free(struct GykGyrogroup *g);

enum GykStatus gyk_gyrogroup_order(const struct GykGyrogroup *g, size_t *out);

enum GykStatus gyk_gyrogroup_op(const struct GykGyrogroup *g, size_t a, size_t b, size_t *out);

/**
 * Writes the images of `gyr[a,b]` into `out[0..order]`.
 */
enum GykStatus gyk_gyrogroup_gyr(const struct GykGyrogroup *g,
                                 size_t a,
                                 size_t b,
                                 size_t *out,
                                 size_t len);

enum GykStatus gyk_gyrogroup_is_associative(const struct GykGyrogroup *g, bool *out);

/**
 * Dimension of the space of functions invariant under translated gyrations.
 */
enum GykStatus gyk_lgyr_dimension(const struct GykGyrogroup *g, size_t *out);

enum GykStatus gyk_ggc_complete(const struct GykGyrogroup *g, struct GykGgc **out);

void gyk_ggc_free(struct GykGgc *c);

enum GykStatus gyk_ggc_orders(const struct GykGgc *c, struct GykGgcOrders *out);

/**
 * Writes `nu(a)` for every `a` into `out[0..|G|]`.
 */
enum GykStatus gyk_ggc_nu(const struct GykGgc *c, size_t *out, size_t len);

/**
 * Writes the kernel of `nu` in ascending order into `out[0..kernel]`.
 */
enum GykStatus gyk_ggc_kernel(const struct GykGgc *c, size_t *out, size_t len);

/**
 * Writes the Cayley table of `M(G)`, row-major, into `out[0..|M|^2]`.
 */
enum GykStatus gyk_ggc_completion_table(const struct GykGgc *c, size_t *out, size_t len);

/**
 * A text summary; free it with `gyk_string_free`.
 */
enum GykStatus gyk_ggc_report(const struct GykGgc *c, char **out);

/**
 * Checks the action axioms for `table[a*k + x] = a·x` on a set of size `k`.
 * `valid` reports the verdict; the status is non-zero only for bad input.
 */
enum GykStatus gyk_action_validate(const struct GykGyrogroup *g,
                                   size_t k,
                                   const size_t *table,
                                   bool *valid);

/**
 * Number of orbits, after checking that both averaging formulas agree.
 */
enum GykStatus gyk_action_burnside(const struct GykGyrogroup *g,
                                   size_t k,
                                   const size_t *table,
                                   size_t *orbits);

enum GykStatus gyk_right_from_table(size_t n, const size_t *table, struct GykRightGyrogroup **out);

/**
 * The right gyrogroup `a∘b = b⁻¹ab²` on the group with Cayley table `table`.
 */
enum GykStatus gyk_right_gbased(size_t n, const size_t *table, struct GykRightGyrogroup **out);

void gyk_right_free(struct GykRightGyrogroup *r);

enum GykStatus gyk_right_order(const struct GykRightGyrogroup *r, size_t *out);

enum GykStatus gyk_right_op(const struct GykRightGyrogroup *r, size_t a, size_t b, size_t *out);

/**
 * Writes the images of `gyr[a,b]` into `out[0..order]`.
 */
enum GykStatus gyk_right_gyr(const struct GykRightGyrogroup *r,
                             size_t a,
                             size_t b,
                             size_t *out,
                             size_t len);

enum GykStatus gyk_right_is_associative(const struct GykRightGyrogroup *r, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GYK_H */
