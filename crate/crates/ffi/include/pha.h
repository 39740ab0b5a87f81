#ifndef PHA_H
#define PHA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PhaStatus {
  PHA_STATUS_OK = 0,
  PHA_STATUS_NULL_POINTER = 1,
  PHA_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Requested truncation below what the state needs.
   */
  PHA_STATUS_TRUNCATION = 3,
  /**
   * Evaluation point inside an excluded neighbourhood or on a zero of `g`.
   */
  PHA_STATUS_SINGULAR = 4,
  PHA_STATUS_BUFFER_TOO_SMALL = 5,
  PHA_STATUS_OVERFLOW = 6,
  /**
   * A Rust panic was caught at the boundary.
   */
  PHA_STATUS_INTERNAL = 7,
} PhaStatus;

/**
 * A normalized coherent state of one ladder, truncated to a Fock block.
 */
typedef struct PhaCoherentState PhaCoherentState;

/**
 * One rational solution of Painleve IV.
 */
typedef struct PhaPivSolution PhaPivSolution;

/**
 * Moments of a coherent state.
 */
typedef struct PhaStatistics {
  double mean_x;
  double mean_p;
  double mean_x2;
  double mean_p2;
  double mean_h;
  double mean_number;
  double uncertainty_product;
} PhaStatistics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static nul-terminated string.
 */
const char *pha_version(void);

/**
 * Copies the calling thread's last error message into `buf`, truncating
 * to `len - 1` bytes plus a nul. Returns the full message length without
 * the nul, or 0 if no error has been recorded.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes.
 */
size_t pha_last_error_message(char *buf, size_t len);

/**
 * Builds the ladder-`j` coherent state with eigenvalue `alpha`.
 * `truncation == 0` picks the smallest adequate truncation.
 *
 * # Safety
 * `out_state` must be valid for writes.
 */
enum PhaStatus pha_cs_new(uint8_t j,
                          double alpha_re,
                          double alpha_im,
                          size_t truncation,
                          struct PhaCoherentState **out_state);

/**
 * # Safety
 * `state` must come from [`pha_cs_new`] and not be used afterwards.
 */
void pha_cs_free(struct PhaCoherentState *state);

/**
 * Number of Fock coefficients held by the state.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PhaStatus pha_cs_len(const struct PhaCoherentState *state, size_t *out_len);

/**
 * Copies the coefficients into `re[0..len]` and `im[0..len]`.
 *
 * # Safety
 * `re` and `im` must be valid for `len` writes.
 */
enum PhaStatus pha_cs_coeffs(const struct PhaCoherentState *state,
                             double *re,
                             double *im,
                             size_t len);

/**
 * # Safety
 * Pointers must be valid.
 */
enum PhaStatus pha_cs_statistics(const struct PhaCoherentState *state,
                                 struct PhaStatistics *out_stats);

/**
 * `|| a_g psi - alpha psi ||` for the stored state.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PhaStatus pha_cs_eigen_residual(const struct PhaCoherentState *state, double *out_value);

/**
 * Closed-form `<a+ a>` of the ladder-`j` state at `|alpha|`.
 *
 * # Safety
 * `out_value` must be valid.
 */
enum PhaStatus pha_a_norm_squared(uint8_t j, double abs_alpha, double *out_value);

/**
 * Painleve IV parameters `(a, b)` for an ordering of the extremal labels
 * `{1, 2, 3}`, given as three bytes.
 *
 * # Safety
 * `ordering` must point at 3 bytes; outputs must be valid.
 */
enum PhaStatus pha_piv_parameters(const uint8_t *ordering, double *out_a, double *out_b);

/**
 * # Safety
 * `ordering` must point at 3 bytes; `out_solution` must be valid.
 */
enum PhaStatus pha_piv_solution_new(const uint8_t *ordering, struct PhaPivSolution **out_solution);

/**
 * # Safety
 * `solution` must come from [`pha_piv_solution_new`] and not be used afterwards.
 */
void pha_piv_solution_free(struct PhaPivSolution *solution);

/**
 * `g(y)`; [`PhaStatus::Singular`] exactly on a pole.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PhaStatus pha_piv_g(const struct PhaPivSolution *solution, double y, double *out_value);

/**
 * Equation residual at `y`, refusing points within `delta` of a pole.
 *
 * # Safety
 * Pointers must be valid.
 */
enum PhaStatus pha_piv_residual(const struct PhaPivSolution *solution,
                                double y,
                                double delta,
                                double *out_value);

/**
 * Normalized Hermite function `psi_n(x)`.
 *
 * # Safety
 * `out_value` must be valid.
 */
enum PhaStatus pha_hermite_function(int64_t n, double x, double *out_value);

/**
 * `|psi(x, t)|^2` of the ladder-`j` state labelled by `z` (eigenvalue `z^3`),
 * summed over Fock levels.
 *
 * # Safety
 * `out_value` must be valid.
 */
enum PhaStatus pha_density_fock(uint8_t j,
                                double z_re,
                                double z_im,
                                double x,
                                double t,
                                double *out_value);

/**
 * Same density, evaluated as a superposition of three Gaussians.
 *
 * # Safety
 * `out_value` must be valid.
 */
enum PhaStatus pha_density_gaussian(uint8_t j,
                                    double z_re,
                                    double z_im,
                                    double x,
                                    double t,
                                    double *out_value);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PHA_H */
