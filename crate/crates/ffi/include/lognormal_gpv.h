#ifndef LOGNORMAL_GPV_H
#define LOGNORMAL_GPV_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LngStatus {
  LNG_STATUS_OK = 0,
  LNG_STATUS_NULL_POINTER = -1,
  LNG_STATUS_NON_POSITIVE_VALUE = -2,
  LNG_STATUS_SAMPLE_TOO_SMALL = -3,
  LNG_STATUS_OUT_OF_RANGE = -4,
  LNG_STATUS_INVALID_DF = -5,
  LNG_STATUS_DEGENERATE_VARIANCE = -6,
  LNG_STATUS_INVALID_SETTINGS = -7,
  LNG_STATUS_NOT_CONVERGED = -8,
  LNG_STATUS_SIMULATION_FAILED = -9,
  LNG_STATUS_INVALID_ARGUMENT = -10,
  LNG_STATUS_PANIC = -99,
} LngStatus;

/**
 * Values accepted by the `method` parameters.
 */
typedef enum LngMethod {
  LNG_METHOD_GPV = 0,
  LNG_METHOD_KM = 1,
  LNG_METHOD_ZSCORE = 2,
} LngMethod;

/**
 * Values accepted by the `alternative` parameters.
 */
typedef enum LngAlternative {
  LNG_ALTERNATIVE_GREATER = 0,
  LNG_ALTERNATIVE_TWO_SIDED = 1,
} LngAlternative;

/**
 * Opaque simulation experiment: a scenario list, a configuration and,
 * after `lng_experiment_run`, the results.
 */
typedef struct LngExperiment LngExperiment;

/**
 * Opaque random stream.
 */
typedef struct LngRng LngRng;

/**
 * Log-scale sufficient statistics; `s2` has divisor `n`.
 */
typedef struct LngSummary {
  uint64_t n;
  double ybar;
  double s2;
} LngSummary;

typedef struct LngPValue {
  double estimate;
  double mc_se;
  uint64_t m;
  enum LngMethod method;
} LngPValue;

typedef struct LngScenario {
  uint64_t n1;
  uint64_t n2;
  double mu1;
  double mu2;
  double sigma1_sq;
  double sigma2_sq;
} LngScenario;

typedef struct LngOutcome {
  uint64_t rejections;
  uint64_t reps;
  double rate;
  double binom_se;
} LngOutcome;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *lng_status_message(int32_t status);

const char *lng_version(void);

double lng_std_normal_cdf(double x);

/**
 * # Safety
 * `out` must be null or valid for a write.
 */
enum LngStatus lng_two_sided_adjust(double p, double *out);

/**
 * Summarises `len` positive original-scale values.
 *
 * # Safety
 * `values` must point to `len` readable doubles; `out` must be valid for a write.
 */
enum LngStatus lng_summarize_log(const double *values, size_t len, struct LngSummary *out);

/**
 * Runs `method` (an `LngMethod`) on two summaries; `alternative` is an
 * `LngAlternative`. `m` and `seed` are ignored by the
 * deterministic Z-score method.
 *
 * # Safety
 * `group1`, `group2` must be valid for reads and `out` for a write.
 */
enum LngStatus lng_test(int32_t method,
                        const struct LngSummary *group1,
                        const struct LngSummary *group2,
                        int32_t alternative,
                        uint64_t m,
                        uint64_t seed,
                        struct LngPValue *out);

/**
 * Quadrature value of the generalized p-value.
 *
 * # Safety
 * `group1`, `group2` must be valid for reads and `out` for a write.
 */
enum LngStatus lng_gp_value_quadrature(const struct LngSummary *group1,
                                       const struct LngSummary *group2,
                                       int32_t alternative,
                                       size_t grid_size,
                                       double *out);

struct LngRng *lng_rng_new(uint64_t seed, uint64_t stream_id);

/**
 * # Safety
 * `rng` must be null or a handle from `lng_rng_new` not yet freed.
 */
void lng_rng_free(struct LngRng *rng);

/**
 * # Safety
 * `rng` must be a live handle and `out` valid for a write.
 */
enum LngStatus lng_rng_chi_square(struct LngRng *rng, uint64_t df, double *out);

/**
 * # Safety
 * `rng` must be a live handle and `out` valid for a write.
 */
enum LngStatus lng_rng_std_normal(struct LngRng *rng, double *out);

/**
 * New experiment running all three methods. Returns null if the settings
 * are invalid.
 */
struct LngExperiment *lng_experiment_new(uint64_t reps,
                                         uint64_t inner_m,
                                         double alpha,
                                         uint64_t seed);

/**
 * # Safety
 * `exp` must be null or a handle from `lng_experiment_new` not yet freed.
 */
void lng_experiment_free(struct LngExperiment *exp);

/**
 * Appends a scenario and discards any previous results.
 *
 * # Safety
 * `exp` must be a live handle and `scenario` valid for a read.
 */
enum LngStatus lng_experiment_add_scenario(struct LngExperiment *exp,
                                           const struct LngScenario *scenario);

/**
 * Runs every scenario on the global thread pool.
 *
 * # Safety
 * `exp` must be a live handle.
 */
enum LngStatus lng_experiment_run(struct LngExperiment *exp);

/**
 * Outcome of `method` in scenario `index` (insertion order) after a run.
 *
 * # Safety
 * `exp` must be a live handle and `out` valid for a write.
 */
enum LngStatus lng_experiment_outcome(const struct LngExperiment *exp,
                                      size_t index,
                                      int32_t method,
                                      struct LngOutcome *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOGNORMAL_GPV_H */
