#ifndef WSNGA_H
#define WSNGA_H

/* Generated from the wsnga-ffi crate by cbindgen; edit the Rust source instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum WsngaStatus {
  WSNGA_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  WSNGA_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  WSNGA_STATUS_UTF8 = 2,
  /**
   * A configuration value violated its invariants.
   */
  WSNGA_STATUS_INVALID_CONFIG = 3,
  /**
   * The deployment was rejected (wrong ids, nothing alive, ...).
   */
  WSNGA_STATUS_INVALID_DEPLOYMENT = 4,
  /**
   * The chromosome elects no living head.
   */
  WSNGA_STATUS_DEGENERATE_CHROMOSOME = 5,
  /**
   * A chromosome string had the wrong length or characters.
   */
  WSNGA_STATUS_BAD_CHROMOSOME = 6,
  /**
   * The exhaustive search cap was exceeded.
   */
  WSNGA_STATUS_TOO_LARGE = 7,
  /**
   * Filesystem or serialization trouble.
   */
  WSNGA_STATUS_IO = 8,
  /**
   * A defect: the library panicked and the unwind was contained.
   */
  WSNGA_STATUS_PANIC = 9,
} WsngaStatus;

/**
 * Which score formula to maximize.
 */
typedef enum WsngaFitnessTag {
  /**
   * Raw mixed-unit sum.
   */
  WSNGA_FITNESS_TAG_UNNORMALIZED = 0,
  /**
   * Normalized, energy-dominant form (the default).
   */
  WSNGA_FITNESS_TAG_NORMALIZED = 1,
  /**
   * Normalized form with caller-chosen term weights.
   */
  WSNGA_FITNESS_TAG_WEIGHTED = 2,
} WsngaFitnessTag;

/**
 * Opaque network deployment.
 */
typedef struct WsngaDeployment WsngaDeployment;

/**
 * Opaque evolution result: per-generation trace plus overall best.
 */
typedef struct WsngaGaResult WsngaGaResult;

/**
 * Opaque lifetime simulation result.
 */
typedef struct WsngaLifetime WsngaLifetime;

/**
 * First-order radio constants.
 */
typedef struct WsngaRadio {
  double electronics_j_per_bit;
  double amplifier_j_per_bit_m2;
  double aggregation_j_per_bit;
  double initial_node_energy_j;
  /**
   * Zero bills `members - 1` receptions per cluster, nonzero bills one
   * per member.
   */
  uint8_t bill_per_member_receive;
} WsngaRadio;

typedef struct WsngaFitness {
  enum WsngaFitnessTag tag;
  /**
   * Read only when `tag` is `Weighted`.
   */
  double energy_weight;
  double distance_weight;
  double head_weight;
} WsngaFitness;

typedef struct WsngaGaConfig {
  uint32_t population_size;
  double crossover_rate;
  double mutation_rate;
  uint32_t generations;
  uint32_t elitism_count;
  struct WsngaFitness fitness;
} WsngaGaConfig;

typedef struct WsngaLifetimeOptions {
  uint64_t total_rounds;
  uint64_t rounds_per_configuration;
  /**
   * Zero clusters with the genetic search, nonzero with LEACH rotation.
   */
  uint8_t use_leach;
  /**
   * Read only when `use_leach` is nonzero.
   */
  double leach_head_probability;
  /**
   * Read only when `use_leach` is zero.
   */
  struct WsngaGaConfig ga;
} WsngaLifetimeOptions;

/**
 * Score of one clustering.
 */
typedef struct WsngaBreakdown {
  double fitness;
  double transfer_energy_j;
  double total_distance_m;
  double rcsd_m;
  uint32_t head_count;
  uint32_t node_count;
} WsngaBreakdown;

typedef struct WsngaGenerationRow {
  uint32_t generation;
  double best_fitness;
  double mean_fitness;
  uint32_t best_head_count;
  double best_rcsd_m;
  double best_transfer_energy_j;
} WsngaGenerationRow;

typedef struct WsngaRoundRow {
  /**
   * 1-based round number.
   */
  uint64_t round;
  uint32_t alive_count;
  double cumulative_energy_j;
  uint32_t head_count;
} WsngaRoundRow;

typedef struct WsngaLifetimeSummary {
  uint8_t has_first_death;
  uint64_t first_death_round;
  uint8_t has_last_death;
  uint64_t last_death_round;
  double total_energy_j;
} WsngaLifetimeSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Detail text of the most recent failure on this thread. The pointer
 * stays valid until the next failing call on the same thread. Never null.
 */
const char *wsnga_last_error_message(void);

/**
 * Releases a string returned by this library. Accepts null.
 */
void wsnga_string_free(char *s);

/**
 * Writes the default radio constants.
 */
enum WsngaStatus wsnga_radio_default(struct WsngaRadio *out);

/**
 * Writes the default search parameters.
 */
enum WsngaStatus wsnga_ga_config_default(struct WsngaGaConfig *out);

/**
 * Writes the default lifetime options (genetic clustering).
 */
enum WsngaStatus wsnga_lifetime_options_default(struct WsngaLifetimeOptions *out);

/**
 * Places `node_count` nodes uniformly at random in the centered field and
 * hands back an owning handle.
 */
enum WsngaStatus wsnga_deployment_generate(uint32_t node_count,
                                           double field_width,
                                           double field_height,
                                           double sink_x,
                                           double sink_y,
                                           uint32_t packet_bits,
                                           uint64_t seed,
                                           struct WsngaDeployment **out);

/**
 * Parses a deployment JSON document (same schema `wsnga deploy` writes).
 */
enum WsngaStatus wsnga_deployment_from_json(const char *json,
                                            uint32_t packet_bits,
                                            struct WsngaDeployment **out);

/**
 * Serializes the deployment; positions reparse bit-identically.
 */
enum WsngaStatus wsnga_deployment_to_json(const struct WsngaDeployment *deployment, char **out);

/**
 * Node count, zero for null.
 */
uint32_t wsnga_deployment_node_count(const struct WsngaDeployment *deployment);

/**
 * Living node count, zero for null.
 */
uint32_t wsnga_deployment_alive_count(const struct WsngaDeployment *deployment);

void wsnga_deployment_free(struct WsngaDeployment *deployment);

/**
 * Scores one chromosome, given as a '0'/'1' string with one character per
 * node.
 */
enum WsngaStatus wsnga_evaluate(const struct WsngaDeployment *deployment,
                                const struct WsngaRadio *radio,
                                const struct WsngaFitness *fitness,
                                const char *chromosome,
                                struct WsngaBreakdown *out);

/**
 * Runs the generational search. Deterministic in (deployment, radio,
 * config, seed).
 */
enum WsngaStatus wsnga_evolve(const struct WsngaDeployment *deployment,
                              const struct WsngaRadio *radio,
                              const struct WsngaGaConfig *config,
                              uint64_t seed,
                              struct WsngaGaResult **out);

/**
 * Number of recorded generations (the budget plus the initial population).
 */
uint32_t wsnga_ga_result_generation_count(const struct WsngaGaResult *result);

/**
 * Copies one generation record.
 */
enum WsngaStatus wsnga_ga_result_generation(const struct WsngaGaResult *result,
                                            uint32_t index,
                                            struct WsngaGenerationRow *out);

/**
 * Copies the overall best score.
 */
enum WsngaStatus wsnga_ga_result_best(const struct WsngaGaResult *result,
                                      struct WsngaBreakdown *out);

/**
 * Returns the overall best chromosome as a '0'/'1' string.
 */
enum WsngaStatus wsnga_ga_result_best_chromosome(const struct WsngaGaResult *result, char **out);

void wsnga_ga_result_free(struct WsngaGaResult *result);

/**
 * Exhaustive search over every head election; only networks of at most 20
 * living nodes are accepted. `out_chromosome` may be null when only the
 * score is wanted.
 */
enum WsngaStatus wsnga_oracle_best(const struct WsngaDeployment *deployment,
                                   const struct WsngaRadio *radio,
                                   const struct WsngaFitness *fitness,
                                   char **out_chromosome,
                                   struct WsngaBreakdown *out);

/**
 * Simulates round-based network lifetime under either protocol.
 */
enum WsngaStatus wsnga_lifetime_run(const struct WsngaDeployment *deployment,
                                    const struct WsngaRadio *radio,
                                    const struct WsngaLifetimeOptions *options,
                                    uint64_t seed,
                                    struct WsngaLifetime **out);

/**
 * Number of simulated round records.
 */
uint32_t wsnga_lifetime_round_count(const struct WsngaLifetime *lifetime);

/**
 * Copies one round record.
 */
enum WsngaStatus wsnga_lifetime_round(const struct WsngaLifetime *lifetime,
                                      uint32_t index,
                                      struct WsngaRoundRow *out);

/**
 * Copies the death rounds and energy total.
 */
enum WsngaStatus wsnga_lifetime_summary(const struct WsngaLifetime *lifetime,
                                        struct WsngaLifetimeSummary *out);

void wsnga_lifetime_free(struct WsngaLifetime *lifetime);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WSNGA_H */
