/*
 * fgbandit: stochastic bandits with undirected feedback graphs.
 *
 * C interface over the C++ core. All objects are opaque handles created by a
 * fgb_*_create/parse/load call and released with the matching fgb_*_free
 * (free functions accept NULL). Every fallible call returns an fgb_status;
 * on failure fgb_last_error() describes the problem. Handles are not
 * synchronized: a handle may be read from several threads but mutated
 * (policies, streams) from one thread at a time.
 *
 * Functions that produce text follow the snprintf convention: up to
 * capacity-1 bytes plus a terminating NUL are written to `buf`, and
 * `*needed` (if non-NULL) receives the full length without the NUL.
 */
#ifndef FGBANDIT_H
#define FGBANDIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FGB_BUILDING_LIBRARY)
#    define FGB_API __declspec(dllexport)
#  else
#    define FGB_API __declspec(dllimport)
#  endif
#else
#  define FGB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fgb_status {
  FGB_OK = 0,
  FGB_VERIFICATION_FAILED = 1,
  FGB_CONFIG_ERROR = 2,
  FGB_CAPABILITY_ERROR = 3,
  FGB_INPUT_ERROR = 4,
  FGB_IO_ERROR = 5,
  FGB_INTERNAL_ERROR = 6
} fgb_status;

FGB_API const char* fgb_version(void);

/* Message for the last failed call on this thread; "" if none. */
FGB_API const char* fgb_last_error(void);

FGB_API const char* fgb_status_name(fgb_status status);

/* ---- graphs ------------------------------------------------------------ */

typedef struct fgb_graph fgb_graph;

/* Graph mini-language: complete:K edgeless:K cycle:K star:K cliques:a,b,...
 * er:K,p,seed file:<path>. expected_arms = 0 accepts any size. */
FGB_API fgb_status fgb_graph_parse(const char* spec, size_t expected_arms, fgb_graph** out);

/* endpoints holds 2 * num_edges vertex ids (a0, b0, a1, b1, ...). */
FGB_API fgb_status fgb_graph_from_edges(size_t num_arms, const uint32_t* endpoints, size_t num_edges,
                                        fgb_graph** out);
FGB_API void fgb_graph_free(fgb_graph* graph);
FGB_API size_t fgb_graph_num_arms(const fgb_graph* graph);
FGB_API size_t fgb_graph_num_edges(const fgb_graph* graph);

/* Closed neighborhood of `arm`, ascending. *count receives the full size. */
FGB_API fgb_status fgb_graph_neighborhood(const fgb_graph* graph, uint32_t arm, uint32_t* out, size_t capacity,
                                          size_t* count);

typedef struct fgb_mis_options {
  size_t exact_limit;    /* default 30, at most 64 */
  int allow_approximate; /* greedy fallback above exact_limit */
} fgb_mis_options;

FGB_API fgb_mis_options fgb_mis_default_options(void);

typedef struct fgb_mis_result {
  double value;
  size_t count; /* vertices in the set */
  int exact;
} fgb_mis_result;

/* weights may be NULL (unit weights). options may be NULL (defaults).
 * vertices may be NULL; otherwise up to `capacity` ids are written. */
FGB_API fgb_status fgb_max_independent_set(const fgb_graph* graph, const double* weights, size_t num_weights,
                                           const fgb_mis_options* options, uint32_t* vertices, size_t capacity,
                                           fgb_mis_result* out);

/* ---- instances ----------------------------------------------------------- */

typedef struct fgb_instance fgb_instance;

/* Bernoulli arms with the given means; the graph is copied. */
FGB_API fgb_status fgb_instance_create(const double* means, size_t num_arms, const fgb_graph* graph,
                                       fgb_instance** out);
FGB_API void fgb_instance_free(fgb_instance* instance);
FGB_API size_t fgb_instance_num_arms(const fgb_instance* instance);

/* gaps receives num_arms values. *delta_min is 0 when every gap is 0. */
FGB_API fgb_status fgb_instance_gaps(const fgb_instance* instance, double* gaps, size_t capacity,
                                     double* delta_min);

/* ---- bounds -------------------------------------------------------------- */

typedef struct fgb_bound_report {
  uint64_t horizon;
  size_t num_arms;
  double delta;
  size_t alpha;
  double hardness;
  double capital_l;
  double lemma_original;
  double lemma_improved;
  double theorem_ucbn;
  double corollary;
  int exact;
} fgb_bound_report;

/* delta <= 0 selects 1/T. */
FGB_API fgb_status fgb_bounds_compute(const fgb_instance* instance, uint64_t horizon, double delta,
                                      const fgb_mis_options* options, fgb_bound_report* out);

/* Aligned key-value text, or with csv != 0 a header line plus one CSV row
 * (T,K,alpha,H,L,lemma_original,lemma_improved,theorem,corollary). */
FGB_API fgb_status fgb_bounds_format(const fgb_bound_report* report, int csv, char* buf, size_t capacity,
                                     size_t* needed);

FGB_API fgb_status fgb_capital_l(uint64_t horizon, size_t num_arms, double delta, double* out);
FGB_API fgb_status fgb_hardness(const fgb_instance* instance, const fgb_mis_options* options, double* out);
FGB_API fgb_status fgb_lemma_original_rhs(double capital_l, uint64_t horizon, double hardness, double* out);
FGB_API fgb_status fgb_lemma_improved_rhs(double capital_l, size_t alpha, double hardness, double* out);
FGB_API fgb_status fgb_theorem_ucbn_bound(uint64_t horizon, size_t num_arms, size_t alpha, double hardness,
                                          double* out);
FGB_API fgb_status fgb_corollary_bound(uint64_t horizon, size_t num_arms, size_t alpha, double* out);

/* ---- gap phases ---------------------------------------------------------- */

typedef struct fgb_phases fgb_phases;

FGB_API fgb_status fgb_phases_decompose(const fgb_instance* instance, uint64_t horizon,
                                        const fgb_mis_options* options, fgb_phases** out);
FGB_API void fgb_phases_free(fgb_phases* phases);

typedef struct fgb_phase_summary {
  size_t alpha;
  int phi_max;
  int m; /* 0 for an empty decomposition */
  int j1;
  int j2;
  uint64_t lemma_sum; /* sum of K_phi 2^phi */
  uint64_t max_term;  /* K_m 2^m */
} fgb_phase_summary;

FGB_API fgb_status fgb_phases_summary(const fgb_phases* phases, fgb_phase_summary* out);

typedef struct fgb_phase_info {
  int phi;
  size_t num_arms;        /* vertices of the phase subgraph */
  size_t max_independent; /* K_phi */
  uint64_t weight;        /* K_phi 2^phi */
} fgb_phase_info;

/* arms may be NULL; otherwise up to `capacity` arm ids are written. */
FGB_API fgb_status fgb_phases_get(const fgb_phases* phases, int phi, fgb_phase_info* out, uint32_t* arms,
                                  size_t capacity);

/* Table with columns phi, |G_phi|, K_phi, K_phi*2^phi and a marker on m. */
FGB_API fgb_status fgb_phases_format(const fgb_phases* phases, char* buf, size_t capacity, size_t* needed);

typedef struct fgb_proof_steps {
  int m;
  int j1;
  int j2;
  uint64_t max_term;
  uint64_t upper_sum;
  uint64_t lower_sum;
  uint64_t total;
  double factor;
  int upper_ok;
  int lower_ok;
  int total_ok;
  int factor_ok;
} fgb_proof_steps;

/* FGB_VERIFICATION_FAILED when any inequality fails (out is still filled). */
FGB_API fgb_status fgb_phases_verify_steps(const fgb_phases* phases, fgb_proof_steps* out);

/* *holds = 1 when sum K_phi 2^phi <= 2 (log2 alpha + 3) H, vacuously for an
 * empty decomposition. Returns FGB_VERIFICATION_FAILED otherwise. */
FGB_API fgb_status fgb_graph_chain_check(const fgb_instance* instance, uint64_t horizon,
                                         const fgb_mis_options* options, int* holds, double* lemma_sum,
                                         double* bound);

/* ---- sequence-level lemma verification ----------------------------------- */

FGB_API fgb_status fgb_verify_sequence(size_t alpha, const uint32_t* ks, size_t num_phases, int* holds,
                                       double* ratio);

typedef struct fgb_lemma_report fgb_lemma_report;

/* threads = 0 uses hardware concurrency. */
FGB_API fgb_status fgb_lemma_verify(size_t alpha, size_t num_phases, uint64_t budget, uint64_t seed,
                                    size_t threads, fgb_lemma_report** out);
FGB_API void fgb_lemma_report_free(fgb_lemma_report* report);
FGB_API uint64_t fgb_lemma_report_sequences(const fgb_lemma_report* report);
FGB_API uint64_t fgb_lemma_report_violations(const fgb_lemma_report* report);
FGB_API int fgb_lemma_report_exhaustive(const fgb_lemma_report* report);
FGB_API double fgb_lemma_report_tightest_ratio(const fgb_lemma_report* report);
FGB_API double fgb_lemma_report_bound(const fgb_lemma_report* report);
FGB_API fgb_status fgb_lemma_report_format(const fgb_lemma_report* report, char* buf, size_t capacity,
                                           size_t* needed);

/* ---- random streams and policies ----------------------------------------- */

typedef struct fgb_stream fgb_stream;

FGB_API fgb_status fgb_stream_create(uint64_t seed, uint64_t index, fgb_stream** out);
FGB_API void fgb_stream_free(fgb_stream* stream);

typedef enum fgb_policy_kind { FGB_POLICY_UCB_N = 0, FGB_POLICY_TS_N = 1, FGB_POLICY_UCB1 = 2 } fgb_policy_kind;

/* "ucb-n" | "ts-n" | "ucb1" */
FGB_API fgb_status fgb_policy_kind_parse(const char* name, fgb_policy_kind* out);

typedef struct fgb_policy fgb_policy;

/* delta <= 0 selects 1/T. */
FGB_API fgb_status fgb_policy_create(fgb_policy_kind kind, size_t num_arms, uint64_t horizon, double delta,
                                     fgb_policy** out);
FGB_API void fgb_policy_free(fgb_policy* policy);
FGB_API fgb_status fgb_policy_select(fgb_policy* policy, fgb_stream* stream, uint32_t* arm);
/* One observation set: parallel arrays of arm ids and rewards in [0, 1]. */
FGB_API fgb_status fgb_policy_update(fgb_policy* policy, uint32_t pulled, const uint32_t* arms,
                                     const double* rewards, size_t count, fgb_stream* stream);
FGB_API fgb_status fgb_policy_estimates(const fgb_policy* policy, double* out, size_t capacity);

/* Plays `horizon` rounds from `stream` (which is not advanced). pulls and
 * cumulative_regret may be NULL or hold `horizon` entries each. */
FGB_API fgb_status fgb_run_episode(const fgb_instance* instance, fgb_policy* policy, uint64_t horizon,
                                   const fgb_stream* stream, uint32_t* pulls, double* cumulative_regret);

/* ---- experiments ---------------------------------------------------------- */

typedef struct fgb_config fgb_config;

/* YAML experiment file with blocks instance / policy / run. */
FGB_API fgb_status fgb_config_load(const char* path, fgb_config** out);
FGB_API fgb_status fgb_config_parse(const char* text, fgb_config** out);
FGB_API void fgb_config_free(fgb_config* config);
FGB_API uint64_t fgb_config_horizon(const fgb_config* config);
FGB_API fgb_status fgb_config_set_horizon(fgb_config* config, uint64_t horizon);
FGB_API fgb_status fgb_config_set_threads(fgb_config* config, size_t threads);
/* New instance handle copied from the config. */
FGB_API fgb_status fgb_config_instance(const fgb_config* config, fgb_instance** out);
FGB_API fgb_mis_options fgb_config_mis_options(const fgb_config* config);
FGB_API double fgb_config_delta(const fgb_config* config);

typedef struct fgb_report fgb_report;

FGB_API fgb_status fgb_simulate(const fgb_config* config, fgb_report** out);
FGB_API void fgb_report_free(fgb_report* report);
FGB_API fgb_status fgb_report_write_csv(const fgb_report* report, const char* path);
FGB_API fgb_status fgb_report_write_bounds(const fgb_report* report, const char* path);
FGB_API fgb_status fgb_report_final(const fgb_report* report, double* mean, double* stderr_mean,
                                    fgb_bound_report* bounds);
FGB_API size_t fgb_report_num_checkpoints(const fgb_report* report);
/* Checkpoint i: round, mean, stderr, min, max (any pointer may be NULL). */
FGB_API fgb_status fgb_report_checkpoint(const fgb_report* report, size_t i, uint64_t* round, double* mean,
                                         double* stderr_mean, double* min, double* max);

/* Reruns the config once per graph spec and renders the sweep table as CSV
 * (graph,alpha,mean_regret,stderr,theorem,corollary). */
FGB_API fgb_status fgb_sweep_alpha(const fgb_config* config, const char* const* graph_specs, size_t count,
                                   char* buf, size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* FGBANDIT_H */
