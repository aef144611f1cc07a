#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fgb/bounds.hpp"
#include "fgb/config.hpp"
#include "fgb/env.hpp"
#include "fgb/policies.hpp"
#include "fgb/random.hpp"

namespace fgb {

struct EpisodeResult {
  std::vector<Vertex> pulls;
  /// cumulative_regret[t-1] = sum_{s<=t} Delta_{a_s}
  std::vector<double> cumulative_regret;
};

/// Plays T rounds. Rewards come from stream.derive(1) (K draws per round, so
/// every policy sees the same reward sequence for a given stream) and policy
/// randomness from stream.derive(2). Regret accumulates true gaps.
EpisodeResult run_episode(const BanditInstance& instance, Policy& policy, std::uint64_t horizon,
                          const Stream& stream);

struct CheckpointStats {
  std::uint64_t round = 0;
  double mean = 0.0;
  double stderr_mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct RegretReport {
  std::vector<CheckpointStats> checkpoints;
  std::vector<double> final_regret;  // by run index
  BoundReport bounds;
  // config echo
  PolicyKind policy = PolicyKind::ucb_n;
  std::string graph_description;
  std::vector<double> means;
  std::uint64_t horizon = 0;
  std::size_t num_runs = 0;
  std::uint64_t base_seed = 0;

  double final_mean() const { return checkpoints.empty() ? 0.0 : checkpoints.back().mean; }
  double final_stderr() const { return checkpoints.empty() ? 0.0 : checkpoints.back().stderr_mean; }
};

/// Runs num_runs episodes, run i on Stream(base_seed, i). Aggregation is by
/// run index, so the report does not depend on scheduling.
RegretReport run_experiment(const ExperimentConfig& config);

/// Header `checkpoint,mean_regret,stderr,min,max`.
void write_regret_csv(const RegretReport& report, std::ostream& out);
/// key=value bound overlays plus the config echo.
void write_bounds_sidecar(const RegretReport& report, std::ostream& out);

struct SweepRow {
  std::string graph;
  std::size_t alpha = 0;
  double mean_regret = 0.0;
  double stderr_mean = 0.0;
  double theorem = 0.0;
  double corollary = 0.0;
};

/// Reruns `base` once per graph spec, keeping means, policy and seeds.
std::vector<SweepRow> sweep_alpha(const ExperimentConfig& base, const std::vector<std::string>& graph_specs);

/// Header `graph,alpha,mean_regret,stderr,theorem,corollary`.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// Shortest round-trip-safe rendering used in every CSV and sidecar.
std::string format_number(double value);

}  // namespace fgb
