#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgb/env.hpp"
#include "fgb/graph.hpp"
#include "fgb/policies.hpp"

namespace fgb {

/// One Monte Carlo experiment. Built by load_experiment_config() or directly.
struct ExperimentConfig {
  explicit ExperimentConfig(BanditInstance inst) : instance(std::move(inst)) {}

  BanditInstance instance;
  std::string graph_description;  // the spec string or "edges"
  PolicyKind policy = PolicyKind::ucb_n;
  double delta = 0.0;  // <= 0: 1/T
  std::uint64_t horizon = 1;
  std::size_t num_runs = 1;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> checkpoints;  // empty: default_checkpoints(horizon)
  std::size_t threads = 0;                 // 0: hardware concurrency
  MisOptions mis;
};

/// Powers of two up to T, then T itself.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon);

/// Checks T >= 1, runs >= 1, strictly increasing checkpoints in [1, T].
/// Throws ConfigError naming the field.
void validate(const ExperimentConfig& config);

/// YAML experiment file:
///
///   instance:
///     means: [0.9, 0.6, 0.6]
///     graph: complete:3            # or: graph: { edges: ["0-1", "1-2"] }
///     family: bernoulli            # optional
///     mis_exact_limit: 30          # optional
///     approximate_mis: false       # optional
///   policy:
///     name: ucb-n                  # ucb-n | ts-n | ucb1
///     delta: 0.001                 # optional, default 1/T
///   run:
///     horizon: 20000
///     runs: 50
///     seed: 7
///     checkpoints: [100, 1000]     # optional
///     threads: 0                   # optional
///
/// Errors carry the field path and source line. Unsupported families raise
/// CapabilityError.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace fgb
