#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fgb/graph.hpp"
#include "fgb/random.hpp"

namespace fgb {

enum class RewardFamily { bernoulli };

std::string_view to_string(RewardFamily family);
/// Throws CapabilityError for unknown families.
RewardFamily parse_reward_family(std::string_view name);

/// Arm means, their feedback graph and the reward family. Arms keep the
/// caller's order; the best arm is computed, never assumed.
class BanditInstance {
 public:
  BanditInstance(std::vector<double> means, FeedbackGraph graph,
                 RewardFamily family = RewardFamily::bernoulli);

  std::size_t num_arms() const noexcept { return means_.size(); }
  const std::vector<double>& means() const noexcept { return means_; }
  const FeedbackGraph& graph() const noexcept { return graph_; }
  RewardFamily family() const noexcept { return family_; }

 private:
  std::vector<double> means_;
  FeedbackGraph graph_;
  RewardFamily family_;
};

struct GapProfile {
  std::vector<double> gaps;
  std::optional<double> delta_min;  // smallest strictly positive gap
  std::vector<Vertex> optimal_arms;

  bool has_suboptimal() const noexcept { return delta_min.has_value(); }
};

GapProfile gaps(const BanditInstance& instance);

/// Draws one reward vector X_t. Consumes exactly K uniforms from `stream`.
std::vector<double> sample_round(const BanditInstance& instance, Stream& stream);
void sample_round(const BanditInstance& instance, Stream& stream, std::span<double> out);

struct Observation {
  Vertex arm;
  double reward;
  bool operator==(const Observation&) const = default;
};

/// Rewards revealed by pulling `pulled`: one entry per closed neighbor.
std::vector<Observation> observe(const BanditInstance& instance, std::span<const double> rewards,
                                 Vertex pulled);

}  // namespace fgb
