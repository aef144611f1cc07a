#include "fgb/env.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fgb/error.hpp"

namespace fgb {

std::string_view to_string(RewardFamily family) {
  switch (family) {
    case RewardFamily::bernoulli:
      return "bernoulli";
  }
  return "unknown";
}

RewardFamily parse_reward_family(std::string_view name) {
  if (name == "bernoulli") return RewardFamily::bernoulli;
  throw CapabilityError("unsupported reward family '" + std::string(name) + "'");
}

BanditInstance::BanditInstance(std::vector<double> means, FeedbackGraph graph, RewardFamily family)
    : means_(std::move(means)), graph_(std::move(graph)), family_(family) {
  if (means_.empty()) throw InputError("instance needs at least one arm");
  if (graph_.num_arms() != means_.size()) {
    throw InputError("graph has " + std::to_string(graph_.num_arms()) + " arms but " +
                     std::to_string(means_.size()) + " means were given");
  }
  for (double mu : means_) {
    if (!(mu >= 0.0 && mu <= 1.0)) throw InputError("arm means must lie in [0, 1]");
  }
}

GapProfile gaps(const BanditInstance& instance) {
  const auto& mu = instance.means();
  const double best = *std::max_element(mu.begin(), mu.end());
  GapProfile profile;
  profile.gaps.reserve(mu.size());
  for (Vertex a = 0; a < mu.size(); ++a) {
    const double gap = best - mu[a];
    profile.gaps.push_back(gap);
    if (gap == 0.0) {
      profile.optimal_arms.push_back(a);
    } else if (!profile.delta_min || gap < *profile.delta_min) {
      profile.delta_min = gap;
    }
  }
  return profile;
}

void sample_round(const BanditInstance& instance, Stream& stream, std::span<double> out) {
  if (out.size() != instance.num_arms()) throw InputError("sample_round: output size mismatch");
  switch (instance.family()) {
    case RewardFamily::bernoulli:
      for (std::size_t a = 0; a < out.size(); ++a) {
        out[a] = stream.bernoulli(instance.means()[a]) ? 1.0 : 0.0;
      }
      return;
  }
  throw CapabilityError("sample_round: unsupported reward family");
}

std::vector<double> sample_round(const BanditInstance& instance, Stream& stream) {
  std::vector<double> rewards(instance.num_arms());
  sample_round(instance, stream, rewards);
  return rewards;
}

std::vector<Observation> observe(const BanditInstance& instance, std::span<const double> rewards,
                                 Vertex pulled) {
  if (rewards.size() != instance.num_arms()) throw InputError("observe: reward vector size mismatch");
  const auto nb = instance.graph().neighborhood(pulled);
  std::vector<Observation> out;
  out.reserve(nb.size());
  for (Vertex a : nb) out.push_back({a, rewards[a]});
  return out;
}

}  // namespace fgb
