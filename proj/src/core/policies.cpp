#include "fgb/policies.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fgb/error.hpp"

namespace fgb {

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::ucb_n:
      return "ucb-n";
    case PolicyKind::ts_n:
      return "ts-n";
    case PolicyKind::ucb1:
      return "ucb1";
  }
  return "unknown";
}

PolicyKind parse_policy_kind(std::string_view name) {
  if (name == "ucb-n") return PolicyKind::ucb_n;
  if (name == "ts-n") return PolicyKind::ts_n;
  if (name == "ucb1") return PolicyKind::ucb1;
  throw InputError("unknown policy '" + std::string(name) + "' (expected ucb-n, ts-n or ucb1)");
}

double default_delta(std::uint64_t horizon) {
  if (horizon == 0) throw InputError("horizon must be at least 1");
  // 1/T leaves (0, 1) at T = 1.
  if (horizon == 1) return 0.5;
  return 1.0 / static_cast<double>(horizon);
}

namespace {

void check_unique(std::span<const Observation> observations, std::size_t num_arms) {
  std::vector<bool> seen(num_arms, false);
  for (const auto& obs : observations) {
    if (obs.arm >= num_arms) throw InputError("observation for out-of-range arm " + std::to_string(obs.arm));
    if (seen[obs.arm]) throw InputError("duplicate arm " + std::to_string(obs.arm) + " in observation set");
    seen[obs.arm] = true;
    if (!(obs.reward >= 0.0 && obs.reward <= 1.0)) throw InputError("rewards must lie in [0, 1]");
  }
}

}  // namespace

UcbNState::UcbNState(std::size_t num_arms, std::uint64_t horizon, double delta)
    : horizon_(horizon), delta_(delta), counts_(num_arms, 0), sums_(num_arms, 0.0) {
  if (num_arms == 0) throw InputError("policy needs at least one arm");
  if (horizon == 0) throw InputError("horizon must be at least 1");
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("delta must lie in (0, 1)");
  log_term_ = 2.0 * std::log(2.0 * static_cast<double>(horizon) * static_cast<double>(num_arms) / delta);
}

double UcbNState::index(Vertex a) const {
  if (a >= counts_.size()) throw InputError("arm out of range");
  if (counts_[a] == 0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(counts_[a]);
  return sums_[a] / n + std::sqrt(log_term_ / n);
}

Vertex UcbNState::select() const {
  Vertex best = 0;
  double best_index = index(0);
  for (Vertex a = 1; a < counts_.size(); ++a) {
    const double value = index(a);
    if (value > best_index) {
      best_index = value;
      best = a;
    }
  }
  return best;
}

void UcbNState::update(std::span<const Observation> observations) {
  check_unique(observations, counts_.size());
  for (const auto& obs : observations) {
    counts_[obs.arm] += 1;
    sums_[obs.arm] += obs.reward;
  }
}

void UcbNState::set_arm(Vertex a, std::uint64_t count, double sum) {
  if (a >= counts_.size()) throw InputError("arm out of range");
  if (!(sum >= 0.0 && sum <= static_cast<double>(count))) throw InputError("reward sum must lie in [0, count]");
  counts_[a] = count;
  sums_[a] = sum;
}

TsNState::TsNState(std::size_t num_arms) : successes_(num_arms, 0), failures_(num_arms, 0) {
  if (num_arms == 0) throw InputError("policy needs at least one arm");
}

Vertex TsNState::select(Stream& stream) const {
  Vertex best = 0;
  double best_theta = -1.0;
  for (Vertex a = 0; a < successes_.size(); ++a) {
    const double theta = stream.beta(static_cast<double>(successes_[a]) + 1.0,
                                     static_cast<double>(failures_[a]) + 1.0);
    if (theta > best_theta) {
      best_theta = theta;
      best = a;
    }
  }
  return best;
}

void TsNState::update(std::span<const Observation> observations, Stream& stream) {
  check_unique(observations, successes_.size());
  for (const auto& obs : observations) {
    bool success;
    if (obs.reward == 1.0) {
      success = true;
    } else if (obs.reward == 0.0) {
      success = false;
    } else {
      success = stream.bernoulli(obs.reward);
    }
    (success ? successes_ : failures_)[obs.arm] += 1;
  }
}

double TsNState::posterior_mean(Vertex a) const {
  if (a >= successes_.size()) throw InputError("arm out of range");
  return (static_cast<double>(successes_[a]) + 1.0) /
         (static_cast<double>(successes_[a] + failures_[a]) + 2.0);
}

void TsNState::set_arm(Vertex a, std::uint64_t successes, std::uint64_t failures) {
  if (a >= successes_.size()) throw InputError("arm out of range");
  successes_[a] = successes;
  failures_[a] = failures;
}

void UcbNPolicy::update(Vertex, std::span<const Observation> observations, Stream&) {
  state_.update(observations);
}

namespace {
std::vector<double> empirical_means(const UcbNState& s) {
  std::vector<double> out(s.num_arms(), 0.0);
  for (std::size_t a = 0; a < out.size(); ++a) {
    if (s.counts()[a] > 0) out[a] = s.sums()[a] / static_cast<double>(s.counts()[a]);
  }
  return out;
}
}  // namespace

std::vector<double> UcbNPolicy::estimates() const { return empirical_means(state_); }

void Ucb1Policy::update(Vertex pulled, std::span<const Observation> observations, Stream&) {
  check_unique(observations, state_.num_arms());
  for (const auto& obs : observations) {
    if (obs.arm == pulled) {
      state_.update(std::span<const Observation>(&obs, 1));
      return;
    }
  }
}

std::vector<double> Ucb1Policy::estimates() const { return empirical_means(state_); }

void TsNPolicy::update(Vertex, std::span<const Observation> observations, Stream& stream) {
  state_.update(observations, stream);
}

std::vector<double> TsNPolicy::estimates() const {
  std::vector<double> out(state_.num_arms());
  for (Vertex a = 0; a < out.size(); ++a) out[a] = state_.posterior_mean(a);
  return out;
}

std::unique_ptr<Policy> make_policy(PolicyKind kind, std::size_t num_arms, std::uint64_t horizon,
                                    double delta) {
  if (delta <= 0.0) delta = default_delta(horizon);
  switch (kind) {
    case PolicyKind::ucb_n:
      return std::make_unique<UcbNPolicy>(num_arms, horizon, delta);
    case PolicyKind::ucb1:
      return std::make_unique<Ucb1Policy>(num_arms, horizon, delta);
    case PolicyKind::ts_n:
      return std::make_unique<TsNPolicy>(num_arms);
  }
  throw InputError("unknown policy kind");
}

}  // namespace fgb
