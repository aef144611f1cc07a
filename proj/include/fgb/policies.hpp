#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "fgb/env.hpp"
#include "fgb/random.hpp"

namespace fgb {

enum class PolicyKind { ucb_n, ts_n, ucb1 };

std::string_view to_string(PolicyKind kind);
/// Accepts "ucb-n", "ts-n", "ucb1"; throws InputError otherwise.
PolicyKind parse_policy_kind(std::string_view name);

/// Sufficient statistics for UCB-N: per-arm observation counts and reward sums.
class UcbNState {
 public:
  /// `delta` must lie in (0, 1); the usual choice is 1 / horizon.
  UcbNState(std::size_t num_arms, std::uint64_t horizon, double delta);

  /// argmax_a s_a/n_a + sqrt(2 ln(2TK/delta) / n_a); unobserved arms rank
  /// first, ties go to the lowest id.
  Vertex select() const;

  /// n_a += 1, s_a += r for every (a, r). Duplicate arms throw InputError
  /// and leave the state untouched.
  void update(std::span<const Observation> observations);

  double index(Vertex a) const;

  std::size_t num_arms() const noexcept { return counts_.size(); }
  std::uint64_t horizon() const noexcept { return horizon_; }
  double delta() const noexcept { return delta_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::span<const double> sums() const noexcept { return sums_; }

  /// Direct state injection for tests and replay.
  void set_arm(Vertex a, std::uint64_t count, double sum);

 private:
  std::uint64_t horizon_;
  double delta_;
  double log_term_;  // 2 ln(2TK/delta)
  std::vector<std::uint64_t> counts_;
  std::vector<double> sums_;
};

/// Beta-Bernoulli posterior state for TS-N with Beta(1,1) priors.
class TsNState {
 public:
  explicit TsNState(std::size_t num_arms);

  /// Draws theta_a ~ Beta(S_a+1, F_a+1) for every arm in id order and
  /// returns the argmax (lowest id on ties).
  Vertex select(Stream& stream) const;

  /// Rewards in {0,1} count directly; other rewards in [0,1] are binarized
  /// with one Bernoulli(r) draw from `stream`.
  void update(std::span<const Observation> observations, Stream& stream);

  std::size_t num_arms() const noexcept { return successes_.size(); }
  std::span<const std::uint64_t> successes() const noexcept { return successes_; }
  std::span<const std::uint64_t> failures() const noexcept { return failures_; }
  double posterior_mean(Vertex a) const;

  void set_arm(Vertex a, std::uint64_t successes, std::uint64_t failures);

 private:
  std::vector<std::uint64_t> successes_;
  std::vector<std::uint64_t> failures_;
};

/// Common driver interface used by the simulator.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual PolicyKind kind() const noexcept = 0;
  virtual Vertex select(Stream& stream) = 0;
  virtual void update(Vertex pulled, std::span<const Observation> observations, Stream& stream) = 0;
  /// Per-arm mean estimates (empirical or posterior).
  virtual std::vector<double> estimates() const = 0;
};

class UcbNPolicy final : public Policy {
 public:
  UcbNPolicy(std::size_t num_arms, std::uint64_t horizon, double delta)
      : state_(num_arms, horizon, delta) {}
  PolicyKind kind() const noexcept override { return PolicyKind::ucb_n; }
  Vertex select(Stream&) override { return state_.select(); }
  void update(Vertex pulled, std::span<const Observation> observations, Stream& stream) override;
  std::vector<double> estimates() const override;
  const UcbNState& state() const noexcept { return state_; }

 private:
  UcbNState state_;
};

/// Graph-blind control: UCB-N's selection rule, but only the pulled arm's
/// own reward is ever used.
class Ucb1Policy final : public Policy {
 public:
  Ucb1Policy(std::size_t num_arms, std::uint64_t horizon, double delta)
      : state_(num_arms, horizon, delta) {}
  PolicyKind kind() const noexcept override { return PolicyKind::ucb1; }
  Vertex select(Stream&) override { return state_.select(); }
  void update(Vertex pulled, std::span<const Observation> observations, Stream& stream) override;
  std::vector<double> estimates() const override;
  const UcbNState& state() const noexcept { return state_; }

 private:
  UcbNState state_;
};

class TsNPolicy final : public Policy {
 public:
  explicit TsNPolicy(std::size_t num_arms) : state_(num_arms) {}
  PolicyKind kind() const noexcept override { return PolicyKind::ts_n; }
  Vertex select(Stream& stream) override { return state_.select(stream); }
  void update(Vertex pulled, std::span<const Observation> observations, Stream& stream) override;
  std::vector<double> estimates() const override;
  const TsNState& state() const noexcept { return state_; }

 private:
  TsNState state_;
};

/// `delta <= 0` selects the default 1 / horizon.
std::unique_ptr<Policy> make_policy(PolicyKind kind, std::size_t num_arms, std::uint64_t horizon,
                                    double delta = 0.0);

double default_delta(std::uint64_t horizon);

}  // namespace fgb
