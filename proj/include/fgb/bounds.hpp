#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fgb/env.hpp"
#include "fgb/graph.hpp"

namespace fgb {

/// L = 8 ln(2TK / delta), delta in (0, 1).
double capital_l(std::uint64_t horizon, std::size_t num_arms, double delta);

/// L with delta = 1/T substituted symbolically: 8 ln(2 K T^2). Defined for T = 1 too.
double capital_l_at_default_delta(std::uint64_t horizon, std::size_t num_arms);

/// log2(alpha) + 3, the factor that replaces ln T.
double improved_factor(std::size_t alpha);

struct HardnessResult {
  double value = 0.0;
  std::vector<Vertex> witness;  // suboptimal arms of a maximizing independent set
  bool exact = true;
};

/// max over independent sets of suboptimal arms of sum 1/Delta_a. Optimal
/// arms are removed from the graph before the search.
HardnessResult hardness_detail(const BanditInstance& instance, const MisOptions& options = {});
double hardness(const BanditInstance& instance, const MisOptions& options = {});

/// 4 L ln(T) H + 1
double lemma_original_rhs(double capital_l, std::uint64_t horizon, double hardness);
/// 4 L (log2(alpha) + 3) H + 1
double lemma_improved_rhs(double capital_l, std::size_t alpha, double hardness);
/// 8 ln(2KT^2) (log2(alpha) + 3) H + 2
double theorem_ucbn_bound(std::uint64_t horizon, std::size_t num_arms, std::size_t alpha, double hardness);
/// 2 + 4 sqrt(2 alpha T ln(2KT^2) (log2(alpha) + 3))
double corollary_bound(std::uint64_t horizon, std::size_t num_arms, std::size_t alpha);

struct BoundReport {
  std::uint64_t horizon = 0;
  std::size_t num_arms = 0;
  double delta = 0.0;
  std::size_t alpha = 0;
  double hardness = 0.0;
  double capital_l = 0.0;
  double lemma_original = 0.0;
  double lemma_improved = 0.0;
  double theorem_ucbn = 0.0;
  double corollary_gap_independent = 0.0;
  /// False when alpha and H came from the greedy fallback.
  bool exact = true;
};

/// All bounds for an instance. `delta <= 0` means the default 1/T.
BoundReport compute_bounds(const BanditInstance& instance, std::uint64_t horizon, double delta = 0.0,
                           const MisOptions& options = {});

}  // namespace fgb
