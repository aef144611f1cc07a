#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fgb/env.hpp"
#include "fgb/graph.hpp"

namespace fgb {

/// Arms whose gap lies in (2^-phi, 2^(-phi+1)], with the size of a maximum
/// independent set of the subgraph they induce.
struct Phase {
  int phi = 0;
  std::vector<Vertex> arms;     // original arm ids, ascending
  std::size_t max_independent = 0;  // K_phi
  std::vector<Vertex> witness;  // an independent set of that size, original ids

  /// K_phi * 2^phi.
  std::uint64_t weight() const noexcept { return static_cast<std::uint64_t>(max_independent) << phi; }
};

struct PhaseDecomposition {
  /// phases[i] describes phi = i + 1, for phi = 1..phi_max; empty phases kept.
  std::vector<Phase> phases;
  std::size_t alpha = 0;
  int phi_max = 0;
  /// Phase maximizing K_phi 2^phi (smallest phi on ties); absent when every K_phi is 0.
  std::optional<int> m;
  int j1 = 0;  // floor(log2 K_m)
  int j2 = 0;  // ceil(log2(alpha / K_m))
  std::uint64_t lemma_sum = 0;  // sum_phi K_phi 2^phi

  bool empty() const noexcept { return !m.has_value(); }
  const Phase& phase(int phi) const;
  /// K_m 2^m, or 0 for an empty decomposition.
  std::uint64_t max_term() const;
};

/// Unique phi >= 1 with 2^-phi < gap <= 2^(-phi+1). Exact for every double.
int phase_of(double gap);

/// min{ floor(ln T), floor(log2(1/delta_min)) + 1 }. Absent delta_min (no
/// suboptimal arm) yields nullopt.
std::optional<int> phi_max(std::uint64_t horizon, std::optional<double> delta_min);

PhaseDecomposition decompose(const BanditInstance& instance, std::uint64_t horizon,
                             const MisOptions& options = {});

struct StartQuantity {
  /// sum_phi max_I sum_{a in I} L 2^(2 phi) Delta_a
  double lhs = 0.0;
  /// 2 L sum_phi K_phi 2^phi
  double intermediate = 0.0;
};

/// Evaluates both sides of the phase-sum inequality exactly (weighted MIS per
/// phase). Throws VerificationError if lhs exceeds the intermediate bound.
StartQuantity start_quantity(const BanditInstance& instance, std::uint64_t horizon, double capital_l,
                             const MisOptions& options = {});

}  // namespace fgb
