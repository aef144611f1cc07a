#include "fgb/phases.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fgb/error.hpp"

namespace fgb {

const Phase& PhaseDecomposition::phase(int phi) const {
  if (phi < 1 || phi > static_cast<int>(phases.size())) {
    throw InputError("phase " + std::to_string(phi) + " outside 1.." + std::to_string(phases.size()));
  }
  return phases[static_cast<std::size_t>(phi - 1)];
}

std::uint64_t PhaseDecomposition::max_term() const { return m ? phase(*m).weight() : 0; }

int phase_of(double gap) {
  if (!(gap > 0.0 && gap <= 1.0)) throw InputError("phase_of: gap must lie in (0, 1]");
  int exponent = 0;
  const double mantissa = std::frexp(gap, &exponent);  // gap = mantissa * 2^exponent, mantissa in [0.5, 1)
  return mantissa == 0.5 ? 2 - exponent : 1 - exponent;
}

std::optional<int> phi_max(std::uint64_t horizon, std::optional<double> delta_min) {
  if (horizon == 0) throw InputError("phi_max: horizon must be at least 1");
  if (!delta_min) return std::nullopt;
  const int by_horizon = static_cast<int>(std::floor(std::log(static_cast<double>(horizon))));
  // floor(log2(1/d)) + 1 is exactly the phase index of d.
  const int by_gap = phase_of(*delta_min);
  return std::min(by_horizon, by_gap);
}

namespace {

std::vector<std::vector<Vertex>> phase_members(const GapProfile& profile, int count) {
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
  for (Vertex a = 0; a < profile.gaps.size(); ++a) {
    const double gap = profile.gaps[a];
    if (gap <= 0.0) continue;
    const int phi = phase_of(gap);
    if (phi <= count) members[static_cast<std::size_t>(phi - 1)].push_back(a);
  }
  return members;
}

}  // namespace

PhaseDecomposition decompose(const BanditInstance& instance, std::uint64_t horizon,
                             const MisOptions& options) {
  MisOptions exact = options;
  exact.allow_approximate = false;

  PhaseDecomposition out;
  out.alpha = independence_number(instance.graph(), exact);
  const auto profile = gaps(instance);
  const auto top = phi_max(horizon, profile.delta_min);
  out.phi_max = top.value_or(0);
  if (out.phi_max <= 0) {
    out.phi_max = 0;
    return out;
  }

  auto members = phase_members(profile, out.phi_max);
  out.phases.resize(members.size());
  for (int phi = 1; phi <= out.phi_max; ++phi) {
    Phase& phase = out.phases[static_cast<std::size_t>(phi - 1)];
    phase.phi = phi;
    phase.arms = std::move(members[static_cast<std::size_t>(phi - 1)]);
    if (phase.arms.empty()) continue;
    const auto sub = induced_subgraph(instance.graph(), phase.arms);
    const auto mis = max_independent_set(sub.graph, {}, exact);
    phase.max_independent = mis.vertices.size();
    for (Vertex v : mis.vertices) phase.witness.push_back(sub.original_ids[v]);
  }

  std::uint64_t best = 0;
  for (const auto& phase : out.phases) {
    const std::uint64_t w = phase.weight();
    out.lemma_sum += w;
    if (w > best) {
      best = w;
      out.m = phase.phi;
    }
  }
  if (!out.m) return out;

  const std::size_t k_m = out.phase(*out.m).max_independent;
  out.j1 = static_cast<int>(std::bit_width(k_m)) - 1;
  int j2 = 0;
  while ((static_cast<std::uint64_t>(k_m) << j2) < out.alpha) ++j2;
  out.j2 = j2;
  return out;
}

StartQuantity start_quantity(const BanditInstance& instance, std::uint64_t horizon, double capital_l,
                             const MisOptions& options) {
  if (!(capital_l >= 0.0)) throw InputError("start_quantity: L must be nonnegative");
  const auto decomposition = decompose(instance, horizon, options);
  const auto profile = gaps(instance);
  MisOptions exact = options;
  exact.allow_approximate = false;

  StartQuantity out;
  for (const auto& phase : decomposition.phases) {
    if (phase.arms.empty()) continue;
    const auto sub = induced_subgraph(instance.graph(), phase.arms);
    std::vector<double> weights;
    weights.reserve(sub.original_ids.size());
    for (Vertex a : sub.original_ids) weights.push_back(profile.gaps[a]);
    const double best_gap_mass = max_independent_set(sub.graph, weights, exact).value;
    out.lhs += capital_l * std::ldexp(best_gap_mass, 2 * phase.phi);
  }
  out.intermediate = 2.0 * capital_l * static_cast<double>(decomposition.lemma_sum);
  if (out.lhs > out.intermediate * (1.0 + 1e-12)) {
    throw VerificationError("phase sum " + std::to_string(out.lhs) + " exceeds 2L sum K_phi 2^phi = " +
                            std::to_string(out.intermediate));
  }
  return out;
}

}  // namespace fgb
