#include "fgb/bounds.hpp"

#include <cmath>
#include <string>

#include "fgb/error.hpp"
#include "fgb/policies.hpp"

namespace fgb {

namespace {

void require_horizon(std::uint64_t horizon) {
  if (horizon == 0) throw InputError("horizon must be at least 1");
}

void require_arms(std::size_t num_arms) {
  if (num_arms == 0) throw InputError("need at least one arm");
}

void require_alpha(std::size_t alpha) {
  if (alpha < 1) throw InputError("independence number must be at least 1");
}

}  // namespace

double capital_l(std::uint64_t horizon, std::size_t num_arms, double delta) {
  require_horizon(horizon);
  require_arms(num_arms);
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("delta must lie in (0, 1)");
  return 8.0 * std::log(2.0 * static_cast<double>(horizon) * static_cast<double>(num_arms) / delta);
}

double capital_l_at_default_delta(std::uint64_t horizon, std::size_t num_arms) {
  require_horizon(horizon);
  require_arms(num_arms);
  const double t = static_cast<double>(horizon);
  return 8.0 * std::log(2.0 * static_cast<double>(num_arms) * t * t);
}

double improved_factor(std::size_t alpha) {
  require_alpha(alpha);
  return std::log2(static_cast<double>(alpha)) + 3.0;
}

HardnessResult hardness_detail(const BanditInstance& instance, const MisOptions& options) {
  const auto profile = gaps(instance);
  HardnessResult out;
  if (!profile.has_suboptimal()) return out;

  std::vector<Vertex> suboptimal;
  for (Vertex a = 0; a < profile.gaps.size(); ++a) {
    if (profile.gaps[a] > 0.0) suboptimal.push_back(a);
  }
  const auto sub = induced_subgraph(instance.graph(), suboptimal);
  std::vector<double> weights;
  weights.reserve(suboptimal.size());
  for (Vertex a : sub.original_ids) weights.push_back(1.0 / profile.gaps[a]);
  const auto mis = max_independent_set(sub.graph, weights, options);
  out.value = mis.value;
  out.exact = mis.exact;
  for (Vertex v : mis.vertices) out.witness.push_back(sub.original_ids[v]);
  return out;
}

double hardness(const BanditInstance& instance, const MisOptions& options) {
  return hardness_detail(instance, options).value;
}

double lemma_original_rhs(double capital_l, std::uint64_t horizon, double hardness) {
  require_horizon(horizon);
  return 4.0 * capital_l * std::log(static_cast<double>(horizon)) * hardness + 1.0;
}

double lemma_improved_rhs(double capital_l, std::size_t alpha, double hardness) {
  return 4.0 * capital_l * improved_factor(alpha) * hardness + 1.0;
}

double theorem_ucbn_bound(std::uint64_t horizon, std::size_t num_arms, std::size_t alpha, double hardness) {
  const double log_term = capital_l_at_default_delta(horizon, num_arms) / 8.0;
  return 8.0 * log_term * improved_factor(alpha) * hardness + 2.0;
}

double corollary_bound(std::uint64_t horizon, std::size_t num_arms, std::size_t alpha) {
  const double log_term = capital_l_at_default_delta(horizon, num_arms) / 8.0;
  const double inner = 2.0 * static_cast<double>(alpha) * static_cast<double>(horizon) * log_term *
                       improved_factor(alpha);
  return 2.0 + 4.0 * std::sqrt(inner);
}

BoundReport compute_bounds(const BanditInstance& instance, std::uint64_t horizon, double delta,
                           const MisOptions& options) {
  BoundReport r;
  r.horizon = horizon;
  r.num_arms = instance.num_arms();
  r.delta = delta > 0.0 ? delta : default_delta(horizon);

  const auto alpha = max_independent_set(instance.graph(), {}, options);
  const auto h = hardness_detail(instance, options);
  r.alpha = alpha.vertices.size();
  r.hardness = h.value;
  r.exact = alpha.exact && h.exact;

  r.capital_l = capital_l(horizon, r.num_arms, r.delta);
  r.lemma_original = lemma_original_rhs(r.capital_l, horizon, r.hardness);
  r.lemma_improved = lemma_improved_rhs(r.capital_l, r.alpha, r.hardness);
  r.theorem_ucbn = theorem_ucbn_bound(horizon, r.num_arms, r.alpha, r.hardness);
  r.corollary_gap_independent = corollary_bound(horizon, r.num_arms, r.alpha);
  return r;
}

}  // namespace fgb
