#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fgb/env.hpp"
#include "fgb/graph.hpp"
#include "fgb/phases.hpp"

namespace fgb {

/// Slack applied to every "<=" against a log2-based factor.
inline constexpr double kLemmaSlack = 1e-9;

struct SequenceCheck {
  bool holds = false;
  double ratio = 0.0;          // sum / max term
  std::uint64_t sum = 0;       // sum_phi K_phi 2^phi
  std::uint64_t max_term = 0;  // max_phi K_phi 2^phi
};

/// Checks sum_phi K_phi 2^phi <= (log2(alpha) + 3) max_phi K_phi 2^phi for a
/// sequence K_1..K_P with 0 <= K_phi <= alpha. Throws InputError for an empty
/// or all-zero sequence, K_phi > alpha, or sizes that would overflow 64 bits.
SequenceCheck verify_sequence(std::size_t alpha, std::span<const std::uint32_t> ks);

struct VerificationReport {
  std::size_t alpha = 0;
  std::size_t num_phases = 0;
  bool exhaustive = false;
  std::uint64_t instances_checked = 0;  // sequences visited, the all-zero one included
  std::uint64_t nonzero_checked = 0;
  std::uint64_t violation_count = 0;
  /// Lexicographically sorted; capped at kMaxStoredViolations.
  std::vector<std::vector<std::uint32_t>> violations;
  double bound = 0.0;  // log2(alpha) + 3
  double tightest_ratio = 0.0;
  std::vector<std::uint32_t> tight_witness;  // first sequence reaching tightest_ratio

  static constexpr std::size_t kMaxStoredViolations = 100;
  bool ok() const noexcept { return violation_count == 0; }
};

/// Enumerates every sequence in {0..alpha}^num_phases when that box has at
/// most `budget` points, otherwise checks `budget` uniform samples drawn from
/// `seed`. Enumeration is split over the first coordinate across `threads`
/// workers (0 = hardware concurrency); the merged report does not depend on
/// the thread count.
VerificationReport exhaustive_verify(std::size_t alpha, std::size_t num_phases, std::uint64_t budget,
                                     std::uint64_t seed, std::size_t threads = 0);

/// Key=value rendering used by the CLI.
void write_report(const VerificationReport& report, std::ostream& out);

/// "N sequences, V violations"
std::string summary_line(const VerificationReport& report);

struct ProofStepReport {
  int m = 0;
  int j1 = 0;
  int j2 = 0;
  std::uint64_t max_term = 0;   // K_m 2^m
  std::uint64_t upper_sum = 0;  // phases above m
  std::uint64_t lower_sum = 0;  // phases below m
  std::uint64_t total = 0;
  double factor = 0.0;  // log2(alpha) + 3
  bool upper_ok = false;   // upper_sum <= j1 K_m 2^m
  bool lower_ok = false;   // lower_sum <= (j2 + 1) K_m 2^m
  bool total_ok = false;   // total <= (j1 + j2 + 2) K_m 2^m
  bool factor_ok = false;  // j1 + j2 + 2 <= log2(alpha) + 3

  bool all() const noexcept { return upper_ok && lower_ok && total_ok && factor_ok; }
};

/// Evaluates the split of the phase sum around m on a concrete
/// decomposition. Throws InputError on an empty decomposition.
ProofStepReport verify_proof_steps(const PhaseDecomposition& decomposition);

struct ChainCheck {
  bool holds = true;
  bool vacuous = false;
  double lemma_sum = 0.0;
  double hardness = 0.0;
  double bound = 0.0;  // 2 (log2(alpha) + 3) H
};

/// sum_phi K_phi 2^phi <= 2 (log2(alpha) + 3) H on the actual graph.
/// Vacuously true for an empty decomposition.
ChainCheck graph_chain_check(const BanditInstance& instance, std::uint64_t horizon,
                             const MisOptions& options = {});

}  // namespace fgb
