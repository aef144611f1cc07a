#include "fgb/lemma_verifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

#include "fgb/bounds.hpp"
#include "fgb/error.hpp"
#include "fgb/random.hpp"
#include "parallel.hpp"

namespace fgb {

namespace {

void check_shape(std::size_t alpha, std::size_t num_phases) {
  if (alpha < 1) throw InputError("alpha must be at least 1");
  if (num_phases < 1) throw InputError("need at least one phase");
  if (alpha > 0xFFFFFFFFu) throw InputError("alpha too large");
  // Largest possible sum is below alpha * 2^(P+1).
  if (static_cast<std::size_t>(std::bit_width(alpha)) + num_phases + 1 > 63) {
    throw InputError("alpha * 2^phases does not fit in 64 bits");
  }
}

bool within(std::uint64_t sum, std::uint64_t max_term, double factor) {
  const double limit = factor * static_cast<double>(max_term);
  return static_cast<double>(sum) <= limit + kLemmaSlack * limit;
}

// Accumulates checks for a stream of sequences.
struct Tally {
  std::uint64_t visited = 0;
  std::uint64_t nonzero = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::vector<std::uint32_t>> violations;
  double tightest = 0.0;
  std::vector<std::uint32_t> witness;

  void visit(std::span<const std::uint32_t> ks, double factor) {
    ++visited;
    std::uint64_t sum = 0;
    std::uint64_t max_term = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const std::uint64_t term = static_cast<std::uint64_t>(ks[i]) << (i + 1);
      sum += term;
      max_term = std::max(max_term, term);
    }
    if (max_term == 0) return;
    ++nonzero;
    const double ratio = static_cast<double>(sum) / static_cast<double>(max_term);
    if (ratio > tightest) {
      tightest = ratio;
      witness.assign(ks.begin(), ks.end());
    }
    if (!within(sum, max_term, factor)) {
      ++violation_count;
      if (violations.size() < VerificationReport::kMaxStoredViolations) {
        violations.emplace_back(ks.begin(), ks.end());
      }
    }
  }

  // `other` covers sequences that come lexicographically after ours.
  void merge(Tally&& other) {
    visited += other.visited;
    nonzero += other.nonzero;
    violation_count += other.violation_count;
    for (auto& v : other.violations) {
      if (violations.size() >= VerificationReport::kMaxStoredViolations) break;
      violations.push_back(std::move(v));
    }
    if (other.tightest > tightest) {
      tightest = other.tightest;
      witness = std::move(other.witness);
    }
  }
};

}  // namespace

SequenceCheck verify_sequence(std::size_t alpha, std::span<const std::uint32_t> ks) {
  check_shape(alpha, ks.size());
  SequenceCheck out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] > alpha) {
      throw InputError("K_" + std::to_string(i + 1) + " = " + std::to_string(ks[i]) +
                       " exceeds alpha = " + std::to_string(alpha));
    }
    const std::uint64_t term = static_cast<std::uint64_t>(ks[i]) << (i + 1);
    out.sum += term;
    out.max_term = std::max(out.max_term, term);
  }
  if (out.max_term == 0) throw InputError("sequence must contain a nonzero entry");
  out.ratio = static_cast<double>(out.sum) / static_cast<double>(out.max_term);
  out.holds = within(out.sum, out.max_term, improved_factor(alpha));
  return out;
}

VerificationReport exhaustive_verify(std::size_t alpha, std::size_t num_phases, std::uint64_t budget,
                                     std::uint64_t seed, std::size_t threads) {
  check_shape(alpha, num_phases);
  VerificationReport report;
  report.alpha = alpha;
  report.num_phases = num_phases;
  report.bound = improved_factor(alpha);
  const double factor = report.bound;
  const std::uint32_t top = static_cast<std::uint32_t>(alpha);

  // (alpha + 1)^P <= budget, without overflow.
  std::uint64_t box = 1;
  report.exhaustive = true;
  for (std::size_t i = 0; i < num_phases && report.exhaustive; ++i) {
    if (box > budget / (alpha + 1)) {
      report.exhaustive = false;
    } else {
      box *= alpha + 1;
    }
  }

  Tally total;
  if (report.exhaustive) {
    std::vector<Tally> parts(alpha + 1);
    detail::parallel_for(parts.size(), threads, [&](std::size_t first) {
      std::vector<std::uint32_t> ks(num_phases, 0);
      ks[0] = static_cast<std::uint32_t>(first);
      Tally& tally = parts[first];
      for (;;) {
        tally.visit(ks, factor);
        // Odometer over ks[1..], last coordinate fastest: lexicographic order.
        bool advanced = false;
        for (std::size_t pos = num_phases; pos > 1 && !advanced;) {
          --pos;
          if (ks[pos] < top) {
            ++ks[pos];
            advanced = true;
          } else {
            ks[pos] = 0;
          }
        }
        if (!advanced) break;
      }
    });
    for (auto& part : parts) total.merge(std::move(part));
  } else {
    Stream stream(seed, 0x6c656d6d61);
    std::vector<std::uint32_t> ks(num_phases);
    for (std::uint64_t s = 0; s < budget; ++s) {
      for (auto& k : ks) {
        k = static_cast<std::uint32_t>(std::floor(stream.uniform() * static_cast<double>(alpha + 1)));
      }
      total.visit(ks, factor);
    }
    std::sort(total.violations.begin(), total.violations.end());
  }

  report.instances_checked = total.visited;
  report.nonzero_checked = total.nonzero;
  report.violation_count = total.violation_count;
  report.violations = std::move(total.violations);
  report.tightest_ratio = total.tightest;
  report.tight_witness = std::move(total.witness);
  return report;
}

std::string summary_line(const VerificationReport& report) {
  return std::to_string(report.instances_checked) + " sequences, " +
         std::to_string(report.violation_count) + " violations";
}

namespace {
std::string join(std::span<const std::uint32_t> ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ks[i]);
  }
  return out;
}
}  // namespace

void write_report(const VerificationReport& report, std::ostream& out) {
  char buf[64];
  out << "alpha=" << report.alpha << '\n';
  out << "phases=" << report.num_phases << '\n';
  out << "mode=" << (report.exhaustive ? "exhaustive" : "sampled") << '\n';
  out << "sequences=" << report.instances_checked << '\n';
  out << "nonzero_sequences=" << report.nonzero_checked << '\n';
  out << "violations=" << report.violation_count << '\n';
  std::snprintf(buf, sizeof buf, "%.12f", report.bound);
  out << "bound=" << buf << '\n';
  std::snprintf(buf, sizeof buf, "%.12f", report.tightest_ratio);
  out << "tightest_ratio=" << buf << '\n';
  out << "tight_witness=" << join(report.tight_witness) << '\n';
  for (const auto& v : report.violations) out << "violation=" << join(v) << '\n';
  out << "summary=" << summary_line(report) << '\n';
}

ProofStepReport verify_proof_steps(const PhaseDecomposition& decomposition) {
  if (decomposition.empty()) throw InputError("verify_proof_steps: empty decomposition");
  ProofStepReport r;
  r.m = *decomposition.m;
  r.j1 = decomposition.j1;
  r.j2 = decomposition.j2;
  r.max_term = decomposition.max_term();
  for (const auto& phase : decomposition.phases) {
    if (phase.phi > r.m) r.upper_sum += phase.weight();
    if (phase.phi < r.m) r.lower_sum += phase.weight();
    r.total += phase.weight();
  }
  const auto j1 = static_cast<std::uint64_t>(r.j1);
  const auto j2 = static_cast<std::uint64_t>(r.j2);
  r.factor = improved_factor(decomposition.alpha);
  r.upper_ok = r.upper_sum <= j1 * r.max_term;
  r.lower_ok = r.lower_sum <= (j2 + 1) * r.max_term;
  r.total_ok = r.total <= (j1 + j2 + 2) * r.max_term;
  r.factor_ok = static_cast<double>(j1 + j2 + 2) <= r.factor + kLemmaSlack;
  return r;
}

ChainCheck graph_chain_check(const BanditInstance& instance, std::uint64_t horizon,
                             const MisOptions& options) {
  const auto decomposition = decompose(instance, horizon, options);
  ChainCheck out;
  if (decomposition.empty()) {
    out.vacuous = true;
    return out;
  }
  MisOptions exact = options;
  exact.allow_approximate = false;
  out.lemma_sum = static_cast<double>(decomposition.lemma_sum);
  out.hardness = hardness(instance, exact);
  out.bound = 2.0 * improved_factor(decomposition.alpha) * out.hardness;
  out.holds = out.lemma_sum <= out.bound * (1.0 + kLemmaSlack);
  return out;
}

}  // namespace fgb
