#include "fgb/sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "fgb/error.hpp"
#include "parallel.hpp"

namespace fgb {

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

namespace {

// Core round loop; `record(t, cumulative)` sees every round t = 1..T.
template <typename Record>
void play(const BanditInstance& instance, Policy& policy, std::uint64_t horizon, const Stream& stream,
          const std::vector<double>& gap, Record&& record) {
  Stream rewards_stream = stream.derive(1);
  Stream policy_stream = stream.derive(2);
  std::vector<double> rewards(instance.num_arms());
  double cumulative = 0.0;
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    sample_round(instance, rewards_stream, rewards);
    const Vertex arm = policy.select(policy_stream);
    const auto seen = observe(instance, rewards, arm);
    policy.update(arm, seen, policy_stream);
    cumulative += gap[arm];
    record(t, arm, cumulative);
  }
}

}  // namespace

EpisodeResult run_episode(const BanditInstance& instance, Policy& policy, std::uint64_t horizon,
                          const Stream& stream) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  const auto gap = gaps(instance).gaps;
  EpisodeResult out;
  out.pulls.reserve(horizon);
  out.cumulative_regret.reserve(horizon);
  play(instance, policy, horizon, stream, gap, [&](std::uint64_t, Vertex arm, double cumulative) {
    out.pulls.push_back(arm);
    out.cumulative_regret.push_back(cumulative);
  });
  return out;
}

RegretReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  const auto checkpoints = config.checkpoints.empty() ? default_checkpoints(config.horizon) : config.checkpoints;
  const auto& instance = config.instance;
  const auto gap = gaps(instance).gaps;

  RegretReport report;
  report.bounds = compute_bounds(instance, config.horizon, config.delta, config.mis);
  report.policy = config.policy;
  report.graph_description = config.graph_description;
  report.means = instance.means();
  report.horizon = config.horizon;
  report.num_runs = config.num_runs;
  report.base_seed = config.base_seed;

  // samples[run][c] = cumulative regret at checkpoints[c]
  std::vector<std::vector<double>> samples(config.num_runs);
  detail::parallel_for(config.num_runs, config.threads, [&](std::size_t run) {
    auto policy = make_policy(config.policy, instance.num_arms(), config.horizon, config.delta);
    auto& row = samples[run];
    row.reserve(checkpoints.size());
    std::size_t next = 0;
    play(instance, *policy, config.horizon, Stream(config.base_seed, run), gap,
         [&](std::uint64_t t, Vertex, double cumulative) {
           if (next < checkpoints.size() && checkpoints[next] == t) {
             row.push_back(cumulative);
             ++next;
           }
         });
  });

  const double n = static_cast<double>(config.num_runs);
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    CheckpointStats s;
    s.round = checkpoints[c];
    s.min = samples[0][c];
    s.max = samples[0][c];
    double sum = 0.0;
    for (const auto& row : samples) {
      sum += row[c];
      s.min = std::min(s.min, row[c]);
      s.max = std::max(s.max, row[c]);
    }
    s.mean = sum / n;
    if (config.num_runs > 1) {
      double ss = 0.0;
      for (const auto& row : samples) ss += (row[c] - s.mean) * (row[c] - s.mean);
      s.stderr_mean = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    report.checkpoints.push_back(s);
  }
  report.final_regret.reserve(config.num_runs);
  for (const auto& row : samples) report.final_regret.push_back(row.back());
  return report;
}

void write_regret_csv(const RegretReport& report, std::ostream& out) {
  out << "checkpoint,mean_regret,stderr,min,max\n";
  for (const auto& s : report.checkpoints) {
    out << s.round << ',' << format_number(s.mean) << ',' << format_number(s.stderr_mean) << ','
        << format_number(s.min) << ',' << format_number(s.max) << '\n';
  }
}

void write_bounds_sidecar(const RegretReport& report, std::ostream& out) {
  const auto& b = report.bounds;
  out << "policy=" << to_string(report.policy) << '\n';
  out << "graph=" << report.graph_description << '\n';
  out << "means=";
  for (std::size_t i = 0; i < report.means.size(); ++i) out << (i ? "," : "") << format_number(report.means[i]);
  out << '\n';
  out << "horizon=" << report.horizon << '\n';
  out << "runs=" << report.num_runs << '\n';
  out << "seed=" << report.base_seed << '\n';
  out << "K=" << b.num_arms << '\n';
  out << "alpha=" << b.alpha << '\n';
  out << "exact=" << (b.exact ? "true" : "false") << '\n';
  out << "delta=" << format_number(b.delta) << '\n';
  out << "H=" << format_number(b.hardness) << '\n';
  out << "L=" << format_number(b.capital_l) << '\n';
  out << "lemma_original=" << format_number(b.lemma_original) << '\n';
  out << "lemma_improved=" << format_number(b.lemma_improved) << '\n';
  out << "theorem=" << format_number(b.theorem_ucbn) << '\n';
  out << "corollary=" << format_number(b.corollary_gap_independent) << '\n';
  out << "mean_final_regret=" << format_number(report.final_mean()) << '\n';
  out << "stderr_final_regret=" << format_number(report.final_stderr()) << '\n';
}

std::vector<SweepRow> sweep_alpha(const ExperimentConfig& base, const std::vector<std::string>& graph_specs) {
  std::vector<SweepRow> rows;
  rows.reserve(graph_specs.size());
  for (const auto& spec : graph_specs) {
    ExperimentConfig config = base;
    config.instance = BanditInstance(base.instance.means(), parse_graph_spec(spec, base.instance.num_arms()),
                                     base.instance.family());
    config.graph_description = spec;
    const auto report = run_experiment(config);
    rows.push_back({spec, report.bounds.alpha, report.final_mean(), report.final_stderr(),
                    report.bounds.theorem_ucbn, report.bounds.corollary_gap_independent});
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "graph,alpha,mean_regret,stderr,theorem,corollary\n";
  for (const auto& r : rows) {
    out << '"' << r.graph << '"' << ',' << r.alpha << ',' << format_number(r.mean_regret) << ','
        << format_number(r.stderr_mean) << ',' << format_number(r.theorem) << ',' << format_number(r.corollary)
        << '\n';
  }
}

}  // namespace fgb
