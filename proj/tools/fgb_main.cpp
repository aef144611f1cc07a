// fgb: command-line front end over the fgbandit C API.
//
// Exit codes: 0 success, 1 verification failure, 2 config/usage error,
// 3 capability error, 4 internal error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgbandit.h"

namespace {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kConfigError = 2,
  kCapabilityError = 3,
  kInternalError = 4,
};

int exit_code(fgb_status status) {
  switch (status) {
    case FGB_OK:
      return kSuccess;
    case FGB_VERIFICATION_FAILED:
      return kVerificationFailed;
    case FGB_CONFIG_ERROR:
    case FGB_INPUT_ERROR:
    case FGB_IO_ERROR:
      return kConfigError;
    case FGB_CAPABILITY_ERROR:
      return kCapabilityError;
    case FGB_INTERNAL_ERROR:
      return kInternalError;
  }
  return kInternalError;
}

// Thrown to unwind out of a command with a status already reported.
struct CommandFailed {
  int code;
};

void check(fgb_status status) {
  if (status == FGB_OK) return;
  std::cerr << "fgb: " << fgb_status_name(status) << ": " << fgb_last_error() << '\n';
  throw CommandFailed{exit_code(status)};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using ConfigHandle = Handle<fgb_config, fgb_config_free>;
using GraphHandle = Handle<fgb_graph, fgb_graph_free>;
using InstanceHandle = Handle<fgb_instance, fgb_instance_free>;
using PhasesHandle = Handle<fgb_phases, fgb_phases_free>;
using LemmaHandle = Handle<fgb_lemma_report, fgb_lemma_report_free>;
using ReportHandle = Handle<fgb_report, fgb_report_free>;

template <typename Render>
std::string render(Render&& fn) {
  std::size_t needed = 0;
  check(fn(nullptr, 0, &needed));
  std::string text(needed + 1, '\0');
  check(fn(text.data(), text.size(), &needed));
  text.resize(needed);
  return text;
}

ConfigHandle load_config(const std::string& path) {
  fgb_config* raw = nullptr;
  check(fgb_config_load(path.c_str(), &raw));
  return ConfigHandle(raw);
}

InstanceHandle config_instance(const fgb_config* config) {
  fgb_instance* raw = nullptr;
  check(fgb_config_instance(config, &raw));
  return InstanceHandle(raw);
}

std::string default_out_dir() {
  if (const char* env = std::getenv("FGB_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return ".";
}

struct SimulateArgs {
  std::string config;
  std::string out = default_out_dir();
  std::size_t threads = 0;
};

void run_simulate(const SimulateArgs& args) {
  auto config = load_config(args.config);
  if (args.threads > 0) check(fgb_config_set_threads(config.get(), args.threads));
  fgb_report* raw = nullptr;
  check(fgb_simulate(config.get(), &raw));
  ReportHandle report(raw);

  std::error_code ec;
  std::filesystem::create_directories(args.out, ec);
  if (ec) {
    std::cerr << "fgb: cannot create output directory '" << args.out << "': " << ec.message() << '\n';
    throw CommandFailed{kConfigError};
  }
  const auto csv = (std::filesystem::path(args.out) / "regret.csv").string();
  const auto sidecar = (std::filesystem::path(args.out) / "bounds.txt").string();
  check(fgb_report_write_csv(report.get(), csv.c_str()));
  check(fgb_report_write_bounds(report.get(), sidecar.c_str()));

  double mean = 0.0;
  double stderr_mean = 0.0;
  fgb_bound_report bounds{};
  check(fgb_report_final(report.get(), &mean, &stderr_mean, &bounds));
  std::printf("T=%llu mean_final_regret=%.6g stderr=%.6g theorem=%.6g corollary=%.6g -> %s, %s\n",
              static_cast<unsigned long long>(bounds.horizon), mean, stderr_mean, bounds.theorem_ucbn,
              bounds.corollary, csv.c_str(), sidecar.c_str());
}

struct BoundsArgs {
  std::string config;
  std::uint64_t horizon = 0;
  bool csv = false;
};

void run_bounds(const BoundsArgs& args) {
  auto config = load_config(args.config);
  auto instance = config_instance(config.get());
  const std::uint64_t horizon = args.horizon > 0 ? args.horizon : fgb_config_horizon(config.get());
  const auto options = fgb_config_mis_options(config.get());
  fgb_bound_report report{};
  check(fgb_bounds_compute(instance.get(), horizon, fgb_config_delta(config.get()), &options, &report));
  std::cout << render([&](char* b, std::size_t c, std::size_t* n) {
    return fgb_bounds_format(&report, args.csv ? 1 : 0, b, c, n);
  });
}

struct PhasesArgs {
  std::string config;
  std::uint64_t horizon = 0;
  bool verify = false;
};

void run_phases(const PhasesArgs& args) {
  auto config = load_config(args.config);
  auto instance = config_instance(config.get());
  const std::uint64_t horizon = args.horizon > 0 ? args.horizon : fgb_config_horizon(config.get());
  const auto options = fgb_config_mis_options(config.get());
  fgb_phases* raw = nullptr;
  check(fgb_phases_decompose(instance.get(), horizon, &options, &raw));
  PhasesHandle phases(raw);
  std::cout << render([&](char* b, std::size_t c, std::size_t* n) { return fgb_phases_format(phases.get(), b, c, n); });
  if (!args.verify) return;

  fgb_phase_summary summary{};
  check(fgb_phases_summary(phases.get(), &summary));
  if (summary.m == 0) {
    std::cout << "proof steps: empty decomposition, nothing to check\n";
    return;
  }
  fgb_proof_steps steps{};
  const auto status = fgb_phases_verify_steps(phases.get(), &steps);
  std::printf("upper: %llu <= j1*max = %llu  %s\n", static_cast<unsigned long long>(steps.upper_sum),
              static_cast<unsigned long long>(steps.j1 * steps.max_term), steps.upper_ok ? "ok" : "FAIL");
  std::printf("lower: %llu <= (j2+1)*max = %llu  %s\n", static_cast<unsigned long long>(steps.lower_sum),
              static_cast<unsigned long long>((steps.j2 + 1) * steps.max_term), steps.lower_ok ? "ok" : "FAIL");
  std::printf("total: %llu <= (j1+j2+2)*max = %llu  %s\n", static_cast<unsigned long long>(steps.total),
              static_cast<unsigned long long>((steps.j1 + steps.j2 + 2) * steps.max_term),
              steps.total_ok ? "ok" : "FAIL");
  std::printf("factor: j1+j2+2 = %d <= log2(alpha)+3 = %.6f  %s\n", steps.j1 + steps.j2 + 2, steps.factor,
              steps.factor_ok ? "ok" : "FAIL");
  check(status);

  int holds = 0;
  double lemma_sum = 0.0;
  double bound = 0.0;
  const auto chain = fgb_graph_chain_check(instance.get(), horizon, &options, &holds, &lemma_sum, &bound);
  std::printf("chain: %.6g <= 2(log2(alpha)+3)H = %.6g  %s\n", lemma_sum, bound, holds ? "ok" : "FAIL");
  check(chain);
}

struct MisArgs {
  std::string graph;
  std::vector<double> weights;
  bool approximate = false;
  std::size_t exact_limit = fgb_mis_default_options().exact_limit;
};

void run_mis(const MisArgs& args) {
  fgb_graph* raw = nullptr;
  check(fgb_graph_parse(args.graph.c_str(), 0, &raw));
  GraphHandle graph(raw);
  fgb_mis_options options{args.exact_limit, args.approximate ? 1 : 0};
  std::vector<std::uint32_t> vertices(fgb_graph_num_arms(graph.get()));
  fgb_mis_result result{};
  check(fgb_max_independent_set(graph.get(), args.weights.empty() ? nullptr : args.weights.data(),
                                args.weights.size(), &options, vertices.data(), vertices.size(), &result));
  if (args.weights.empty()) {
    std::cout << "alpha=" << result.count << '\n';
  } else {
    std::printf("value=%.17g\n", result.value);
  }
  std::cout << "set=";
  for (std::size_t i = 0; i < result.count; ++i) std::cout << (i ? "," : "") << vertices[i];
  std::cout << '\n' << "exact=" << (result.exact ? "true" : "false") << '\n';
}

struct VerifyArgs {
  std::size_t alpha = 1;
  std::size_t phases = 1;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
};

void run_verify(const VerifyArgs& args) {
  fgb_lemma_report* raw = nullptr;
  check(fgb_lemma_verify(args.alpha, args.phases, args.budget, args.seed, args.threads, &raw));
  LemmaHandle report(raw);
  std::cout << render([&](char* b, std::size_t c, std::size_t* n) {
    return fgb_lemma_report_format(report.get(), b, c, n);
  });
  if (fgb_lemma_report_violations(report.get()) != 0) throw CommandFailed{kVerificationFailed};
}

struct SweepArgs {
  std::string config;
  std::vector<std::string> graphs;
  std::string out;
};

void run_sweep(const SweepArgs& args) {
  auto config = load_config(args.config);
  std::vector<const char*> specs;
  for (const auto& g : args.graphs) specs.push_back(g.c_str());
  const auto csv = render([&](char* b, std::size_t c, std::size_t* n) {
    return fgb_sweep_alpha(config.get(), specs.data(), specs.size(), b, c, n);
  });
  std::cout << csv;
  if (!args.out.empty()) {
    std::FILE* f = std::fopen(args.out.c_str(), "wb");
    if (f == nullptr || std::fwrite(csv.data(), 1, csv.size(), f) != csv.size()) {
      if (f) std::fclose(f);
      std::cerr << "fgb: cannot write '" << args.out << "'\n";
      throw CommandFailed{kConfigError};
    }
    std::fclose(f);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic bandits with feedback graphs: simulation, regret bounds and lemma verification"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fgb_version()));

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run a Monte Carlo experiment and write regret.csv and bounds.txt");
  simulate->add_option("--config", sim.config, "Experiment YAML file")->required()->check(CLI::ExistingFile);
  simulate->add_option("--out", sim.out, "Output directory (default from FGB_OUT_DIR)");
  simulate->add_option("--threads", sim.threads, "Worker threads, 0 = hardware concurrency");

  BoundsArgs bnd;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every regret bound for a configured instance");
  bounds->add_option("--config", bnd.config, "Experiment YAML file")->required()->check(CLI::ExistingFile);
  bounds->add_option("--horizon", bnd.horizon, "Horizon T, 0 = take run.horizon from the config");
  bounds->add_flag("--csv", bnd.csv, "Print a CSV header and row instead of key-value text");

  PhasesArgs ph;
  auto* phases = app.add_subcommand("phases", "Print the gap-phase decomposition");
  phases->add_option("--config", ph.config, "Experiment YAML file")->required()->check(CLI::ExistingFile);
  phases->add_option("--horizon", ph.horizon, "Horizon T, 0 = take run.horizon from the config");
  phases->add_flag("--verify", ph.verify, "Also check the proof-step inequalities and the graph chain");

  MisArgs mis;
  auto* mis_cmd = app.add_subcommand("mis", "Maximum (weighted) independent set of a graph");
  mis_cmd->add_option("--graph", mis.graph, "Graph spec, e.g. cycle:5, cliques:3,4, er:10,0.3,7, file:g.txt")
      ->required();
  mis_cmd->add_option("--weights", mis.weights, "Per-vertex nonnegative weights");
  mis_cmd->add_flag("--approx", mis.approximate, "Allow greedy approximation above the exact limit");
  mis_cmd->add_option("--exact-limit", mis.exact_limit, "Largest graph solved exactly (<= 64)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify-lemma", "Certify the phase-sum inequality over all sequences");
  verify->add_option("--alpha", ver.alpha, "Independence number bound on each K_phi")->required();
  verify->add_option("--phases", ver.phases, "Number of phases")->required();
  verify->add_option("--budget", ver.budget, "Enumerate when (alpha+1)^phases <= budget, else sample this many");
  verify->add_option("--seed", ver.seed, "Seed for sampling mode");
  verify->add_option("--threads", ver.threads, "Worker threads, 0 = hardware concurrency");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep-alpha", "Rerun an experiment over several graphs");
  sweep->add_option("--config", sw.config, "Experiment YAML file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--graphs", sw.graphs, "Graph specs, space separated")->required();
  sweep->add_option("--out", sw.out, "Also write the CSV table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    if (*simulate) run_simulate(sim);
    if (*bounds) run_bounds(bnd);
    if (*phases) run_phases(ph);
    if (*mis_cmd) run_mis(mis);
    if (*verify) run_verify(ver);
    if (*sweep) run_sweep(sw);
  } catch (const CommandFailed& failed) {
    return failed.code;
  }
  return kSuccess;
}
