#include "fgbandit.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "fgb/bounds.hpp"
#include "fgb/config.hpp"
#include "fgb/error.hpp"
#include "fgb/graph.hpp"
#include "fgb/lemma_verifier.hpp"
#include "fgb/phases.hpp"
#include "fgb/policies.hpp"
#include "fgb/sim.hpp"

struct fgb_graph {
  fgb::FeedbackGraph value;
};
struct fgb_instance {
  fgb::BanditInstance value;
};
struct fgb_phases {
  fgb::PhaseDecomposition value;
};
struct fgb_lemma_report {
  fgb::VerificationReport value;
};
struct fgb_stream {
  fgb::Stream value;
};
struct fgb_policy {
  std::unique_ptr<fgb::Policy> value;
};
struct fgb_config {
  fgb::ExperimentConfig value;
};
struct fgb_report {
  fgb::RegretReport value;
};

namespace {

thread_local std::string last_error;

fgb_status fail(fgb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
fgb_status guarded(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const fgb::ConfigError& e) {
    return fail(FGB_CONFIG_ERROR, e.what());
  } catch (const fgb::CapabilityError& e) {
    return fail(FGB_CAPABILITY_ERROR, e.what());
  } catch (const fgb::VerificationError& e) {
    return fail(FGB_VERIFICATION_FAILED, e.what());
  } catch (const fgb::InputError& e) {
    return fail(FGB_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FGB_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(FGB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(FGB_INTERNAL_ERROR, "unknown error");
  }
}

#define FGB_REQUIRE(ptr)                                                        \
  do {                                                                          \
    if ((ptr) == nullptr) return fail(FGB_INPUT_ERROR, #ptr " must not be NULL"); \
  } while (0)

fgb::MisOptions to_options(const fgb_mis_options* options) {
  fgb::MisOptions out;
  if (options != nullptr) {
    out.exact_limit = options->exact_limit;
    out.allow_approximate = options->allow_approximate != 0;
  }
  return out;
}

fgb_status write_text(const std::string& text, char* buf, std::size_t capacity, std::size_t* needed) {
  if (needed != nullptr) *needed = text.size();
  if (buf != nullptr && capacity > 0) {
    const std::size_t n = std::min(text.size(), capacity - 1);
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return FGB_OK;
}

fgb_bound_report to_c(const fgb::BoundReport& b) {
  fgb_bound_report r{};
  r.horizon = b.horizon;
  r.num_arms = b.num_arms;
  r.delta = b.delta;
  r.alpha = b.alpha;
  r.hardness = b.hardness;
  r.capital_l = b.capital_l;
  r.lemma_original = b.lemma_original;
  r.lemma_improved = b.lemma_improved;
  r.theorem_ucbn = b.theorem_ucbn;
  r.corollary = b.corollary_gap_independent;
  r.exact = b.exact ? 1 : 0;
  return r;
}

fgb::PolicyKind to_kind(fgb_policy_kind kind) {
  switch (kind) {
    case FGB_POLICY_UCB_N:
      return fgb::PolicyKind::ucb_n;
    case FGB_POLICY_TS_N:
      return fgb::PolicyKind::ts_n;
    case FGB_POLICY_UCB1:
      return fgb::PolicyKind::ucb1;
  }
  throw fgb::InputError("unknown policy kind");
}

fgb_status write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return fail(FGB_IO_ERROR, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) return fail(FGB_IO_ERROR, "failed writing '" + path + "'");
  return FGB_OK;
}

}  // namespace

extern "C" {

const char* fgb_version(void) { return "0.1.0"; }

const char* fgb_last_error(void) { return last_error.c_str(); }

const char* fgb_status_name(fgb_status status) {
  switch (status) {
    case FGB_OK:
      return "ok";
    case FGB_VERIFICATION_FAILED:
      return "verification failed";
    case FGB_CONFIG_ERROR:
      return "config error";
    case FGB_CAPABILITY_ERROR:
      return "capability error";
    case FGB_INPUT_ERROR:
      return "input error";
    case FGB_IO_ERROR:
      return "i/o error";
    case FGB_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

// ---- graphs

fgb_status fgb_graph_parse(const char* spec, size_t expected_arms, fgb_graph** out) {
  FGB_REQUIRE(spec);
  FGB_REQUIRE(out);
  return guarded([&] {
    std::optional<std::size_t> arms;
    if (expected_arms > 0) arms = expected_arms;
    *out = new fgb_graph{fgb::parse_graph_spec(spec, arms)};
    return FGB_OK;
  });
}

fgb_status fgb_graph_from_edges(size_t num_arms, const uint32_t* endpoints, size_t num_edges, fgb_graph** out) {
  FGB_REQUIRE(out);
  if (num_edges > 0) FGB_REQUIRE(endpoints);
  return guarded([&] {
    if (num_arms == 0) throw fgb::InputError("graph needs at least one arm");
    std::vector<fgb::Edge> edges;
    edges.reserve(num_edges);
    for (std::size_t i = 0; i < num_edges; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    *out = new fgb_graph{fgb::FeedbackGraph::from_edges(num_arms, edges)};
    return FGB_OK;
  });
}

void fgb_graph_free(fgb_graph* graph) { delete graph; }

size_t fgb_graph_num_arms(const fgb_graph* graph) { return graph ? graph->value.num_arms() : 0; }

size_t fgb_graph_num_edges(const fgb_graph* graph) { return graph ? graph->value.num_edges() : 0; }

fgb_status fgb_graph_neighborhood(const fgb_graph* graph, uint32_t arm, uint32_t* out, size_t capacity,
                                  size_t* count) {
  FGB_REQUIRE(graph);
  return guarded([&] {
    const auto nb = graph->value.neighborhood(arm);
    if (count != nullptr) *count = nb.size();
    if (out != nullptr) std::copy_n(nb.begin(), std::min(capacity, nb.size()), out);
    return FGB_OK;
  });
}

fgb_mis_options fgb_mis_default_options(void) {
  const fgb::MisOptions d;
  return fgb_mis_options{d.exact_limit, d.allow_approximate ? 1 : 0};
}

fgb_status fgb_max_independent_set(const fgb_graph* graph, const double* weights, size_t num_weights,
                                   const fgb_mis_options* options, uint32_t* vertices, size_t capacity,
                                   fgb_mis_result* out) {
  FGB_REQUIRE(graph);
  FGB_REQUIRE(out);
  if (num_weights > 0) FGB_REQUIRE(weights);
  return guarded([&] {
    std::span<const double> w;
    if (weights != nullptr) w = std::span<const double>(weights, num_weights);
    const auto result = fgb::max_independent_set(graph->value, w, to_options(options));
    out->value = result.value;
    out->count = result.vertices.size();
    out->exact = result.exact ? 1 : 0;
    if (vertices != nullptr) {
      std::copy_n(result.vertices.begin(), std::min(capacity, result.vertices.size()), vertices);
    }
    return FGB_OK;
  });
}

// ---- instances

fgb_status fgb_instance_create(const double* means, size_t num_arms, const fgb_graph* graph, fgb_instance** out) {
  FGB_REQUIRE(means);
  FGB_REQUIRE(graph);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_instance{fgb::BanditInstance(std::vector<double>(means, means + num_arms), graph->value)};
    return FGB_OK;
  });
}

void fgb_instance_free(fgb_instance* instance) { delete instance; }

size_t fgb_instance_num_arms(const fgb_instance* instance) { return instance ? instance->value.num_arms() : 0; }

fgb_status fgb_instance_gaps(const fgb_instance* instance, double* gaps, size_t capacity, double* delta_min) {
  FGB_REQUIRE(instance);
  return guarded([&] {
    const auto profile = fgb::gaps(instance->value);
    if (gaps != nullptr) std::copy_n(profile.gaps.begin(), std::min(capacity, profile.gaps.size()), gaps);
    if (delta_min != nullptr) *delta_min = profile.delta_min.value_or(0.0);
    return FGB_OK;
  });
}

// ---- bounds

fgb_status fgb_bounds_compute(const fgb_instance* instance, uint64_t horizon, double delta,
                              const fgb_mis_options* options, fgb_bound_report* out) {
  FGB_REQUIRE(instance);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = to_c(fgb::compute_bounds(instance->value, horizon, delta, to_options(options)));
    return FGB_OK;
  });
}

fgb_status fgb_bounds_format(const fgb_bound_report* r, int csv, char* buf, size_t capacity, size_t* needed) {
  FGB_REQUIRE(r);
  return guarded([&] {
    using fgb::format_number;
    std::ostringstream out;
    if (csv) {
      out << "T,K,alpha,H,L,lemma_original,lemma_improved,theorem,corollary\n";
      out << r->horizon << ',' << r->num_arms << ',' << r->alpha << ',' << format_number(r->hardness) << ','
          << format_number(r->capital_l) << ',' << format_number(r->lemma_original) << ','
          << format_number(r->lemma_improved) << ',' << format_number(r->theorem_ucbn) << ','
          << format_number(r->corollary) << '\n';
    } else {
      char line[128];
      auto row = [&](const char* key, const std::string& value) {
        std::snprintf(line, sizeof line, "%-16s %s\n", key, value.c_str());
        out << line;
      };
      row("T", std::to_string(r->horizon));
      row("K", std::to_string(r->num_arms));
      row("delta", format_number(r->delta));
      row("alpha", std::to_string(r->alpha));
      row("H", format_number(r->hardness));
      row("L", format_number(r->capital_l));
      row("lemma_original", format_number(r->lemma_original));
      row("lemma_improved", format_number(r->lemma_improved));
      row("theorem", format_number(r->theorem_ucbn));
      row("corollary", format_number(r->corollary));
      row("exact", r->exact ? "true" : "false");
    }
    return write_text(out.str(), buf, capacity, needed);
  });
}

fgb_status fgb_capital_l(uint64_t horizon, size_t num_arms, double delta, double* out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = fgb::capital_l(horizon, num_arms, delta);
    return FGB_OK;
  });
}

fgb_status fgb_hardness(const fgb_instance* instance, const fgb_mis_options* options, double* out) {
  FGB_REQUIRE(instance);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = fgb::hardness(instance->value, to_options(options));
    return FGB_OK;
  });
}

fgb_status fgb_lemma_original_rhs(double capital_l, uint64_t horizon, double hardness, double* out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = fgb::lemma_original_rhs(capital_l, horizon, hardness);
    return FGB_OK;
  });
}

fgb_status fgb_lemma_improved_rhs(double capital_l, size_t alpha, double hardness, double* out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = fgb::lemma_improved_rhs(capital_l, alpha, hardness);
    return FGB_OK;
  });
}

fgb_status fgb_theorem_ucbn_bound(uint64_t horizon, size_t num_arms, size_t alpha, double hardness, double* out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = fgb::theorem_ucbn_bound(horizon, num_arms, alpha, hardness);
    return FGB_OK;
  });
}

fgb_status fgb_corollary_bound(uint64_t horizon, size_t num_arms, size_t alpha, double* out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = fgb::corollary_bound(horizon, num_arms, alpha);
    return FGB_OK;
  });
}

// ---- phases

fgb_status fgb_phases_decompose(const fgb_instance* instance, uint64_t horizon, const fgb_mis_options* options,
                                fgb_phases** out) {
  FGB_REQUIRE(instance);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_phases{fgb::decompose(instance->value, horizon, to_options(options))};
    return FGB_OK;
  });
}

void fgb_phases_free(fgb_phases* phases) { delete phases; }

fgb_status fgb_phases_summary(const fgb_phases* phases, fgb_phase_summary* out) {
  FGB_REQUIRE(phases);
  FGB_REQUIRE(out);
  const auto& d = phases->value;
  out->alpha = d.alpha;
  out->phi_max = d.phi_max;
  out->m = d.m.value_or(0);
  out->j1 = d.j1;
  out->j2 = d.j2;
  out->lemma_sum = d.lemma_sum;
  out->max_term = d.max_term();
  return FGB_OK;
}

fgb_status fgb_phases_get(const fgb_phases* phases, int phi, fgb_phase_info* out, uint32_t* arms, size_t capacity) {
  FGB_REQUIRE(phases);
  FGB_REQUIRE(out);
  return guarded([&] {
    const auto& p = phases->value.phase(phi);
    out->phi = p.phi;
    out->num_arms = p.arms.size();
    out->max_independent = p.max_independent;
    out->weight = p.weight();
    if (arms != nullptr) std::copy_n(p.arms.begin(), std::min(capacity, p.arms.size()), arms);
    return FGB_OK;
  });
}

fgb_status fgb_phases_format(const fgb_phases* phases, char* buf, size_t capacity, size_t* needed) {
  FGB_REQUIRE(phases);
  return guarded([&] {
    const auto& d = phases->value;
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%5s %8s %8s %14s  %s\n", "phi", "|G_phi|", "K_phi", "K_phi*2^phi", "");
    out << line;
    for (const auto& p : d.phases) {
      std::snprintf(line, sizeof line, "%5d %8zu %8zu %14llu  %s\n", p.phi, p.arms.size(), p.max_independent,
                    static_cast<unsigned long long>(p.weight()), d.m && *d.m == p.phi ? "<- m" : "");
      out << line;
    }
    out << "alpha=" << d.alpha << " phi_max=" << d.phi_max;
    if (d.m) {
      out << " m=" << *d.m << " j1=" << d.j1 << " j2=" << d.j2 << " sum=" << d.lemma_sum
          << " max_term=" << d.max_term();
    } else {
      out << " (empty decomposition)";
    }
    out << '\n';
    return write_text(out.str(), buf, capacity, needed);
  });
}

fgb_status fgb_phases_verify_steps(const fgb_phases* phases, fgb_proof_steps* out) {
  FGB_REQUIRE(phases);
  FGB_REQUIRE(out);
  return guarded([&] {
    const auto r = fgb::verify_proof_steps(phases->value);
    out->m = r.m;
    out->j1 = r.j1;
    out->j2 = r.j2;
    out->max_term = r.max_term;
    out->upper_sum = r.upper_sum;
    out->lower_sum = r.lower_sum;
    out->total = r.total;
    out->factor = r.factor;
    out->upper_ok = r.upper_ok;
    out->lower_ok = r.lower_ok;
    out->total_ok = r.total_ok;
    out->factor_ok = r.factor_ok;
    return r.all() ? FGB_OK : fail(FGB_VERIFICATION_FAILED, "proof-step inequality violated");
  });
}

fgb_status fgb_graph_chain_check(const fgb_instance* instance, uint64_t horizon, const fgb_mis_options* options,
                                 int* holds, double* lemma_sum, double* bound) {
  FGB_REQUIRE(instance);
  return guarded([&] {
    const auto r = fgb::graph_chain_check(instance->value, horizon, to_options(options));
    if (holds != nullptr) *holds = r.holds ? 1 : 0;
    if (lemma_sum != nullptr) *lemma_sum = r.lemma_sum;
    if (bound != nullptr) *bound = r.bound;
    return r.holds ? FGB_OK : fail(FGB_VERIFICATION_FAILED, "phase sum exceeds 2 (log2 alpha + 3) H");
  });
}

// ---- lemma verification

fgb_status fgb_verify_sequence(size_t alpha, const uint32_t* ks, size_t num_phases, int* holds, double* ratio) {
  if (num_phases > 0) FGB_REQUIRE(ks);
  return guarded([&] {
    const auto r = fgb::verify_sequence(alpha, std::span<const std::uint32_t>(ks, num_phases));
    if (holds != nullptr) *holds = r.holds ? 1 : 0;
    if (ratio != nullptr) *ratio = r.ratio;
    return FGB_OK;
  });
}

fgb_status fgb_lemma_verify(size_t alpha, size_t num_phases, uint64_t budget, uint64_t seed, size_t threads,
                            fgb_lemma_report** out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_lemma_report{fgb::exhaustive_verify(alpha, num_phases, budget, seed, threads)};
    return FGB_OK;
  });
}

void fgb_lemma_report_free(fgb_lemma_report* report) { delete report; }

uint64_t fgb_lemma_report_sequences(const fgb_lemma_report* report) {
  return report ? report->value.instances_checked : 0;
}

uint64_t fgb_lemma_report_violations(const fgb_lemma_report* report) {
  return report ? report->value.violation_count : 0;
}

int fgb_lemma_report_exhaustive(const fgb_lemma_report* report) {
  return report && report->value.exhaustive ? 1 : 0;
}

double fgb_lemma_report_tightest_ratio(const fgb_lemma_report* report) {
  return report ? report->value.tightest_ratio : 0.0;
}

double fgb_lemma_report_bound(const fgb_lemma_report* report) { return report ? report->value.bound : 0.0; }

fgb_status fgb_lemma_report_format(const fgb_lemma_report* report, char* buf, size_t capacity, size_t* needed) {
  FGB_REQUIRE(report);
  return guarded([&] {
    std::ostringstream out;
    fgb::write_report(report->value, out);
    return write_text(out.str(), buf, capacity, needed);
  });
}

// ---- streams and policies

fgb_status fgb_stream_create(uint64_t seed, uint64_t index, fgb_stream** out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_stream{fgb::Stream(seed, index)};
    return FGB_OK;
  });
}

void fgb_stream_free(fgb_stream* stream) { delete stream; }

fgb_status fgb_policy_kind_parse(const char* name, fgb_policy_kind* out) {
  FGB_REQUIRE(name);
  FGB_REQUIRE(out);
  return guarded([&] {
    switch (fgb::parse_policy_kind(name)) {
      case fgb::PolicyKind::ucb_n:
        *out = FGB_POLICY_UCB_N;
        break;
      case fgb::PolicyKind::ts_n:
        *out = FGB_POLICY_TS_N;
        break;
      case fgb::PolicyKind::ucb1:
        *out = FGB_POLICY_UCB1;
        break;
    }
    return FGB_OK;
  });
}

fgb_status fgb_policy_create(fgb_policy_kind kind, size_t num_arms, uint64_t horizon, double delta,
                             fgb_policy** out) {
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_policy{fgb::make_policy(to_kind(kind), num_arms, horizon, delta)};
    return FGB_OK;
  });
}

void fgb_policy_free(fgb_policy* policy) { delete policy; }

fgb_status fgb_policy_select(fgb_policy* policy, fgb_stream* stream, uint32_t* arm) {
  FGB_REQUIRE(policy);
  FGB_REQUIRE(stream);
  FGB_REQUIRE(arm);
  return guarded([&] {
    *arm = policy->value->select(stream->value);
    return FGB_OK;
  });
}

fgb_status fgb_policy_update(fgb_policy* policy, uint32_t pulled, const uint32_t* arms, const double* rewards,
                             size_t count, fgb_stream* stream) {
  FGB_REQUIRE(policy);
  FGB_REQUIRE(stream);
  if (count > 0) {
    FGB_REQUIRE(arms);
    FGB_REQUIRE(rewards);
  }
  return guarded([&] {
    std::vector<fgb::Observation> obs;
    obs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) obs.push_back({arms[i], rewards[i]});
    policy->value->update(pulled, obs, stream->value);
    return FGB_OK;
  });
}

fgb_status fgb_policy_estimates(const fgb_policy* policy, double* out, size_t capacity) {
  FGB_REQUIRE(policy);
  FGB_REQUIRE(out);
  return guarded([&] {
    const auto est = policy->value->estimates();
    std::copy_n(est.begin(), std::min(capacity, est.size()), out);
    return FGB_OK;
  });
}

fgb_status fgb_run_episode(const fgb_instance* instance, fgb_policy* policy, uint64_t horizon,
                           const fgb_stream* stream, uint32_t* pulls, double* cumulative_regret) {
  FGB_REQUIRE(instance);
  FGB_REQUIRE(policy);
  FGB_REQUIRE(stream);
  return guarded([&] {
    const auto r = fgb::run_episode(instance->value, *policy->value, horizon, stream->value);
    if (pulls != nullptr) std::copy(r.pulls.begin(), r.pulls.end(), pulls);
    if (cumulative_regret != nullptr) {
      std::copy(r.cumulative_regret.begin(), r.cumulative_regret.end(), cumulative_regret);
    }
    return FGB_OK;
  });
}

// ---- experiments

fgb_status fgb_config_load(const char* path, fgb_config** out) {
  FGB_REQUIRE(path);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_config{fgb::load_experiment_config(path)};
    return FGB_OK;
  });
}

fgb_status fgb_config_parse(const char* text, fgb_config** out) {
  FGB_REQUIRE(text);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_config{fgb::parse_experiment_config(text)};
    return FGB_OK;
  });
}

void fgb_config_free(fgb_config* config) { delete config; }

uint64_t fgb_config_horizon(const fgb_config* config) { return config ? config->value.horizon : 0; }

fgb_status fgb_config_set_horizon(fgb_config* config, uint64_t horizon) {
  FGB_REQUIRE(config);
  return guarded([&] {
    if (horizon == 0) throw fgb::InputError("horizon must be at least 1");
    config->value.horizon = horizon;
    auto& cps = config->value.checkpoints;
    std::erase_if(cps, [&](std::uint64_t c) { return c > horizon; });
    return FGB_OK;
  });
}

fgb_status fgb_config_set_threads(fgb_config* config, size_t threads) {
  FGB_REQUIRE(config);
  config->value.threads = threads;
  return FGB_OK;
}

fgb_status fgb_config_instance(const fgb_config* config, fgb_instance** out) {
  FGB_REQUIRE(config);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_instance{config->value.instance};
    return FGB_OK;
  });
}

fgb_mis_options fgb_config_mis_options(const fgb_config* config) {
  if (config == nullptr) return fgb_mis_default_options();
  return fgb_mis_options{config->value.mis.exact_limit, config->value.mis.allow_approximate ? 1 : 0};
}

double fgb_config_delta(const fgb_config* config) { return config ? config->value.delta : 0.0; }

fgb_status fgb_simulate(const fgb_config* config, fgb_report** out) {
  FGB_REQUIRE(config);
  FGB_REQUIRE(out);
  return guarded([&] {
    *out = new fgb_report{fgb::run_experiment(config->value)};
    return FGB_OK;
  });
}

void fgb_report_free(fgb_report* report) { delete report; }

fgb_status fgb_report_write_csv(const fgb_report* report, const char* path) {
  FGB_REQUIRE(report);
  FGB_REQUIRE(path);
  return guarded([&] {
    std::ostringstream out;
    fgb::write_regret_csv(report->value, out);
    return write_file(path, out.str());
  });
}

fgb_status fgb_report_write_bounds(const fgb_report* report, const char* path) {
  FGB_REQUIRE(report);
  FGB_REQUIRE(path);
  return guarded([&] {
    std::ostringstream out;
    fgb::write_bounds_sidecar(report->value, out);
    return write_file(path, out.str());
  });
}

fgb_status fgb_report_final(const fgb_report* report, double* mean, double* stderr_mean, fgb_bound_report* bounds) {
  FGB_REQUIRE(report);
  if (mean != nullptr) *mean = report->value.final_mean();
  if (stderr_mean != nullptr) *stderr_mean = report->value.final_stderr();
  if (bounds != nullptr) *bounds = to_c(report->value.bounds);
  return FGB_OK;
}

size_t fgb_report_num_checkpoints(const fgb_report* report) {
  return report ? report->value.checkpoints.size() : 0;
}

fgb_status fgb_report_checkpoint(const fgb_report* report, size_t i, uint64_t* round, double* mean,
                                 double* stderr_mean, double* min, double* max) {
  FGB_REQUIRE(report);
  if (i >= report->value.checkpoints.size()) return fail(FGB_INPUT_ERROR, "checkpoint index out of range");
  const auto& c = report->value.checkpoints[i];
  if (round != nullptr) *round = c.round;
  if (mean != nullptr) *mean = c.mean;
  if (stderr_mean != nullptr) *stderr_mean = c.stderr_mean;
  if (min != nullptr) *min = c.min;
  if (max != nullptr) *max = c.max;
  return FGB_OK;
}

fgb_status fgb_sweep_alpha(const fgb_config* config, const char* const* graph_specs, size_t count, char* buf,
                           size_t capacity, size_t* needed) {
  FGB_REQUIRE(config);
  if (count > 0) FGB_REQUIRE(graph_specs);
  return guarded([&] {
    std::vector<std::string> specs;
    for (std::size_t i = 0; i < count; ++i) {
      if (graph_specs[i] == nullptr) throw fgb::InputError("graph spec must not be NULL");
      specs.emplace_back(graph_specs[i]);
    }
    std::ostringstream out;
    fgb::write_sweep_csv(fgb::sweep_alpha(config->value, specs), out);
    return write_text(out.str(), buf, capacity, needed);
  });
}

}  // extern "C"
