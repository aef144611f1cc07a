#include "fgb/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fgb/error.hpp"

namespace fgb {

std::vector<std::uint64_t> default_checkpoints(std::uint64_t horizon) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t <= horizon; t *= 2) {
    out.push_back(t);
    if (t > horizon / 2) break;
  }
  if (out.empty() || out.back() != horizon) out.push_back(horizon);
  return out;
}

void validate(const ExperimentConfig& config) {
  if (config.horizon < 1) throw ConfigError("run.horizon", 0, "must be at least 1");
  if (config.num_runs < 1) throw ConfigError("run.runs", 0, "must be at least 1");
  for (std::size_t i = 0; i < config.checkpoints.size(); ++i) {
    const auto c = config.checkpoints[i];
    if (c < 1 || c > config.horizon) throw ConfigError("run.checkpoints", 0, "entries must lie in [1, horizon]");
    if (i > 0 && c <= config.checkpoints[i - 1]) {
      throw ConfigError("run.checkpoints", 0, "entries must be strictly increasing");
    }
  }
  if (config.delta > 0.0 && !(config.delta < 1.0)) throw ConfigError("policy.delta", 0, "must lie in (0, 1)");
}

namespace {

int line_of(const YAML::Node& node) { return node.Mark().is_null() ? 0 : node.Mark().line + 1; }

// Field access with path-aware diagnostics.
class Block {
 public:
  Block(YAML::Node node, std::string path, int fallback_line)
      : node_(std::move(node)), path_(std::move(path)), fallback_line_(fallback_line) {
    if (!node_ || !node_.IsMap()) throw ConfigError(path_, fallback_line_, "expected a block of key: value pairs");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& kv : node_) {
      const auto key = kv.first.as<std::string>();
      if (!allowed.count(key)) throw ConfigError(field(key), line_of(kv.first), "unknown key");
    }
  }

  bool has(const std::string& key) const { return static_cast<bool>(node_[key]); }

  YAML::Node require(const std::string& key) const {
    auto n = node_[key];
    if (!n) throw ConfigError(field(key), fallback_line_, "missing required field");
    return n;
  }

  template <typename T>
  T get(const std::string& key) const {
    return convert<T>(require(key), key);
  }

  template <typename T>
  T get_or(const std::string& key, T fallback) const {
    return has(key) ? get<T>(key) : fallback;
  }

  template <typename T>
  T convert(const YAML::Node& n, const std::string& key) const {
    try {
      return n.as<T>();
    } catch (const YAML::Exception&) {
      throw ConfigError(field(key), line_of(n), "has the wrong type");
    }
  }

  std::string field(const std::string& key) const { return path_ + "." + key; }
  // Line of the key itself, not of its value.
  int key_line(const std::string& key) const {
    for (const auto& kv : node_)
      if (kv.first.as<std::string>() == key) return line_of(kv.first);
    return fallback_line_;
  }
  int line() const { return line_of(node_); }
  const YAML::Node& node() const { return node_; }

 private:
  YAML::Node node_;
  std::string path_;
  int fallback_line_;
};

template <typename Fn>
auto wrap_input(const std::string& field, int line, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw ConfigError(field, line, e.what());
  }
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ConfigError("", e.mark.line + 1, e.msg);
  }
  const Block top(root, "config", 1);
  top.allow_only({"instance", "policy", "run"});

  const Block inst(top.require("instance"), "instance", top.key_line("instance"));
  inst.allow_only({"means", "graph", "family", "mis_exact_limit", "approximate_mis"});
  const Block run(top.require("run"), "run", top.key_line("run"));
  run.allow_only({"horizon", "T", "runs", "seed", "checkpoints", "threads"});

  const auto means = inst.get<std::vector<double>>("means");
  for (double mu : means) {
    if (!(mu >= 0.0 && mu <= 1.0)) {
      throw ConfigError("instance.means", line_of(inst.require("means")), "means must lie in [0, 1]");
    }
  }
  if (means.empty()) throw ConfigError("instance.means", line_of(inst.require("means")), "need at least one arm");

  MisOptions mis;
  mis.exact_limit = inst.get_or<std::size_t>("mis_exact_limit", mis.exact_limit);
  if (mis.exact_limit > 64) {
    throw ConfigError("instance.mis_exact_limit", line_of(inst.require("mis_exact_limit")), "must be at most 64");
  }
  mis.allow_approximate = inst.get_or<bool>("approximate_mis", false);

  const auto family = parse_reward_family(inst.get_or<std::string>("family", "bernoulli"));

  const auto graph_node = inst.require("graph");
  FeedbackGraph graph;
  std::string graph_description;
  if (graph_node.IsScalar()) {
    graph_description = graph_node.as<std::string>();
    graph = wrap_input("instance.graph", line_of(graph_node),
                       [&] { return parse_graph_spec(graph_description, means.size()); });
  } else {
    const Block g(graph_node, "instance.graph", inst.key_line("graph"));
    g.allow_only({"edges"});
    const auto pairs = g.get<std::vector<std::string>>("edges");
    graph_description = "edges";
    graph = wrap_input("instance.graph.edges", line_of(g.require("edges")),
                       [&] { return graph_from_edge_strings(pairs, means.size()); });
  }

  ExperimentConfig config(BanditInstance(means, std::move(graph), family));
  config.graph_description = graph_description;
  config.mis = mis;

  if (top.has("policy")) {
    const Block pol(top.require("policy"), "policy", top.key_line("policy"));
    pol.allow_only({"name", "delta"});
    const auto name = pol.get_or<std::string>("name", "ucb-n");
    config.policy = wrap_input("policy.name", pol.line(), [&] { return parse_policy_kind(name); });
    if (pol.has("delta")) {
      config.delta = pol.get<double>("delta");
      if (!(config.delta > 0.0 && config.delta < 1.0)) {
        throw ConfigError("policy.delta", line_of(pol.require("delta")), "must lie in (0, 1)");
      }
    }
  }

  if (run.has("horizon") && run.has("T")) throw ConfigError("run.T", line_of(run.require("T")), "duplicates run.horizon");
  const std::string horizon_key = run.has("T") ? "T" : "horizon";
  const auto horizon = run.get<std::int64_t>(horizon_key);
  if (horizon < 1) throw ConfigError(run.field(horizon_key), line_of(run.require(horizon_key)), "must be at least 1");
  config.horizon = static_cast<std::uint64_t>(horizon);

  const auto runs = run.get_or<std::int64_t>("runs", 1);
  if (runs < 1) throw ConfigError("run.runs", line_of(run.require("runs")), "must be at least 1");
  config.num_runs = static_cast<std::size_t>(runs);
  config.base_seed = run.get_or<std::uint64_t>("seed", 0);
  config.threads = run.get_or<std::size_t>("threads", 0);
  if (run.has("checkpoints")) {
    const auto cps = run.get<std::vector<std::int64_t>>("checkpoints");
    for (auto c : cps) {
      if (c < 1) throw ConfigError("run.checkpoints", line_of(run.require("checkpoints")), "entries must be >= 1");
      config.checkpoints.push_back(static_cast<std::uint64_t>(c));
    }
  }
  try {
    validate(config);
  } catch (const ConfigError& e) {
    const auto dot = e.field().find('.');
    const auto key = e.field().substr(dot + 1);
    const int line = e.field().starts_with("run.") && run.has(key) ? line_of(run.require(key)) : 0;
    throw ConfigError(e.field(), line, e.message());
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", 0, "cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

}  // namespace fgb
