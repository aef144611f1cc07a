#include "fgb/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "fgb/error.hpp"
#include "fgb/random.hpp"

namespace fgb {

FeedbackGraph FeedbackGraph::from_edges(std::size_t num_arms, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(num_arms);
  for (std::size_t v = 0; v < num_arms; ++v) adj[v].push_back(static_cast<Vertex>(v));
  for (const auto& [a, b] : edges) {
    if (a >= num_arms || b >= num_arms) {
      throw InputError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                       " out of range for " + std::to_string(num_arms) + " arms");
    }
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return FeedbackGraph(std::move(adj));
}

std::span<const Vertex> FeedbackGraph::neighborhood(Vertex a) const {
  if (a >= adjacency_.size()) {
    throw InputError("vertex " + std::to_string(a) + " out of range for " +
                     std::to_string(adjacency_.size()) + " arms");
  }
  return adjacency_[a];
}

bool FeedbackGraph::adjacent(Vertex a, Vertex b) const {
  if (a == b) {
    neighborhood(a);
    return false;
  }
  const auto nb = neighborhood(a);
  neighborhood(b);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t FeedbackGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.size() - 1;
  return total / 2;
}

std::vector<Edge> FeedbackGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < adjacency_.size(); ++a) {
    for (Vertex b : adjacency_[a]) {
      if (b > a) out.emplace_back(a, b);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const FeedbackGraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> ids(subset.begin(), subset.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw InputError("induced_subgraph: duplicate vertex in subset");
  }
  if (!ids.empty() && ids.back() >= g.num_arms()) {
    throw InputError("induced_subgraph: vertex " + std::to_string(ids.back()) + " out of range");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < ids.size(); ++i) {
    for (Vertex j = i + 1; j < ids.size(); ++j) {
      if (g.adjacent(ids[i], ids[j])) edges.emplace_back(i, j);
    }
  }
  return {FeedbackGraph::from_edges(ids.size(), edges), std::move(ids)};
}

bool is_independent(const FeedbackGraph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t v) { return Mask{1} << v; }

// Branch and bound over bitmask candidate sets. Finds the optimum value only;
// witness construction is done by the caller.
class MisSearch {
 public:
  MisSearch(const FeedbackGraph& g, std::span<const double> weights) : weights_(weights) {
    open_.resize(g.num_arms(), 0);
    for (Vertex v = 0; v < g.num_arms(); ++v) {
      for (Vertex u : g.neighborhood(v)) {
        if (u != v) open_[v] |= bit(u);
      }
    }
  }

  double best_value(Mask candidates) {
    best_ = 0.0;
    search(candidates, 0.0);
    return best_;
  }

  Mask closed(Vertex v) const { return open_[v] | bit(v); }

 private:
  double mass(Mask m) const {
    double total = 0.0;
    while (m) {
      total += weights_[std::countr_zero(m)];
      m &= m - 1;
    }
    return total;
  }

  void search(Mask cand, double current) {
    if (cand == 0) {
      best_ = std::max(best_, current);
      return;
    }
    const double remaining = mass(cand);
    if (current + remaining <= best_) return;

    int pivot = -1;
    int max_degree = -1;
    for (Mask m = cand; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(open_[v] & cand);
      if (d > max_degree) {
        max_degree = d;
        pivot = v;
      }
    }
    if (max_degree == 0) {
      best_ = std::max(best_, current + remaining);
      return;
    }
    search(cand & ~closed(static_cast<Vertex>(pivot)), current + weights_[pivot]);
    search(cand & ~bit(pivot), current);
  }

  std::span<const double> weights_;
  std::vector<Mask> open_;
  double best_ = 0.0;
};

IndependentSetResult exact_mis(const FeedbackGraph& g, std::span<const double> weights) {
  const std::size_t k = g.num_arms();
  MisSearch search(g, weights);
  const Mask all = k == 64 ? ~Mask{0} : bit(k) - 1;
  const double optimum = search.best_value(all);
  const double tolerance = 1e-12 * std::max(1.0, optimum);

  IndependentSetResult result;
  Mask cand = all;
  double chosen = 0.0;
  for (Vertex v = 0; v < k; ++v) {
    if (!(cand & bit(v))) continue;
    const Mask rest = cand & ~search.closed(v);
    const double with_v = chosen + weights[v] + search.best_value(rest);
    if (with_v >= optimum - tolerance) {
      result.vertices.push_back(v);
      chosen += weights[v];
      cand = rest;
    } else {
      cand &= ~bit(v);
    }
  }
  result.value = chosen;
  return result;
}

IndependentSetResult greedy_mis(const FeedbackGraph& g, std::span<const double> weights) {
  const std::size_t k = g.num_arms();
  std::vector<bool> alive(k, true);
  IndependentSetResult result;
  result.exact = false;
  for (;;) {
    int pick = -1;
    double pick_score = -1.0;
    for (Vertex v = 0; v < k; ++v) {
      if (!alive[v]) continue;
      std::size_t deg = 0;
      for (Vertex u : g.neighborhood(v)) deg += (u != v && alive[u]) ? 1 : 0;
      const double score = weights[v] / static_cast<double>(deg + 1);
      if (score > pick_score) {
        pick_score = score;
        pick = static_cast<int>(v);
      }
    }
    if (pick < 0) break;
    result.vertices.push_back(static_cast<Vertex>(pick));
    for (Vertex u : g.neighborhood(static_cast<Vertex>(pick))) alive[u] = false;
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  for (Vertex v : result.vertices) result.value += weights[v];
  return result;
}

}  // namespace

IndependentSetResult max_independent_set(const FeedbackGraph& g, std::span<const double> weights,
                                         const MisOptions& options) {
  const std::size_t k = g.num_arms();
  if (options.exact_limit > 64) throw InputError("MIS exact limit cannot exceed 64 vertices");
  std::vector<double> unit;
  if (weights.empty()) {
    unit.assign(k, 1.0);
    weights = unit;
  } else if (weights.size() != k) {
    throw InputError("MIS: expected " + std::to_string(k) + " weights, got " +
                     std::to_string(weights.size()));
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InputError("MIS: weights must be finite and >= 0");
  }
  if (k == 0) return {};
  if (k > options.exact_limit) {
    if (!options.allow_approximate) {
      throw CapabilityError("exact MIS limited to " + std::to_string(options.exact_limit) +
                            " vertices, graph has " + std::to_string(k) +
                            "; enable approximation explicitly");
    }
    return greedy_mis(g, weights);
  }
  return exact_mis(g, weights);
}

std::size_t independence_number(const FeedbackGraph& g, const MisOptions& options) {
  MisOptions exact = options;
  exact.allow_approximate = false;
  return max_independent_set(g, {}, exact).vertices.size();
}

namespace generators {

namespace {
void require_arms(std::size_t k) {
  if (k == 0) throw InputError("graph needs at least one arm");
}
}  // namespace

FeedbackGraph complete(std::size_t k) {
  require_arms(k);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) edges.emplace_back(a, b);
  return FeedbackGraph::from_edges(k, edges);
}

FeedbackGraph edgeless(std::size_t k) {
  require_arms(k);
  return FeedbackGraph::from_edges(k, {});
}

FeedbackGraph cycle(std::size_t k) {
  require_arms(k);
  std::vector<Edge> edges;
  if (k >= 2) {
    for (Vertex a = 0; a + 1 < k; ++a) edges.emplace_back(a, a + 1);
    edges.emplace_back(static_cast<Vertex>(k - 1), 0);
  }
  return FeedbackGraph::from_edges(k, edges);
}

FeedbackGraph star(std::size_t k) {
  require_arms(k);
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf < k; ++leaf) edges.emplace_back(0, leaf);
  return FeedbackGraph::from_edges(k, edges);
}

FeedbackGraph disjoint_cliques(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw InputError("disjoint_cliques: need at least one clique");
  std::vector<Edge> edges;
  Vertex offset = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw InputError("disjoint_cliques: clique sizes must be positive");
    for (Vertex a = 0; a < s; ++a)
      for (Vertex b = a + 1; b < s; ++b) edges.emplace_back(offset + a, offset + b);
    offset += static_cast<Vertex>(s);
  }
  return FeedbackGraph::from_edges(offset, edges);
}

FeedbackGraph erdos_renyi(std::size_t k, double p, std::uint64_t seed) {
  require_arms(k);
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("erdos_renyi: p must lie in [0, 1]");
  Stream stream(seed, 0x6572);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) {
      // One draw per pair regardless of p keeps graphs nested in p for a fixed seed.
      if (stream.uniform() < p) edges.emplace_back(a, b);
    }
  }
  return FeedbackGraph::from_edges(k, edges);
}

}  // namespace generators

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InputError("graph spec: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Edge parse_pair(std::string_view text) {
  text = trim(text);
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw InputError("edge '" + std::string(text) + "' is not of the form a-b");
  }
  return {parse_number<Vertex>(text.substr(0, dash), "edge endpoint"),
          parse_number<Vertex>(text.substr(dash + 1), "edge endpoint")};
}

FeedbackGraph build_edge_list(std::vector<Edge> edges, std::optional<std::size_t> declared,
                              std::optional<std::size_t> num_arms) {
  std::size_t k = declared.value_or(0);
  if (!declared) {
    for (const auto& [a, b] : edges) k = std::max<std::size_t>(k, std::max(a, b) + 1);
  }
  if (num_arms) {
    if (declared && *declared != *num_arms) {
      throw InputError("edge list declares " + std::to_string(*declared) + " arms, expected " +
                       std::to_string(*num_arms));
    }
    if (k > *num_arms) {
      throw InputError("edge list references vertex " + std::to_string(k - 1) + " but only " +
                       std::to_string(*num_arms) + " arms exist");
    }
    k = *num_arms;
  }
  if (k == 0) throw InputError("edge list: graph needs at least one arm");
  return FeedbackGraph::from_edges(k, edges);
}

FeedbackGraph read_edge_file(const std::string& path, std::optional<std::size_t> num_arms) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open edge list '" + path + "'");
  std::vector<Edge> edges;
  std::optional<std::size_t> declared;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    if (body.starts_with("arms")) {
      declared = parse_number<std::size_t>(body.substr(4), "arm count");
      continue;
    }
    for (auto token : split(body, ',')) {
      if (!trim(token).empty()) edges.push_back(parse_pair(token));
    }
  }
  return build_edge_list(std::move(edges), declared, num_arms);
}

}  // namespace

FeedbackGraph graph_from_edge_strings(std::span<const std::string> pairs,
                                      std::optional<std::size_t> num_arms) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& p : pairs) edges.push_back(parse_pair(p));
  return build_edge_list(std::move(edges), std::nullopt, num_arms);
}

FeedbackGraph parse_graph_spec(std::string_view spec, std::optional<std::size_t> num_arms) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("graph spec '" + std::string(spec) + "' must look like name:params");
  }
  const auto name = spec.substr(0, colon);
  const auto params = spec.substr(colon + 1);

  FeedbackGraph g;
  if (name == "file") {
    return read_edge_file(std::string(trim(params)), num_arms);
  } else if (name == "complete") {
    g = generators::complete(parse_number<std::size_t>(params, "arm count"));
  } else if (name == "edgeless") {
    g = generators::edgeless(parse_number<std::size_t>(params, "arm count"));
  } else if (name == "cycle") {
    g = generators::cycle(parse_number<std::size_t>(params, "arm count"));
  } else if (name == "star") {
    g = generators::star(parse_number<std::size_t>(params, "arm count"));
  } else if (name == "cliques") {
    std::vector<std::size_t> sizes;
    for (auto part : split(params, ',')) sizes.push_back(parse_number<std::size_t>(part, "clique size"));
    g = generators::disjoint_cliques(sizes);
  } else if (name == "er") {
    const auto parts = split(params, ',');
    if (parts.size() != 3) throw InputError("graph spec er:K,p,seed needs three parameters");
    g = generators::erdos_renyi(parse_number<std::size_t>(parts[0], "arm count"),
                                parse_number<double>(parts[1], "edge probability"),
                                parse_number<std::uint64_t>(parts[2], "seed"));
  } else {
    throw InputError("unknown graph generator '" + std::string(name) + "'");
  }
  if (num_arms && g.num_arms() != *num_arms) {
    throw InputError("graph spec '" + std::string(spec) + "' has " + std::to_string(g.num_arms()) +
                     " arms, expected " + std::to_string(*num_arms));
  }
  return g;
}

}  // namespace fgb
