#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fgb {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected feedback graph over arms {0, ..., K-1}. Every vertex carries a
/// self-loop, so the neighborhood of an arm always contains the arm itself.
/// Immutable once built.
class FeedbackGraph {
 public:
  FeedbackGraph() = default;

  /// Builds a graph from undirected pairs. Self-loops and duplicate pairs in
  /// `edges` are accepted and folded in; ids >= num_arms throw InputError.
  static FeedbackGraph from_edges(std::size_t num_arms, std::span<const Edge> edges);

  std::size_t num_arms() const noexcept { return adjacency_.size(); }

  /// Sorted closed neighborhood of `a` (contains `a`).
  std::span<const Vertex> neighborhood(Vertex a) const;

  /// True when a != b and {a, b} is an edge.
  bool adjacent(Vertex a, Vertex b) const;

  /// Degree not counting the self-loop.
  std::size_t degree(Vertex a) const { return neighborhood(a).size() - 1; }

  /// Number of undirected edges, self-loops excluded.
  std::size_t num_edges() const;

  /// Undirected edges (a < b), lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const FeedbackGraph&) const = default;

 private:
  explicit FeedbackGraph(std::vector<std::vector<Vertex>> adjacency)
      : adjacency_(std::move(adjacency)) {}

  std::vector<std::vector<Vertex>> adjacency_;
};

struct InducedSubgraph {
  FeedbackGraph graph;
  /// original_ids[new_id] is the vertex id in the parent graph.
  std::vector<Vertex> original_ids;
};

/// Subgraph induced by `subset`. New ids follow ascending original id.
/// Duplicate or out-of-range ids throw InputError.
InducedSubgraph induced_subgraph(const FeedbackGraph& g, std::span<const Vertex> subset);

struct IndependentSetResult {
  std::vector<Vertex> vertices;  // ascending
  double value = 0.0;
  bool exact = true;
};

struct MisOptions {
  /// Largest vertex count solved exactly. At most 64.
  std::size_t exact_limit = 30;
  /// Above the exact limit, fall back to a greedy set marked `exact = false`
  /// instead of throwing CapabilityError.
  bool allow_approximate = false;
};

/// Maximum-weight independent set (self-loops ignored). Empty `weights`
/// means unit weights, so `value` is the cardinality.
///
/// Exact search is branch and bound on a maximum-degree vertex with a
/// remaining-weight bound. Among optimal sets the result is the one whose
/// smallest differing vertex is included, i.e. the lexicographically first
/// when sets are compared as indicator vectors over ascending ids.
IndependentSetResult max_independent_set(const FeedbackGraph& g,
                                         std::span<const double> weights = {},
                                         const MisOptions& options = {});

/// Exact independence number; throws CapabilityError beyond the exact limit.
std::size_t independence_number(const FeedbackGraph& g, const MisOptions& options = {});

/// True when no two distinct members of `vertices` are adjacent.
bool is_independent(const FeedbackGraph& g, std::span<const Vertex> vertices);

namespace generators {

FeedbackGraph complete(std::size_t k);
FeedbackGraph edgeless(std::size_t k);
FeedbackGraph cycle(std::size_t k);
/// Vertex 0 is the center.
FeedbackGraph star(std::size_t k);
/// Cliques laid out on consecutive ids in the order given.
FeedbackGraph disjoint_cliques(std::span<const std::size_t> sizes);
/// Each unordered pair included independently with probability p.
FeedbackGraph erdos_renyi(std::size_t k, double p, std::uint64_t seed);

}  // namespace generators

/// Parses the graph mini-language:
///   complete:K  edgeless:K  cycle:K  star:K  cliques:a,b,c  er:K,p,seed
///   file:<path>  (edge list, one "a-b" pair per line, '#' comments,
///                 optional "arms N" line)
/// When `num_arms` is given the result must have exactly that many vertices
/// (an edge list is padded up to it).
FeedbackGraph parse_graph_spec(std::string_view spec, std::optional<std::size_t> num_arms = {});

/// Edge-list literal: pairs "a-b". Vertex count is `num_arms` when given,
/// otherwise one past the largest id.
FeedbackGraph graph_from_edge_strings(std::span<const std::string> pairs,
                                      std::optional<std::size_t> num_arms = {});

}  // namespace fgb
