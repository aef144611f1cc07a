#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include "fgb/error.hpp"
#include "fgb/graph.hpp"
#include "../support/oracles.hpp"

using namespace fgb;
using V = std::vector<Vertex>;

namespace {

V to_vec(std::span<const Vertex> s) { return V(s.begin(), s.end()); }

void check_invariants(const FeedbackGraph& g) {
  for (Vertex a = 0; a < g.num_arms(); ++a) {
    const auto nb = g.neighborhood(a);
    REQUIRE(std::binary_search(nb.begin(), nb.end(), a));
    for (Vertex b : nb) {
      REQUIRE(b < g.num_arms());
      const auto back = g.neighborhood(b);
      REQUIRE(std::binary_search(back.begin(), back.end(), a));
    }
  }
}

FeedbackGraph random_graph(std::mt19937_64& rng, std::size_t k, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return FeedbackGraph::from_edges(k, edges);
}

}  // namespace

TEST_CASE("neighborhood examples") {
  CHECK(to_vec(generators::complete(3).neighborhood(0)) == V{0, 1, 2});
  CHECK(to_vec(generators::edgeless(4).neighborhood(1)) == V{1});
  CHECK(to_vec(generators::cycle(5).neighborhood(2)) == V{1, 2, 3});
  CHECK_THROWS_AS(generators::cycle(5).neighborhood(5), InputError);
}

TEST_CASE("induced subgraph examples") {
  const auto c5 = generators::cycle(5);
  const V subset{0, 1, 2};
  const auto path = induced_subgraph(c5, subset);
  CHECK(path.graph.num_arms() == 3);
  CHECK(path.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(path.original_ids == V{0, 1, 2});
  check_invariants(path.graph);

  const auto empty = induced_subgraph(c5, {});
  CHECK(empty.graph.num_arms() == 0);

  const V corners{3, 0};
  const auto pair = induced_subgraph(generators::complete(4), corners);
  CHECK(pair.graph == generators::complete(2));
  CHECK(pair.original_ids == V{0, 3});

  const V dup{1, 1};
  CHECK_THROWS_AS(induced_subgraph(c5, dup), InputError);
  const V out_of_range{7};
  CHECK_THROWS_AS(induced_subgraph(c5, out_of_range), InputError);
}

TEST_CASE("max independent set examples") {
  CHECK(max_independent_set(generators::complete(5)).value == 1.0);
  CHECK(max_independent_set(generators::edgeless(5)).value == 5.0);
  CHECK(max_independent_set(generators::cycle(5)).value == 2.0);

  const std::vector<double> w{10, 1, 1, 1, 1};
  const auto weighted = max_independent_set(generators::cycle(5), w);
  CHECK(weighted.value == 11.0);
  CHECK(weighted.vertices == V{0, 2});
  CHECK(weighted.exact);

  // Exhaustive check of all 32 subsets agrees.
  CHECK(testing::brute_force_mis(generators::cycle(5)).value == 2.0);
  CHECK(testing::brute_force_mis(generators::cycle(5), w).value == 11.0);
}

TEST_CASE("independence number examples") {
  CHECK(independence_number(generators::complete(7)) == 1);
  CHECK(independence_number(generators::edgeless(7)) == 7);
  const std::vector<std::size_t> sizes{3, 4, 5};
  const auto cliques = generators::disjoint_cliques(sizes);
  CHECK(independence_number(cliques) == 3);
  CHECK(testing::brute_force_mis(cliques).value == 3.0);
}

TEST_CASE("generator examples") {
  const std::vector<std::size_t> two_pairs{2, 2};
  CHECK(independence_number(generators::disjoint_cliques(two_pairs)) == 2);
  CHECK(independence_number(generators::star(5)) == 4);
  const auto er = generators::erdos_renyi(8, 0.0, 42);
  CHECK(er.num_edges() == 0);
  CHECK(independence_number(er) == 8);
  CHECK(generators::erdos_renyi(8, 1.0, 42) == generators::complete(8));
  CHECK(generators::erdos_renyi(12, 0.4, 9) == generators::erdos_renyi(12, 0.4, 9));

  CHECK_THROWS_AS(generators::complete(0), InputError);
  CHECK_THROWS_AS(generators::edgeless(0), InputError);
  CHECK_THROWS_AS(generators::cycle(0), InputError);
  CHECK_THROWS_AS(generators::star(0), InputError);
  CHECK_THROWS_AS(generators::erdos_renyi(0, 0.5, 1), InputError);
  CHECK_THROWS_AS(generators::erdos_renyi(4, 1.5, 1), InputError);
  const std::vector<std::size_t> with_zero{2, 0};
  CHECK_THROWS_AS(generators::disjoint_cliques(with_zero), InputError);
}

TEST_CASE("generated graphs satisfy symmetry and self-loops") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t k = 1 + seed % 17;
    check_invariants(generators::complete(k));
    check_invariants(generators::edgeless(k));
    check_invariants(generators::cycle(k));
    check_invariants(generators::star(k));
    const std::vector<std::size_t> sizes{1 + seed % 3, 1 + seed % 5};
    check_invariants(generators::disjoint_cliques(sizes));
    check_invariants(generators::erdos_renyi(k, static_cast<double>(seed % 10) / 9.0, seed));
  }
}

TEST_CASE("branch and bound matches exhaustive enumeration") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> weight(0.0, 5.0);
  int checked = 0;
  for (int i = 0; i < 240; ++i) {
    const std::size_t k = 1 + static_cast<std::size_t>(i % 12);
    const double p = 0.1 * (1 + i % 9);
    const auto g = random_graph(rng, k, p);

    const auto exact = max_independent_set(g);
    const auto oracle = testing::brute_force_mis(g);
    REQUIRE(exact.value == oracle.value);
    REQUIRE(is_independent(g, exact.vertices));
    REQUIRE(exact.vertices == oracle.best_set);

    std::vector<double> w(k);
    for (auto& x : w) x = weight(rng);
    const auto wexact = max_independent_set(g, w);
    const auto woracle = testing::brute_force_mis(g, w);
    REQUIRE(wexact.value == doctest::Approx(woracle.value).epsilon(1e-12));
    REQUIRE(is_independent(g, wexact.vertices));
    double sum = 0.0;
    for (auto v : wexact.vertices) sum += w[v];
    REQUIRE(sum == doctest::Approx(wexact.value).epsilon(1e-12));
    ++checked;
  }
  CHECK(checked >= 200);
}

TEST_CASE("adding an edge never increases the independence number") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 2 + static_cast<std::size_t>(i % 11);
    const auto g = random_graph(rng, k, 0.3);
    auto edges = g.edges();
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(k - 1));
    const Vertex a = pick(rng);
    Vertex b = pick(rng);
    if (a == b) b = (b + 1) % k;
    edges.emplace_back(a, b);
    const auto denser = FeedbackGraph::from_edges(k, edges);
    CHECK(independence_number(denser) <= independence_number(g));
  }
}

TEST_CASE("induced subgraphs never have larger independence number") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + static_cast<std::size_t>(i % 12);
    const auto g = random_graph(rng, k, 0.4);
    V subset;
    for (Vertex v = 0; v < k; ++v)
      if (rng() & 1) subset.push_back(v);
    const auto sub = induced_subgraph(g, subset);
    CHECK(independence_number(sub.graph) <= independence_number(g));
  }
}

TEST_CASE("exactness limit and approximation flag") {
  const auto big = generators::cycle(40);
  CHECK_THROWS_AS(max_independent_set(big), CapabilityError);
  CHECK_THROWS_AS(independence_number(big), CapabilityError);

  MisOptions approx;
  approx.allow_approximate = true;
  const auto greedy = max_independent_set(big, {}, approx);
  CHECK_FALSE(greedy.exact);
  CHECK(is_independent(big, greedy.vertices));
  CHECK(greedy.value == static_cast<double>(greedy.vertices.size()));
  CHECK(greedy.value <= 20.0);

  MisOptions wider;
  wider.exact_limit = 40;
  CHECK(max_independent_set(big, {}, wider).value == 20.0);
  MisOptions too_wide;
  too_wide.exact_limit = 65;
  CHECK_THROWS_AS(max_independent_set(big, {}, too_wide), InputError);
}

TEST_CASE("exact search handles 30-vertex graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (double p : {0.1, 0.5, 0.9}) {
      const auto g = generators::erdos_renyi(30, p, seed);
      const auto r = max_independent_set(g);
      CHECK(r.exact);
      CHECK(is_independent(g, r.vertices));
    }
  }
}

TEST_CASE("weight validation") {
  const auto g = generators::cycle(3);
  const std::vector<double> short_w{1.0};
  CHECK_THROWS_AS(max_independent_set(g, short_w), InputError);
  const std::vector<double> negative{1.0, -1.0, 1.0};
  CHECK_THROWS_AS(max_independent_set(g, negative), InputError);
  const std::vector<double> zeros{0.0, 0.0, 0.0};
  CHECK(max_independent_set(g, zeros).value == 0.0);
}

TEST_CASE("graph spec parser") {
  CHECK(parse_graph_spec("complete:4") == generators::complete(4));
  CHECK(parse_graph_spec("edgeless:3") == generators::edgeless(3));
  CHECK(parse_graph_spec("cycle:5") == generators::cycle(5));
  CHECK(parse_graph_spec("star:6") == generators::star(6));
  const std::vector<std::size_t> sizes{5, 5};
  CHECK(parse_graph_spec("cliques:5,5") == generators::disjoint_cliques(sizes));
  CHECK(parse_graph_spec("er:9,0.3,17") == generators::erdos_renyi(9, 0.3, 17));
  CHECK_THROWS_AS(parse_graph_spec("cycle:5", 6), InputError);
  CHECK_THROWS_AS(parse_graph_spec("wheel:5"), InputError);
  CHECK_THROWS_AS(parse_graph_spec("complete:x"), InputError);
  CHECK_THROWS_AS(parse_graph_spec("complete"), InputError);
  CHECK_THROWS_AS(parse_graph_spec("er:5,0.3"), InputError);

  const std::vector<std::string> pairs{"0-1", "1-2"};
  const auto path = graph_from_edge_strings(pairs, 4);
  CHECK(path.num_arms() == 4);
  CHECK(path.num_edges() == 2);
  CHECK(graph_from_edge_strings(pairs).num_arms() == 3);
  const std::vector<std::string> bad{"0:1"};
  CHECK_THROWS_AS(graph_from_edge_strings(bad), InputError);
  CHECK_THROWS_AS(graph_from_edge_strings(pairs, 2), InputError);

  const auto path_file = std::filesystem::temp_directory_path() / "fgb_edges_test.txt";
  {
    std::ofstream out(path_file);
    out << "# five cycle\narms 5\n0-1\n1-2, 2-3\n3-4\n4-0\n";
  }
  CHECK(parse_graph_spec("file:" + path_file.string()) == generators::cycle(5));
  CHECK_THROWS_AS(parse_graph_spec("file:" + path_file.string(), 6), InputError);
  std::filesystem::remove(path_file);
  CHECK_THROWS_AS(parse_graph_spec("file:/nonexistent/edges.txt"), InputError);
}
