#include <doctest.h>

#include <random>
#include <vector>

#include "fgb/env.hpp"
#include "fgb/error.hpp"

using namespace fgb;

TEST_CASE("gap examples") {
  SUBCASE("distinct best arm") {
    const auto p = gaps(BanditInstance({0.9, 0.5, 0.5}, generators::edgeless(3)));
    CHECK(p.gaps[0] == 0.0);
    CHECK(p.gaps[1] == doctest::Approx(0.4));
    CHECK(p.gaps[2] == doctest::Approx(0.4));
    REQUIRE(p.delta_min);
    CHECK(*p.delta_min == doctest::Approx(0.4));
    CHECK(p.optimal_arms == std::vector<Vertex>{0});
  }
  SUBCASE("all equal") {
    const auto p = gaps(BanditInstance({0.3, 0.3}, generators::edgeless(2)));
    CHECK(p.gaps == std::vector<double>{0.0, 0.0});
    CHECK_FALSE(p.delta_min);
    CHECK(p.optimal_arms == std::vector<Vertex>{0, 1});
  }
  SUBCASE("small gap") {
    const auto p = gaps(BanditInstance({0.9, 0.875, 0.6}, generators::edgeless(3)));
    CHECK(p.gaps[1] == doctest::Approx(0.025));
    CHECK(p.gaps[2] == doctest::Approx(0.3));
    CHECK(*p.delta_min == doctest::Approx(0.025));
  }
  SUBCASE("best arm need not come first") {
    const auto p = gaps(BanditInstance({0.2, 0.7, 0.5}, generators::edgeless(3)));
    CHECK(p.optimal_arms == std::vector<Vertex>{1});
    CHECK(p.gaps[0] == doctest::Approx(0.5));
  }
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(BanditInstance({0.5, 1.2}, generators::edgeless(2)), InputError);
  CHECK_THROWS_AS(BanditInstance({0.5, 0.2}, generators::edgeless(3)), InputError);
  CHECK_THROWS_AS(BanditInstance({}, FeedbackGraph{}), InputError);
  CHECK_THROWS_AS(parse_reward_family("gaussian"), CapabilityError);
  CHECK(parse_reward_family("bernoulli") == RewardFamily::bernoulli);
}

TEST_CASE("shifting all means leaves gaps unchanged") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> mu(1 + i % 8);
    for (auto& m : mu) m = 0.5 * unit(rng);
    const double shift = 0.5 * unit(rng);
    std::vector<double> shifted = mu;
    for (auto& m : shifted) m += shift;
    const auto a = gaps(BanditInstance(mu, generators::edgeless(mu.size())));
    const auto b = gaps(BanditInstance(shifted, generators::edgeless(mu.size())));
    for (std::size_t k = 0; k < mu.size(); ++k) CHECK(b.gaps[k] == doctest::Approx(a.gaps[k]).epsilon(1e-12));
  }
}

TEST_CASE("sample_round") {
  SUBCASE("degenerate probabilities") {
    const BanditInstance inst({1.0, 0.0}, generators::edgeless(2));
    Stream s(1);
    for (int i = 0; i < 1000; ++i) CHECK(sample_round(inst, s) == std::vector<double>{1.0, 0.0});
  }
  SUBCASE("fair coins") {
    // Binomial CI: sd of the mean over 1e5 draws is 0.0016, so 0.01 is > 6 sd.
    const BanditInstance inst({0.5, 0.5, 0.5}, generators::edgeless(3));
    Stream s(99);
    std::vector<double> sum(3, 0.0);
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const auto x = sample_round(inst, s);
      for (int a = 0; a < 3; ++a) sum[a] += x[a];
    }
    for (double total : sum) CHECK(std::abs(total / n - 0.5) < 0.01);
  }
  SUBCASE("deterministic given stream position") {
    const BanditInstance inst({0.3, 0.6, 0.9, 0.1}, generators::edgeless(4));
    Stream a(7, 3);
    Stream b(7, 3);
    for (int i = 0; i < 100; ++i) CHECK(sample_round(inst, a) == sample_round(inst, b));
  }
}

TEST_CASE("observe examples") {
  const std::vector<double> rewards{1.0, 0.0, 1.0, 1.0, 0.0};
  SUBCASE("complete graph reveals everything") {
    const BanditInstance inst(std::vector<double>(5, 0.5), generators::complete(5));
    const auto obs = observe(inst, rewards, 3);
    CHECK(obs.size() == 5);
    for (const auto& o : obs) CHECK(o.reward == rewards[o.arm]);
  }
  SUBCASE("edgeless graph is bandit feedback") {
    const BanditInstance inst(std::vector<double>(5, 0.5), generators::edgeless(5));
    CHECK(observe(inst, rewards, 2) == std::vector<Observation>{{2, 1.0}});
  }
  SUBCASE("cycle") {
    const BanditInstance inst(std::vector<double>(5, 0.5), generators::cycle(5));
    CHECK(observe(inst, rewards, 0) == std::vector<Observation>{{0, 1.0}, {1, 0.0}, {4, 0.0}});
  }
  SUBCASE("cardinality equals neighborhood size") {
    const BanditInstance inst(std::vector<double>(5, 0.5), generators::erdos_renyi(5, 0.5, 3));
    for (Vertex a = 0; a < 5; ++a) CHECK(observe(inst, rewards, a).size() == inst.graph().neighborhood(a).size());
  }
  SUBCASE("out of range") {
    const BanditInstance inst(std::vector<double>(5, 0.5), generators::cycle(5));
    CHECK_THROWS_AS(observe(inst, rewards, 5), InputError);
  }
}
