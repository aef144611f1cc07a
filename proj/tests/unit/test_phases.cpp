#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "fgb/error.hpp"
#include "fgb/phases.hpp"
#include "../support/oracles.hpp"

using namespace fgb;
using V = std::vector<Vertex>;

TEST_CASE("phase_of examples") {
  CHECK(phase_of(1.0) == 1);
  CHECK(phase_of(0.5) == 2);
  CHECK(phase_of(0.3) == 2);
  CHECK(phase_of(0.25) == 3);
  CHECK(phase_of(0.2500000001) == 2);
  CHECK(phase_of(std::nextafter(0.5, 1.0)) == 1);
  CHECK(phase_of(std::numeric_limits<double>::denorm_min()) == 1075);
  CHECK_THROWS_AS(phase_of(0.0), InputError);
  CHECK_THROWS_AS(phase_of(1.5), InputError);
}

TEST_CASE("phase_of agrees with the interval definition") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double g = std::max(unit(rng) * std::pow(2.0, -(i % 20)), 1e-300);
    const int phi = phase_of(g);
    REQUIRE(std::ldexp(1.0, -phi) < g);
    REQUIRE(g <= std::ldexp(1.0, -phi + 1));
  }
}

TEST_CASE("phi_max examples") {
  CHECK(phi_max(1000000, 0.3) == 2);
  CHECK(phi_max(2, 0.001) == 0);
  CHECK(phi_max(1000000, 1.0) == 1);
  CHECK(phi_max(1000000, 1e-9) == 13);
  CHECK_FALSE(phi_max(100, std::nullopt));
}

TEST_CASE("decompose examples") {
  SUBCASE("complete K=3") {
    const BanditInstance inst({0.9, 0.5, 0.2}, generators::complete(3));
    const auto d = decompose(inst, 1000000);
    REQUIRE(d.phases.size() == 2);
    CHECK(d.phase(1).arms == V{2});
    CHECK(d.phase(1).max_independent == 1);
    CHECK(d.phase(2).arms == V{1});
    CHECK(d.phase(2).max_independent == 1);
    CHECK(d.m == 2);
    CHECK(d.alpha == 1);
    CHECK(d.j1 == 0);
    CHECK(d.j2 == 0);
    CHECK(d.lemma_sum == 6);
    CHECK(d.max_term() == 4);
  }
  SUBCASE("edgeless K=4") {
    const BanditInstance inst({0.9, 0.6, 0.6, 0.6}, generators::edgeless(4));
    const auto d = decompose(inst, 1000000);
    CHECK(d.phase(2).arms == V{1, 2, 3});
    CHECK(d.phase(2).max_independent == 3);
    CHECK(d.phase(1).max_independent == 0);
    CHECK(d.m == 2);
    CHECK(d.alpha == 4);
    CHECK(d.j1 == 1);
    CHECK(d.j2 == 1);
  }
  SUBCASE("all means equal") {
    const BanditInstance inst({0.4, 0.4, 0.4}, generators::cycle(3));
    const auto d = decompose(inst, 1000);
    CHECK(d.empty());
    CHECK(d.lemma_sum == 0);
    CHECK(d.max_term() == 0);
  }
  SUBCASE("arms beyond phi_max are dropped") {
    // ln(100) = 4.6, so phi_max = 4 and the gap of 0.01 (phase 7) is excluded.
    const BanditInstance inst({0.9, 0.89, 0.5}, generators::edgeless(3));
    const auto d = decompose(inst, 100);
    CHECK(d.phi_max == 4);
    CHECK(d.phases.size() == 4);
    CHECK(d.phase(2).arms == V{2});
    CHECK(d.lemma_sum == 4);
  }
}

TEST_CASE("start_quantity examples") {
  SUBCASE("single suboptimal arm") {
    const BanditInstance inst({0.9, 0.5}, generators::edgeless(2));
    const auto q = start_quantity(inst, 1000000, 10.0);
    CHECK(q.lhs == doctest::Approx(64.0));
    CHECK(q.intermediate == doctest::Approx(80.0));
  }
  SUBCASE("empty decomposition") {
    const BanditInstance inst({0.5, 0.5}, generators::edgeless(2));
    const auto q = start_quantity(inst, 1000, 10.0);
    CHECK(q.lhs == 0.0);
    CHECK(q.intermediate == 0.0);
  }
  SUBCASE("gaps at the upper phase boundary are tight") {
    const BanditInstance inst({1.0, 0.5, 0.75, 0.75, 0.0}, generators::edgeless(5));
    const auto q = start_quantity(inst, 1000000, 3.0);
    CHECK(q.lhs == doctest::Approx(q.intermediate).epsilon(1e-15));
  }
}

TEST_CASE("decomposition invariants on random instances") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % 12);
    const double p = 0.1 + 0.8 * unit(rng);
    const auto g = generators::erdos_renyi(k, p, rng());
    std::vector<double> mu(k);
    for (auto& m : mu) m = unit(rng);
    const BanditInstance inst(mu, g);
    const std::uint64_t horizon = 1 + rng() % 10000000;
    const auto d = decompose(inst, horizon);
    const auto profile = gaps(inst);

    CHECK(d.alpha == static_cast<std::size_t>(testing::brute_force_mis(g).value));
    std::vector<int> seen(k, 0);
    std::uint64_t sum = 0, best = 0;
    for (const auto& ph : d.phases) {
      for (Vertex a : ph.arms) {
        ++seen[a];
        REQUIRE(std::ldexp(1.0, -ph.phi) < profile.gaps[a]);
        REQUIRE(profile.gaps[a] <= std::ldexp(1.0, -ph.phi + 1));
      }
      const auto sub = induced_subgraph(g, ph.arms);
      REQUIRE(ph.max_independent == static_cast<std::size_t>(testing::brute_force_mis(sub.graph).value));
      REQUIRE(ph.max_independent <= d.alpha);
      REQUIRE(ph.witness.size() == ph.max_independent);
      REQUIRE(is_independent(g, ph.witness));
      sum += ph.weight();
      best = std::max(best, ph.weight());
    }
    for (Vertex a = 0; a < k; ++a) {
      const bool expected = profile.gaps[a] > 0 && d.phi_max >= 1 && phase_of(profile.gaps[a]) <= d.phi_max;
      REQUIRE(seen[a] == (expected ? 1 : 0));
    }
    CHECK(d.lemma_sum == sum);
    CHECK(d.max_term() == best);
    if (!d.empty()) {
      CHECK(d.phase(*d.m).weight() == best);
      for (int phi = 1; phi < *d.m; ++phi) CHECK(d.phase(phi).weight() < best);
      CHECK(d.j1 >= 0);
      CHECK(std::ldexp(1.0, d.j1) <= static_cast<double>(d.alpha));
      CHECK(d.j2 >= 0);
      const auto km = d.phase(*d.m).max_independent;
      CHECK((km << d.j2) >= d.alpha);
      if (d.j2 > 0) CHECK((km << (d.j2 - 1)) < d.alpha);
    }
    const double capital_l = 1.0 + 50.0 * unit(rng);
    const auto q = start_quantity(inst, horizon, capital_l);
    CHECK(q.lhs <= q.intermediate * (1 + 1e-12));
    CHECK(q.intermediate == doctest::Approx(2.0 * capital_l * static_cast<double>(d.lemma_sum)));
  }
}
