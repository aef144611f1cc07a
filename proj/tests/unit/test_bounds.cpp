#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fgb/bounds.hpp"
#include "fgb/error.hpp"

using namespace fgb;

TEST_CASE("capital_l examples") {
  CHECK(capital_l(100, 5, 0.01) == doctest::Approx(92.103).epsilon(1e-5));
  CHECK_THROWS_AS(capital_l(1, 1, 1.0), InputError);
  CHECK_THROWS_AS(capital_l(1, 1, 0.0), InputError);
  CHECK(capital_l(1000, 7, 1e-3) == doctest::Approx(capital_l_at_default_delta(1000, 7)).epsilon(1e-14));
  CHECK(capital_l_at_default_delta(1, 1) == doctest::Approx(8.0 * std::log(2.0)));
}

TEST_CASE("hardness examples") {
  CHECK(hardness(BanditInstance({0.9, 0.5, 0.2}, generators::complete(3))) == doctest::Approx(2.5));
  CHECK(hardness(BanditInstance({1.0, 0.5, 0.5}, generators::edgeless(3))) == doctest::Approx(4.0));
  CHECK(hardness(BanditInstance({0.5, 0.5}, generators::edgeless(2))) == 0.0);
  // Optimal arm blocks nothing: removing it lets both leaves of the star count.
  const auto h = hardness_detail(BanditInstance({0.9, 0.5, 0.5}, generators::star(3)));
  CHECK(h.value == doctest::Approx(5.0));
  CHECK(h.witness == std::vector<Vertex>{1, 2});
}

TEST_CASE("lemma rhs examples") {
  CHECK(lemma_original_rhs(92.103, 100, 2.5) == doctest::Approx(4242.3).epsilon(1e-4));
  CHECK(lemma_original_rhs(92.103, 100, 0.0) == 1.0);
  CHECK(lemma_original_rhs(92.103, 1, 2.0) == 1.0);
  CHECK(lemma_improved_rhs(5.0, 1, 2.0) == 12.0 * 5.0 * 2.0 + 1.0);
  CHECK(lemma_improved_rhs(92.103, 2, 2.5) == doctest::Approx(3685.1).epsilon(1e-4));
  CHECK(lemma_improved_rhs(10.0, 8, 1.0) == 241.0);
}

TEST_CASE("theorem and corollary examples") {
  CHECK(theorem_ucbn_bound(1000, 10, 2, 10.0) == doctest::Approx(5381).epsilon(1e-3));
  CHECK(theorem_ucbn_bound(1000, 10, 2, 0.0) == 2.0);
  CHECK(corollary_bound(10000, 10, 2) == doctest::Approx(7.41e3).epsilon(1e-3));
  CHECK(corollary_bound(1, 1, 1) == doctest::Approx(10.16).epsilon(1e-3));
  for (std::uint64_t t : {10u, 100u, 1000u}) {
    CHECK(corollary_bound(t * 10, 5, 3) >= corollary_bound(t, 5, 3));
    CHECK(corollary_bound(t, 6, 3) >= corollary_bound(t, 5, 3));
    CHECK(corollary_bound(t, 5, 4) >= corollary_bound(t, 5, 3));
  }
}

TEST_CASE("theorem against the improved lemma at delta = 1/T") {
  // The displayed theorem carries 8 ln(2KT^2) where the lemma with
  // L = 8 ln(2KT^2) carries 4L: the H terms differ by exactly 4.
  for (std::uint64_t t : {1ull, 2ull, 100ull, 10000ull, 1000000ull}) {
    for (std::size_t k : {1u, 2u, 10u, 64u}) {
      for (std::size_t alpha : {1u, 2u, 5u, 64u}) {
        if (alpha > k) continue;
        const double display_h0 = theorem_ucbn_bound(t, k, alpha, 0.0);
        CHECK(display_h0 == lemma_improved_rhs(capital_l_at_default_delta(t, k), alpha, 0.0) + 1.0);
        for (double h : {0.5, 10.0, 1234.5}) {
          const double lemma = lemma_improved_rhs(capital_l_at_default_delta(t, k), alpha, h);
          const double theorem = theorem_ucbn_bound(t, k, alpha, h);
          CHECK((lemma - 1.0) == doctest::Approx(4.0 * (theorem - 2.0)).epsilon(1e-14));
          const double direct = 8.0 * std::log(2.0 * k * static_cast<double>(t) * t) * (std::log2(alpha) + 3.0) * h + 2.0;
          CHECK(theorem == doctest::Approx(direct).epsilon(1e-13));
        }
      }
    }
  }
}

TEST_CASE("neither lemma factor dominates") {
  CHECK(lemma_improved_rhs(50.0, 2, 3.0) < lemma_original_rhs(50.0, 10000, 3.0));
  CHECK(lemma_improved_rhs(50.0, 64, 3.0) > lemma_original_rhs(50.0, 100, 3.0));
  for (std::uint64_t t = 2; t < 2000000; t *= 3)
    for (std::size_t alpha = 1; alpha <= 64; alpha *= 2) {
      const bool improved_smaller = improved_factor(alpha) < std::log(static_cast<double>(t));
      CHECK((lemma_improved_rhs(10.0, alpha, 1.0) < lemma_original_rhs(10.0, t, 1.0)) == improved_smaller);
    }
}

TEST_CASE("hardness dominates the largest single term") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 1 + rng() % 12;
    std::vector<double> mu(k);
    for (auto& m : mu) m = unit(rng);
    const BanditInstance inst(mu, generators::erdos_renyi(k, unit(rng), rng()));
    const auto profile = gaps(inst);
    double largest = 0.0, total = 0.0;
    for (double g : profile.gaps)
      if (g > 0) {
        largest = std::max(largest, 1.0 / g);
        total += 1.0 / g;
      }
    const double h = hardness(inst);
    CHECK(h >= largest * (1 - 1e-12));
    CHECK(h <= total * (1 + 1e-12));
    const auto report = compute_bounds(inst, 5000);
    CHECK(report.lemma_improved >= 0.0);
    CHECK(report.corollary_gap_independent > 0.0);
    if (improved_factor(report.alpha) <= std::log(5000.0)) CHECK(report.lemma_improved <= report.lemma_original);
  }
}

TEST_CASE("compute_bounds fields") {
  const BanditInstance inst({0.9, 0.5, 0.2}, generators::complete(3));
  const auto r = compute_bounds(inst, 100, 0.01);
  CHECK(r.alpha == 1);
  CHECK(r.delta == 0.01);
  CHECK(r.hardness == doctest::Approx(2.5));
  CHECK(r.capital_l == doctest::Approx(8 * std::log(2 * 100 * 3 / 0.01)));
  CHECK(r.theorem_ucbn == theorem_ucbn_bound(100, 3, 1, r.hardness));
  const auto d = compute_bounds(inst, 100);
  CHECK(d.delta == doctest::Approx(0.01));
}
