#pragma once

#include <cstdint>
#include <random>

namespace fgb {

/// Single-owner pseudo-random stream. Streams are derived from a
/// (base seed, index) pair so independent runs never share state.
class Stream {
 public:
  using engine_type = std::mt19937_64;

  explicit Stream(std::uint64_t seed, std::uint64_t index = 0);

  /// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
  double uniform();

  bool bernoulli(double p) { return uniform() < p; }

  /// Beta(a, b) via two gamma draws.
  double beta(double a, double b);

  std::uint64_t next_u64() { return engine_(); }

  /// Child stream keyed by `index`; does not advance this stream.
  Stream derive(std::uint64_t index) const { return Stream(seed_, mix(index_, index)); }

  std::uint64_t seed() const noexcept { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

  std::uint64_t seed_;
  std::uint64_t index_;
  engine_type engine_;
};

}  // namespace fgb
