#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace dynres {

// Seedable deterministic random stream. All randomness in the library flows
// through explicitly injected streams, so a (seed, input) pair replays to
// identical results. Variates are derived from raw mt19937_64 output rather
// than <random> distributions, whose sequences vary across standard library
// implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed = 0) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). Unbiased multiply-shift rejection (n >= 1).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Lemire's method: rejection on the low product half.
    std::uint64_t x = gen_();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = gen_();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Independent child stream; advances this stream once.
  RandomStream fork() { return RandomStream(gen_()); }

 private:
  std::mt19937_64 gen_;
};

// Number of failures before the first success of a Bernoulli(1/d) sequence,
// by closed-form inverse transform. Exact for the geometric law; used to
// skip occurrences during insertion rejection sampling.
inline std::uint64_t geometric_skip(std::uint64_t d, RandomStream& rng) {
  if (d <= 1) return 0;
  double x = rng.uniform();
  double k = std::floor(std::log1p(-x) / std::log1p(-1.0 / static_cast<double>(d)));
  if (!(k >= 0.0)) return 0;
  if (k >= 9.0e18) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(k);
}

}  // namespace dynres
