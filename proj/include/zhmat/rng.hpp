#pragma once

#include <cstdint>
#include <random>

namespace zhmat {

/// Seeded generator used by every randomized routine. std::mt19937_64 has a
/// fully specified output sequence, and `below` uses rejection sampling
/// instead of std::uniform_int_distribution, so a seed gives the same stream
/// on every standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

} // namespace zhmat
