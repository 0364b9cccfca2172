#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace greenaug {

// Seeded generator whose output stream is identical on every platform:
// the mt19937_64 sequence is fixed by the standard, and bounded draws use
// our own rejection sampling rather than std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::size_t uniform_index(std::size_t bound) {
    const auto n = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return static_cast<std::size_t>(x % n);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace greenaug
