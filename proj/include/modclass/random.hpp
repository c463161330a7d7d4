#pragma once

#include <cstdint>
#include <random>

namespace modclass {

// Every randomized routine takes its own generator; nothing shares PRNG state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  /// Deterministic child stream, e.g. one per parallel task.
  Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0xbf58476d1ce4e5b9ULL)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace modclass
