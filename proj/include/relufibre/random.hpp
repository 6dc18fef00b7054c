#pragma once

#include <cstdint>
#include <random>

namespace relufibre {

/// Seeded generator with platform-independent draws. std::mt19937_64's output
/// sequence is fixed by the standard; the distributions are not, so bounded
/// draws are done here by reduction.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  bool coin() { return (engine_() >> 17 & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace relufibre
