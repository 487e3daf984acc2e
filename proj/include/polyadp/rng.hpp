#pragma once

#include <cstdint>

namespace polyadp {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, step, component), so parallel consumers and replays see
/// identical values regardless of scheduling.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// Uniform in (0, 1).
  double uniform(std::uint64_t stream, std::uint64_t step,
                 std::uint64_t component) const;

  /// Standard normal via Box-Muller on two keyed uniforms.
  double normal(std::uint64_t stream, std::uint64_t step,
                std::uint64_t component) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t bits(std::uint64_t stream, std::uint64_t step,
                     std::uint64_t component, std::uint64_t salt) const;
  std::uint64_t seed_;
};

}  // namespace polyadp
