#pragma once

// Seeded, platform-independent sampling of Schur and Caratheodory functions.
//
// Streams come from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Reals are formed from the top 53 bits of each draw (the
// standard distributions are implementation-defined and are not used).
// Per-sample seeds are derived with the SplitMix64 finaliser:
//   split_seed(seed, i) = mix64(seed + (i + 1) * 0x9E3779B97F4A7C15).

#include <cstdint>
#include <random>

#include "bohr/families.hpp"

namespace bohr {

std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform();
  // Uniform integer in [0, n), n >= 1.
  // uniform in [0, n) for 1 <= n <= 2^32
  std::uint64_t below(std::uint64_t n);
  // Uniform point in the closed disk of the given radius.
  Complex in_disk(double radius);
  Complex unimodular();

 private:
  std::mt19937_64 engine_;
};

inline constexpr double kSampleZeroRadius = 0.95;

/// Blaschke product of degree 1..max_degree with zeros uniform in the disk of
/// radius 0.95 and a uniform unimodular phase.
Blaschke sample_schur(std::uint64_t seed, int max_degree);

/// (1 + z B) / (1 - z B) for B = sample_schur(seed, max_degree).
Herglotz sample_caratheodory(std::uint64_t seed, int max_degree);

}  // namespace bohr
