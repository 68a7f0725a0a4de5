#include "bohr/sampling.hpp"

#include <cmath>
#include <numbers>

namespace bohr {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

double SampleStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t SampleStream::below(std::uint64_t n) {
  if (n == 0 || n > 0xFFFFFFFFULL) throw DomainError("below: n must lie in [1, 2^32]");
  // multiply-shift on the top 32 bits
  return ((engine_() >> 32) * n) >> 32;
}

Complex SampleStream::in_disk(double radius) {
  const double rho = radius * std::sqrt(uniform());
  return std::polar(rho, 2.0 * std::numbers::pi * uniform());
}

Complex SampleStream::unimodular() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

Blaschke sample_schur(std::uint64_t seed, int max_degree) {
  if (max_degree < 1) throw DomainError("sample_schur: max_degree must be at least 1");
  SampleStream stream(seed);
  const int degree = 1 + static_cast<int>(stream.below(static_cast<std::uint64_t>(max_degree)));
  Blaschke b;
  b.zeros.reserve(degree);
  for (int i = 0; i < degree; ++i) b.zeros.push_back(stream.in_disk(kSampleZeroRadius));
  b.phase = stream.unimodular();
  return b;
}

Herglotz sample_caratheodory(std::uint64_t seed, int max_degree) {
  Blaschke b = sample_schur(seed, max_degree);
  return Herglotz{std::move(b.zeros), b.phase};
}

}  // namespace bohr
