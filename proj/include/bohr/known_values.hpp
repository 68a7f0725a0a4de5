#pragma once

#include <string>
#include <vector>

namespace bohr {

/// A closed-form radius value and what the library computes for it.
struct KnownValue {
  std::string label;
  double expected;
  double computed;
  std::string source;
};

/// Classical and closed-form generalized Bohr radii:
/// R_{1,1}(C) = 1/3, R_{p,1}(C) = p/(2+p) on [1,2], R_{p,q}(C) = 1/sqrt 2 on
/// several points of the region p, q >= 2 (and p = 2), and
/// H^n_2 = sqrt(3/7).
std::vector<KnownValue> known_values();

inline constexpr double kKnownValueTol = 1e-9;

}  // namespace bohr
