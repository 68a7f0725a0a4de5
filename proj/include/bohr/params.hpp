#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Argument outside the mathematical domain of a formula (a >= 1, R <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exponent combination for which no formula is available.
class UnsupportedExponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series tail that cannot be bounded below the working tolerance.
class TailUnbounded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tabulated modulus samples that cannot satisfy a growth condition.
class InvalidSamples : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent pair (p, q) of the generalized Bohr functional
///   |x0|^p + (sum_{k>=1} |x_k| r^k)^q <= 1.
/// Both exponents are finite and at least one.
class BohrParams {
 public:
  BohrParams(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  std::string to_string() const;

 private:
  double p_;
  double q_;
};

inline bool operator==(const BohrParams& a, const BohrParams& b) {
  return a.p() == b.p() && a.q() == b.q();
}

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace bohr
