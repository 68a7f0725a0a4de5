#pragma once

// Generalized Bohr radius R_{p,q}(C) of the unit disk.
//
// For every Schur function f = sum a_n z^n the coefficient sum is controlled
// by two comparison curves in the modulus a = |a_0|:
//
//   A_{p,q}(a) = (1-a^p)^{1/q} / (1 - a^2 + a (1-a^p)^{1/q})
//   S_{p,q}(a) = sqrt((1-a^p)^{2/q} / (1 - a^2 + (1-a^p)^{2/q}))
//
// which meet at the root a_hat of x^p + x^q = 1 with common value a_hat.
// radius_scalar() dispatches over the exponent regions to an exact value or
// a certified enclosure [inf S, 1/sqrt 2].

#include <optional>
#include <string>

#include "bohr/params.hpp"

namespace bohr {

struct HatRoot {
  double a_hat;
  double residual;  // |a_hat^p + a_hat^q - 1|
};

enum class CaseTag {
  PQ_le2,
  Pgt2_Qle2,
  PQ_ge2,
  Ple2_Qgt2_exact,
  Ple2_Qgt2_interval,
};

std::string to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(const std::string& s);

/// Location of an infimum: absent, an interior point, or the limit a -> 1-.
struct Argmin {
  enum class Kind { None, Point, Boundary };
  Kind kind = Kind::None;
  double a = 0.0;

  static Argmin none() { return {}; }
  static Argmin point(double a) { return {Kind::Point, a}; }
  static Argmin boundary() { return {Kind::Boundary, 1.0}; }
};

/// Fixed numerical tolerances; copied into every result for provenance.
struct Tolerances {
  static constexpr double root_abs = 1e-14;
  static constexpr int root_max_iter = 200;
  static constexpr double scan_right_gap = 1e-9;
  static constexpr int scan_points = 2048;
  static constexpr double golden_arg = 1e-12;
  static constexpr double condition_slack = 1e-12;
  static constexpr double boundary_report = 1e-6;
};

struct InfResult {
  double value;
  Argmin argmin;
};

class RadiusResult {
 public:
  enum class Kind { Exact, Interval };

  static RadiusResult exact(double value, CaseTag tag, Argmin argmin = {});
  static RadiusResult interval(double lo, double hi, CaseTag tag, Argmin argmin = {});

  Kind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ == Kind::Exact; }
  // Exact value; throws std::logic_error on an interval.
  double value() const;
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  CaseTag case_tag() const noexcept { return tag_; }
  const Argmin& argmin() const noexcept { return argmin_; }
  Tolerances tolerances() const noexcept { return {}; }

 private:
  RadiusResult(Kind kind, double lo, double hi, CaseTag tag, Argmin argmin)
      : kind_(kind), lo_(lo), hi_(hi), tag_(tag), argmin_(argmin) {}

  Kind kind_;
  double lo_;
  double hi_;
  CaseTag tag_;
  Argmin argmin_;
};

HatRoot hat_root(const BohrParams& params);

double eval_A(const BohrParams& params, double a);
double eval_S(const BohrParams& params, double a);

struct ConditionCheck {
  bool holds;
  double lhs;
  double rhs;
};

/// q a^2 + p a^{p+2} <= p a^p + q a^{p+2} at a = a_hat; equality within
/// Tolerances::condition_slack counts as satisfied.
ConditionCheck exactness_condition(const BohrParams& params);

/// inf of A over [a_hat, 1), including the analytic limit at a -> 1-.
InfResult inf_A(const BohrParams& params);

/// inf of S over [0, 1).
InfResult inf_S(const BohrParams& params);

/// Value of A_{p,q}(a) as a -> 1-: p/(2+p) for q = 1, else 1.
double A_boundary_limit(const BohrParams& params);

RadiusResult radius_scalar(const BohrParams& params);

/// Evaluates one named branch of the case analysis regardless of which
/// branch radius_scalar would pick. Throws UnsupportedExponent when (p, q)
/// lies outside the branch's region.
RadiusResult radius_scalar_branch(const BohrParams& params, CaseTag branch);

}  // namespace bohr
