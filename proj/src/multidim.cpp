#include "bohr/multidim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bohr/core_radius.hpp"

namespace bohr {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void require_hilbert(const BohrParams& params, int n) {
  if (params.q() < 2.0) {
    throw UnsupportedExponent(
        "Hilbert-space radius needs q >= 2; for q < 2 the radius of an "
        "infinite-dimensional Hilbert space vanishes");
  }
  require(n >= 1, "dimension n must be positive");
}

// (1 - x)^{-n} - 1 for 0 <= x < 1
double inv_pow_minus_one(double x, int n) { return std::expm1(-n * std::log1p(-x)); }

}  // namespace

double hilbert_transform(double s, int n) {
  require(s >= 0.0 && s < 1.0, "hilbert_transform: s must lie in [0,1)");
  require(n >= 1, "hilbert_transform: n must be positive");
  return std::sqrt(-std::expm1(std::log1p(-s * s) / n));
}

HilbertRadius hilbert_radius(const BohrParams& params, int n) {
  require_hilbert(params, n);
  // the transform is increasing, so it shares its minimiser with S
  const auto inf = inf_S(params);
  return {hilbert_transform(inf.value, n), inf.argmin.a};
}

HilbertExtremal hilbert_extremal(const BohrParams& params, int n) {
  const auto hr = hilbert_radius(params, n);
  const double b3 = hr.argmin_a;
  const double scale =
      (1.0 - b3) * (1.0 + b3) / std::pow(-std::expm1(params.p() * std::log(b3)), 1.0 / params.q());
  return {b3, hr.value, scale, n};
}

double HilbertExtremal::boundary_norm() const {
  return b3 * b3 + scale_c * scale_c * inv_pow_minus_one(r3 * r3, n);
}

double HilbertExtremal::bohr_sum(const BohrParams& params) const {
  return std::pow(b3, params.p()) +
         std::pow(scale_c * inv_pow_minus_one(r3 * r3, n), params.q());
}

double polydisk_lower(double scalar_radius, int n) {
  require(scalar_radius > 0.0 && scalar_radius <= 1.0, "polydisk_lower: R must lie in (0,1]");
  require(n >= 1, "polydisk_lower: n must be positive");
  return -scalar_radius * std::expm1(-std::numbers::ln2 / n);
}

double finite_dim_asymptotic(int n) {
  require(n >= 2, "finite_dim_asymptotic: n must be at least 2");
  return std::sqrt(std::log(static_cast<double>(n)) / n);
}

double pbohr_scalar_lower(double p, double r1n) {
  require(p > 1.0 && p < 2.0, "pbohr_scalar_lower: p must lie in (1,2)");
  require(r1n > 0.0 && r1n <= 1.0, "pbohr_scalar_lower: r1n must lie in (0,1]");
  return std::pow(r1n, (2.0 - p) / p);
}

PLConvexityConstant::PLConvexityConstant(double p_, double ip_) : p(p_), ip(ip_) {
  require(std::isfinite(p_) && p_ >= 2.0, "PL-convexity exponent must be >= 2");
  require(std::isfinite(ip_) && ip_ > 0.0, "PL-convexity constant must be positive");
}

double pbohr_vector_lower(const PLConvexityConstant& c) {
  return std::pow(c.ip / (std::exp2(c.p) + c.ip), 2.0 / c.p);
}

double hpn_exact(double p) {
  if (!(p >= 2.0)) {
    throw UnsupportedExponent("hpn_exact needs p >= 2; use hpn_lower_combine for 1 < p < 2");
  }
  require(std::isfinite(p), "hpn_exact: p must be finite");
  const double t = std::exp2(p);
  return std::pow((t - 1.0) / (2.0 * t - 1.0), 1.0 / p);
}

double hpn_lower_combine(double p, double h1, double h2) {
  require(p > 1.0 && p < 2.0, "hpn_lower_combine: p must lie in (1,2)");
  require(h1 > 0.0 && h1 <= 1.0, "hpn_lower_combine: h1 must lie in (0,1]");
  require(h2 > 0.0 && h2 <= 1.0, "hpn_lower_combine: h2 must lie in (0,1]");
  return std::pow(h1, (2.0 - p) / p) * std::pow(h2, (2.0 * p - 2.0) / p);
}

OmegaSamples::OmegaSamples(std::vector<OmegaSample> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw InvalidSamples("omega samples must be nonempty");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& s = pairs_[i];
    if (!std::isfinite(s.delta) || !std::isfinite(s.omega) || s.delta < 0.0 || s.omega < 0.0) {
      throw InvalidSamples("omega samples must be finite and nonnegative");
    }
    if (i > 0 && !(s.delta > pairs_[i - 1].delta)) {
      throw InvalidSamples("omega sample deltas must be strictly increasing");
    }
  }
}

OmegaCheck omega_condition_check(const BohrParams& params, const OmegaSamples& samples) {
  const double p = params.p(), q = params.q();
  struct Ratio {
    double delta;
    double value;
  };
  std::vector<Ratio> ratios;
  double c_est = 0.0;
  for (const auto& s : samples.pairs()) {
    if (s.delta == 0.0) {
      if (s.omega > 0.0) {
        throw InvalidSamples("omega(0) > 0: no finite constant can satisfy the condition");
      }
      continue;
    }
    const double base = std::log1p(s.delta);
    // (1+d)^q - (1+d)^{q-p} = (1+d)^q (1 - (1+d)^{-p})
    const double denom = std::exp(q * base) * -std::expm1(-p * base);
    const double ratio = s.omega / std::pow(denom, 1.0 / q);
    ratios.push_back({s.delta, ratio});
    c_est = std::max(c_est, ratio);
  }

  double slope = 0.0;
  if (ratios.size() >= 2 && ratios[0].value > 0.0 && ratios[1].value > 0.0) {
    slope = std::log(ratios[0].value / ratios[1].value) /
            std::log(ratios[1].delta / ratios[0].delta);
  }
  if (slope > kOmegaDivergenceSlope) {
    return {false, std::numeric_limits<double>::infinity(), slope};
  }
  return {true, c_est, slope};
}

double frechet_lower(double radius) {
  require(radius > 0.0 && radius <= 1.0, "frechet_lower: R must lie in (0,1]");
  return radius / (2.0 * std::numbers::e);
}

}  // namespace bohr
