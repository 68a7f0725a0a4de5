#include "bohr/core_radius.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bohr/scan.hpp"

namespace bohr {

BohrParams::BohrParams(double p, double q) : p_(p), q_(q) {
  if (!std::isfinite(p) || !std::isfinite(q)) throw DomainError("exponents must be finite");
  if (p < 1.0 || q < 1.0) {
    std::ostringstream os;
    os << "exponents must satisfy p >= 1 and q >= 1 (got p=" << p << ", q=" << q << ")";
    throw DomainError(os.str());
  }
}

std::string BohrParams::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "p=" << p_ << ",q=" << q_;
  return os.str();
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::PQ_le2: return "PQ_le2";
    case CaseTag::Pgt2_Qle2: return "Pgt2_Qle2";
    case CaseTag::PQ_ge2: return "PQ_ge2";
    case CaseTag::Ple2_Qgt2_exact: return "Ple2_Qgt2_exact";
    case CaseTag::Ple2_Qgt2_interval: return "Ple2_Qgt2_interval";
  }
  return "?";
}

std::optional<CaseTag> case_tag_from_string(const std::string& s) {
  for (CaseTag t : {CaseTag::PQ_le2, CaseTag::Pgt2_Qle2, CaseTag::PQ_ge2,
                    CaseTag::Ple2_Qgt2_exact, CaseTag::Ple2_Qgt2_interval}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

RadiusResult RadiusResult::exact(double value, CaseTag tag, Argmin argmin) {
  if (!(value > 0.0 && value <= 1.0)) throw std::logic_error("exact radius outside (0,1]");
  return RadiusResult(Kind::Exact, value, value, tag, argmin);
}

RadiusResult RadiusResult::interval(double lo, double hi, CaseTag tag, Argmin argmin) {
  if (!(lo > 0.0 && lo <= hi && hi <= 1.0)) throw std::logic_error("invalid radius interval");
  return RadiusResult(Kind::Interval, lo, hi, tag, argmin);
}

double RadiusResult::value() const {
  if (kind_ != Kind::Exact) throw std::logic_error("interval result has no point value");
  return lo_;
}

namespace {

void check_modulus(double a, const char* who) {
  if (!(a >= 0.0 && a < 1.0)) {
    std::ostringstream os;
    os << who << ": modulus a must lie in [0,1), got " << a;
    throw DomainError(os.str());
  }
}

// (1 - a^p)^{e}, accurate for a close to 1.
double one_minus_pow(double a, double p, double e) {
  if (a == 0.0) return 1.0;
  const double m = -std::expm1(p * std::log(a));
  return e == 1.0 ? m : std::exp(e * std::log(m));
}

double one_minus_sq(double a) { return (1.0 - a) * (1.0 + a); }

double scan_right_end() { return 1.0 - Tolerances::scan_right_gap; }

ScanOptions scan_options() {
  ScanOptions o;
  o.uniform_points = Tolerances::scan_points;
  o.argument_tol = Tolerances::golden_arg;
  return o;
}

}  // namespace

HatRoot hat_root(const BohrParams& params) {
  const double p = params.p(), q = params.q();
  auto g = [p, q](double x) { return std::pow(x, p) + std::pow(x, q) - 1.0; };
  const double x = bisect_root(g, 0.0, 1.0, Tolerances::root_abs, Tolerances::root_max_iter);
  return {x, std::abs(g(x))};
}

double eval_A(const BohrParams& params, double a) {
  check_modulus(a, "eval_A");
  const double m = one_minus_pow(a, params.p(), 1.0 / params.q());
  return m / (one_minus_sq(a) + a * m);
}

double eval_S(const BohrParams& params, double a) {
  check_modulus(a, "eval_S");
  const double m2 = one_minus_pow(a, params.p(), 2.0 / params.q());
  return std::sqrt(m2 / (one_minus_sq(a) + m2));
}

ConditionCheck exactness_condition(const BohrParams& params) {
  const double p = params.p(), q = params.q();
  const double a = hat_root(params).a_hat;
  const double ap = std::pow(a, p);
  const double ap2 = ap * a * a;
  const double lhs = q * a * a + p * ap2;
  const double rhs = p * ap + q * ap2;
  return {lhs <= rhs + Tolerances::condition_slack, lhs, rhs};
}

double A_boundary_limit(const BohrParams& params) {
  return params.q() == 1.0 ? params.p() / (2.0 + params.p()) : 1.0;
}

InfResult inf_A(const BohrParams& params) {
  const double lower = hat_root(params).a_hat;
  const auto scan = scan_minimize([&](double a) { return eval_A(params, a); }, lower,
                                  scan_right_end(), scan_options());
  const double limit = A_boundary_limit(params);
  if (limit <= scan.value) return {limit, Argmin::boundary()};
  return {scan.value, Argmin::point(scan.argmin)};
}

InfResult inf_S(const BohrParams& params) {
  const auto scan = scan_minimize([&](double a) { return eval_S(params, a); }, 0.0,
                                  scan_right_end(), scan_options());
  return {scan.value, Argmin::point(scan.argmin)};
}

namespace {

bool in_branch(const BohrParams& prm, CaseTag branch) {
  const double p = prm.p(), q = prm.q();
  switch (branch) {
    case CaseTag::PQ_le2: return p <= 2.0 && q <= 2.0;
    case CaseTag::Pgt2_Qle2: return p > 2.0 && q <= 2.0;
    case CaseTag::PQ_ge2: return p >= 2.0 && q >= 2.0;
    case CaseTag::Ple2_Qgt2_exact:
      return q > 2.0 && (p == 2.0 || (p < 2.0 && exactness_condition(prm).holds));
    case CaseTag::Ple2_Qgt2_interval: return p < 2.0 && q > 2.0;
  }
  return false;
}

RadiusResult evaluate_branch(const BohrParams& prm, CaseTag branch) {
  switch (branch) {
    case CaseTag::PQ_le2: {
      const auto inf = inf_A(prm);
      return RadiusResult::exact(inf.value, branch, inf.argmin);
    }
    case CaseTag::Pgt2_Qle2: {
      const auto inf = inf_A(prm);
      if (kInvSqrt2 <= inf.value) return RadiusResult::exact(kInvSqrt2, branch);
      return RadiusResult::exact(inf.value, branch, inf.argmin);
    }
    case CaseTag::PQ_ge2: return RadiusResult::exact(kInvSqrt2, branch);
    case CaseTag::Ple2_Qgt2_exact: {
      if (prm.p() == 2.0) return RadiusResult::exact(kInvSqrt2, branch);
      const auto inf = inf_A(prm);
      return RadiusResult::exact(inf.value, branch, inf.argmin);
    }
    case CaseTag::Ple2_Qgt2_interval: {
      const auto inf = inf_S(prm);
      return RadiusResult::interval(inf.value, kInvSqrt2, branch, inf.argmin);
    }
  }
  throw std::logic_error("unknown branch");
}

}  // namespace

RadiusResult radius_scalar_branch(const BohrParams& params, CaseTag branch) {
  if (!in_branch(params, branch)) {
    throw UnsupportedExponent("(" + params.to_string() + ") is outside branch " +
                              to_string(branch));
  }
  return evaluate_branch(params, branch);
}

RadiusResult radius_scalar(const BohrParams& params) {
  const double p = params.p(), q = params.q();
  if (q <= 2.0) return evaluate_branch(params, p <= 2.0 ? CaseTag::PQ_le2 : CaseTag::Pgt2_Qle2);
  if (p > 2.0) return evaluate_branch(params, CaseTag::PQ_ge2);
  if (p == 2.0 || exactness_condition(params).holds) {
    return evaluate_branch(params, CaseTag::Ple2_Qgt2_exact);
  }
  return evaluate_branch(params, CaseTag::Ple2_Qgt2_interval);
}

}  // namespace bohr
