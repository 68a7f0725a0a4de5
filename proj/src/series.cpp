#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bohr/compensated_sum.hpp"
#include "bohr/overloaded.hpp"

namespace bohr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// x^e for x >= 0 with 0^e = 0 (e > 0)
double pow0(double x, double e) { return x == 0.0 ? 0.0 : std::exp(e * std::log(x)); }

void check_radius(double r, const char* who) {
  if (!(r >= 0.0 && r < 1.0)) {
    std::ostringstream os;
    os << who << ": radius must lie in [0,1), got " << r;
    throw DomainError(os.str());
  }
}

void check_tail(const TailBound& tail) {
  std::visit(Overloaded{
                 [](const ZeroTail&) {},
                 [](const GeometricTail& g) {
                   if (!(g.ratio >= 0.0 && g.ratio < 1.0 && g.scale >= 0.0 &&
                         std::isfinite(g.scale) && g.cap >= 0.0)) {
                     throw DomainError("geometric tail needs 0 <= ratio < 1, scale >= 0, cap >= 0");
                   }
                 },
                 [](const SchurTail& s) {
                   if (!(s.bound >= 0.0 && std::isfinite(s.bound))) {
                     throw DomainError("Schur tail bound must be finite and nonnegative");
                   }
                 },
             },
             tail);
}

double checked_tail(const TailBound& tail, int K, double x, double power) {
  const double t = tail_sum(tail, K, x, power);
  if (!std::isfinite(t)) {
    std::ostringstream os;
    os << "series tail cannot be bounded at radius " << x;
    throw TailUnbounded(os.str());
  }
  return t;
}

// sum_k m_k^power x^{k power}, m indexed from `first` (0 or 1)
double weighted_sum(const std::vector<double>& m, int first, double x, double power) {
  CompensatedSum acc;
  const double step = pow0(x, power);
  double w = first == 0 ? 1.0 : step;
  for (double mk : m) {
    acc += (power == 1.0 ? mk : pow0(mk, power)) * w;
    w *= step;
  }
  return acc.value();
}

}  // namespace

double tail_sum(const TailBound& tail, int K, double x, double power) {
  return std::visit(
      Overloaded{
          [](const ZeroTail&) { return 0.0; },
          [&](const GeometricTail& g) {
            if (g.scale == 0.0 || g.cap == 0.0 || x == 0.0) return 0.0;
            const double rx = pow0(g.ratio * x, power);
            const double geometric =
                rx >= 1.0 ? kInf : pow0(g.scale, power) * pow0(x, (K + 1) * power) / (1.0 - rx);
            const double capped = tail_sum(SchurTail{g.cap}, K, x, power);
            return std::min(geometric, capped);
          },
          [&](const SchurTail& s) {
            if (s.bound == 0.0 || x == 0.0) return 0.0;
            if (x >= 1.0 || !std::isfinite(s.bound)) return kInf;
            return pow0(s.bound, power) * pow0(x, (K + 1) * power) / (1.0 - pow0(x, power));
          },
      },
      tail);
}

PowerSeries1D::PowerSeries1D(std::vector<double> moduli, TailBound tail)
    : moduli_(std::move(moduli)), tail_(tail) {
  if (moduli_.empty()) throw DomainError("power series needs at least the constant term");
  for (double m : moduli_) {
    if (!(m >= 0.0 && std::isfinite(m))) {
      throw DomainError("coefficient moduli must be finite and nonnegative");
    }
  }
  check_tail(tail_);
}

void HomogeneousSums::validate() const {
  if (!(head >= 0.0 && std::isfinite(head))) throw DomainError("head norm must be finite, >= 0");
  for (double s : sums) {
    if (!(s >= 0.0 && std::isfinite(s))) {
      throw DomainError("homogeneous sums must be finite and nonnegative");
    }
  }
  check_tail(tail);
}

Quantity bohr_quantity(const PowerSeries1D& series, const BohrParams& params, double r) {
  check_radius(r, "bohr_quantity");
  const auto& m = series.moduli();
  const std::vector<double> rest(m.begin() + 1, m.end());
  const double inner = weighted_sum(rest, 1, r, 1.0);
  const double tail = checked_tail(series.tail(), series.degree(), r, 1.0);
  const double head = pow0(m[0], params.p());
  const double value = head + pow0(inner + tail, params.q());
  return {value, value - (head + pow0(inner, params.q()))};
}

Quantity p_bohr_quantity(const PowerSeries1D& series, double p, double r) {
  check_radius(r, "p_bohr_quantity");
  if (!(p >= 1.0)) throw DomainError("p_bohr_quantity: p must be >= 1");
  for (double m : series.moduli()) {
    if (m > 1.0 + 1e-9) {
      throw DomainError("p_bohr_quantity: coefficient modulus above 1, series is not Schur");
    }
  }
  const double sum = weighted_sum(series.moduli(), 0, r, p);
  const double tail = checked_tail(series.tail(), series.degree(), r, p);
  return {sum + tail, tail};
}

Quantity h_quantity(const PowerSeries1D& series, double p, double r) {
  check_radius(r, "h_quantity");
  if (!(p > 0.0)) throw DomainError("h_quantity: p must be positive");
  if (std::abs(series.moduli()[0] - 1.0) > 1e-12) {
    throw DomainError("h_quantity: series must be normalised with c_0 = 1");
  }
  const double sum = weighted_sum(series.moduli(), 0, r, p);
  const double tail = checked_tail(series.tail(), series.degree(), r, p);
  const double value = 0.5 * pow0(sum + tail, 1.0 / p);
  return {value, value - 0.5 * pow0(sum, 1.0 / p)};
}

Quantity polydisk_bohr_quantity(const HomogeneousSums& h, const BohrParams& params, double rho) {
  check_radius(rho, "polydisk_bohr_quantity");
  h.validate();
  const double inner = weighted_sum(h.sums, 1, rho, 1.0);
  const double tail = checked_tail(h.tail, static_cast<int>(h.sums.size()), rho, 1.0);
  const double head = pow0(h.head, params.p());
  const double value = head + pow0(inner + tail, params.q());
  return {value, value - (head + pow0(inner, params.q()))};
}

Quantity polydisk_h_quantity(const HomogeneousSums& h, double p, double rho) {
  check_radius(rho, "polydisk_h_quantity");
  h.validate();
  if (!h.single_monomial) {
    throw DomainError(
        "polydisk_h_quantity: per-monomial moduli are unknown for this family");
  }
  if (!(p > 0.0)) throw DomainError("polydisk_h_quantity: p must be positive");
  const double sum = pow0(h.head, p) + weighted_sum(h.sums, 1, rho, p);
  const double tail = checked_tail(h.tail, static_cast<int>(h.sums.size()), rho, p);
  const double value = 0.5 * pow0(sum + tail, 1.0 / p);
  return {value, value - 0.5 * pow0(sum, 1.0 / p)};
}

}  // namespace bohr
