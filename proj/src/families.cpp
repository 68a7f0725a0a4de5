#include "bohr/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bohr/compensated_sum.hpp"
#include "bohr/overloaded.hpp"

namespace bohr {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void check_zeros(const std::vector<Complex>& zeros) {
  for (const auto& z : zeros) {
    require(std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) < 1.0,
            "Blaschke zeros must lie in the open unit disk");
  }
}

// prod_i (a_i - z), coefficients in increasing degree
std::vector<Complex> zeros_numerator(const std::vector<Complex>& zeros) {
  std::vector<Complex> poly{1.0};
  for (const auto& a : zeros) {
    std::vector<Complex> next(poly.size() + 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += a * poly[j];
      next[j + 1] -= poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

// prod_i (1 - conj(a_i) z)
std::vector<Complex> zeros_denominator(const std::vector<Complex>& zeros) {
  std::vector<Complex> poly{1.0};
  for (const auto& a : zeros) {
    std::vector<Complex> next(poly.size() + 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= std::conj(a) * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<double> moduli_of(const std::vector<Complex>& c) {
  std::vector<double> m(c.size());
  std::transform(c.begin(), c.end(), m.begin(), [](Complex z) { return std::abs(z); });
  return m;
}

// Cauchy estimate on the circle |z| = R, 1 < R < 1/max|a_i|:
// |c_k| <= M(R) R^{-k} with M(R) = prod_i (R + |a_i|) / (1 - |a_i| R),
// capped by the Schur bound |c_k| <= 1.
TailBound blaschke_tail(const std::vector<Complex>& zeros, int K) {
  if (zeros.empty()) return ZeroTail{};
  double amax = 0.0;
  for (const auto& a : zeros) amax = std::max(amax, std::abs(a));
  if (amax == 0.0) {
    // phase * (-z)^d
    if (K >= static_cast<int>(zeros.size())) return ZeroTail{};
    return SchurTail{1.0};
  }
  const double R = 1.0 / std::sqrt(amax);
  double log_m = 0.0;
  for (const auto& a : zeros) {
    const double m = std::abs(a);
    log_m += std::log(R + m) - std::log1p(-m * R);
  }
  const double scale = std::exp(std::min(log_m - (K + 1) * std::log(R), 690.0));
  return GeometricTail{1.0 / R, scale, 1.0};
}

HomogeneousSums from_one_variable(const PowerSeries1D& s) {
  HomogeneousSums h;
  h.head = s.moduli()[0];
  h.sums.assign(s.moduli().begin() + 1, s.moduli().end());
  h.tail = s.tail();
  h.single_monomial = true;
  return h;
}

}  // namespace

void validate(const FunctionFamily& family) {
  std::visit(Overloaded{
                 [](const Mobius& f) {
                   require(f.a >= 0.0 && f.a < 1.0, "Mobius parameter must lie in [0,1)");
                 },
                 [](const ZMobius& f) {
                   require(f.a >= 0.0 && f.a < 1.0, "z*Mobius parameter must lie in [0,1)");
                 },
                 [](const Blaschke& f) {
                   check_zeros(f.zeros);
                   require(std::abs(std::abs(f.phase) - 1.0) <= 1e-12,
                           "Blaschke phase must be unimodular");
                 },
                 [](const HalfPlane&) {},
                 [](const Herglotz& f) {
                   check_zeros(f.zeros);
                   require(std::abs(f.phase) <= 1.0 + 1e-12, "Herglotz phase must satisfy |phase| <= 1");
                 },
                 [](const HilbertChi& f) {
                   require(f.b3 >= 0.0 && f.b3 < 1.0, "chi: b3 must lie in [0,1)");
                   require(f.r3 > 0.0 && f.r3 < 1.0, "chi: r3 must lie in (0,1)");
                   require(f.scale_c > 0.0 && std::isfinite(f.scale_c), "chi: scale must be positive");
                   require(f.n >= 1, "chi: n must be positive");
                 },
                 [](const Constant& f) {
                   require(std::abs(f.c) < 1.0, "constant must have modulus below 1");
                 },
             },
             family);
}

bool is_schur(const FunctionFamily& family) {
  return std::holds_alternative<Mobius>(family) || std::holds_alternative<ZMobius>(family) ||
         std::holds_alternative<Blaschke>(family) || std::holds_alternative<Constant>(family);
}

bool is_positive_real(const FunctionFamily& family) {
  return std::holds_alternative<HalfPlane>(family) || std::holds_alternative<Herglotz>(family);
}

bool is_polydisk(const FunctionFamily& family) {
  return std::holds_alternative<HilbertChi>(family);
}

std::string describe(const FunctionFamily& family) {
  std::ostringstream os;
  os.precision(17);
  auto zeros_str = [&os](const std::vector<Complex>& zs, Complex phase) {
    os << "[";
    for (std::size_t i = 0; i < zs.size(); ++i) {
      os << (i ? ";" : "") << zs[i].real() << "," << zs[i].imag();
    }
    os << "]@" << phase.real() << "," << phase.imag();
  };
  std::visit(Overloaded{
                 [&](const Mobius& f) { os << "mobius(a=" << f.a << ")"; },
                 [&](const ZMobius& f) { os << "zmobius(a=" << f.a << ")"; },
                 [&](const Blaschke& f) {
                   os << "blaschke";
                   zeros_str(f.zeros, f.phase);
                 },
                 [&](const HalfPlane&) { os << "halfplane"; },
                 [&](const Herglotz& f) {
                   os << "herglotz";
                   zeros_str(f.zeros, f.phase);
                 },
                 [&](const HilbertChi& f) {
                   os << "chi(b3=" << f.b3 << ",r3=" << f.r3 << ",c=" << f.scale_c
                      << ",n=" << f.n << ")";
                 },
                 [&](const Constant& f) {
                   os << "constant(" << f.c.real() << "," << f.c.imag() << ")";
                 },
             },
             family);
  return os.str();
}

std::vector<Complex> divide_series(const std::vector<Complex>& numerator,
                                   const std::vector<Complex>& denominator, int K) {
  require(!denominator.empty() && denominator[0] == Complex(1.0),
          "divide_series: denominator must be normalised to D(0) = 1");
  require(K >= 0, "divide_series: K must be nonnegative");
  std::vector<Complex> c(K + 1);
  const int deg_d = static_cast<int>(denominator.size()) - 1;
  for (int k = 0; k <= K; ++k) {
    ComplexCompensatedSum acc;
    if (k < static_cast<int>(numerator.size())) acc += numerator[k];
    for (int j = 1; j <= std::min(k, deg_d); ++j) acc += -denominator[j] * c[k - j];
    c[k] = acc.value();
  }
  return c;
}

TailBound tail_for(const FunctionFamily& family, int K) {
  return std::visit(
      Overloaded{
          [K](const Mobius& f) -> TailBound {
            return GeometricTail{f.a, (1.0 - f.a * f.a) * std::pow(f.a, K)};
          },
          [K](const ZMobius& f) -> TailBound {
            return GeometricTail{f.a, (1.0 - f.a * f.a) * std::pow(f.a, K - 1)};
          },
          [K](const Blaschke& f) -> TailBound { return blaschke_tail(f.zeros, K); },
          [](const HalfPlane&) -> TailBound { return SchurTail{2.0}; },
          [](const Herglotz& f) -> TailBound {
            if (f.phase == Complex(0.0)) return ZeroTail{};
            return SchurTail{2.0};
          },
          [K](const HilbertChi& f) -> TailBound {
            const double ratio = f.r3 * (f.n + K) / (K + 1.0);
            require(ratio < 1.0, "chi: truncation too short for a geometric tail");
            double s = f.scale_c;
            for (int k = 1; k <= K; ++k) s *= f.r3 * (f.n + k - 1.0) / k;
            return GeometricTail{ratio, s * ratio};
          },
          [](const Constant&) -> TailBound { return ZeroTail{}; },
      },
      family);
}

PowerSeries1D coefficients(const FunctionFamily& family, int K) {
  validate(family);
  require(K >= 1, "coefficients: K must be at least 1");
  std::vector<double> m(K + 1, 0.0);
  std::visit(Overloaded{
                 [&](const Mobius& f) {
                   m[0] = f.a;
                   double w = 1.0 - f.a * f.a;
                   for (int n = 1; n <= K; ++n, w *= f.a) m[n] = w;
                 },
                 [&](const ZMobius& f) {
                   m[1] = f.a;
                   double w = 1.0 - f.a * f.a;
                   for (int n = 2; n <= K; ++n, w *= f.a) m[n] = w;
                 },
                 [&](const Blaschke& f) {
                   auto num = zeros_numerator(f.zeros);
                   for (auto& c : num) c *= f.phase;
                   m = moduli_of(divide_series(num, zeros_denominator(f.zeros), K));
                 },
                 [&](const HalfPlane&) {
                   m[0] = 1.0;
                   for (int n = 1; n <= K; ++n) m[n] = 2.0;
                 },
                 [&](const Herglotz& f) {
                   const auto den = zeros_denominator(f.zeros);
                   const auto num = zeros_numerator(f.zeros);
                   std::vector<Complex> u(std::max(den.size(), num.size() + 1), 0.0);
                   std::vector<Complex> v(u.size(), 0.0);
                   for (std::size_t j = 0; j < den.size(); ++j) {
                     u[j] += den[j];
                     v[j] += den[j];
                   }
                   for (std::size_t j = 0; j < num.size(); ++j) {
                     u[j + 1] += f.phase * num[j];
                     v[j + 1] -= f.phase * num[j];
                   }
                   m = moduli_of(divide_series(u, v, K));
                 },
                 [&](const HilbertChi&) {
                   throw DomainError("chi is a polydisk family; use homogeneous_sums");
                 },
                 [&](const Constant& f) { m[0] = std::abs(f.c); },
             },
             family);
  return PowerSeries1D(std::move(m), tail_for(family, K));
}

HomogeneousSums homogeneous_sums(const FunctionFamily& family, int K) {
  validate(family);
  require(K >= 1, "homogeneous_sums: K must be at least 1");
  if (const auto* chi = std::get_if<HilbertChi>(&family)) {
    HomogeneousSums h;
    h.head = chi->b3;
    h.sums.resize(K);
    // s_k = c r3^k C(n+k-1, k)
    double s = chi->scale_c;
    for (int k = 1; k <= K; ++k) {
      s *= chi->r3 * (chi->n + k - 1.0) / k;
      h.sums[k - 1] = s;
    }
    h.tail = tail_for(family, K);
    h.single_monomial = chi->n == 1;
    return h;
  }
  return from_one_variable(coefficients(family, K));
}

}  // namespace bohr
