#include "bohr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bohr/overloaded.hpp"

namespace bohr {

namespace {

double functional_power(const Functional& functional) {
  return std::visit(Overloaded{
                        [](const Rpq&) { return 1.0; },
                        [](const Rp& f) { return f.p; },
                        [](const Hp& f) { return f.p; },
                    },
                    functional);
}

void check_compatible(const FunctionFamily& family, const Functional& functional) {
  validate(family);
  const bool ok = std::visit(
      Overloaded{
          [&](const Rpq&) { return is_schur(family) || is_polydisk(family); },
          [&](const Rp&) { return is_schur(family); },
          [&](const Hp&) { return is_positive_real(family); },
      },
      functional);
  if (!ok) {
    throw DomainError("functional is not defined for family " + describe(family));
  }
}

// smallest K for which the chi tail is geometric with ratio < 1
int min_terms(const FunctionFamily& family) {
  if (const auto* chi = std::get_if<HilbertChi>(&family)) {
    return std::max(1, static_cast<int>(std::ceil(chi->r3 * (chi->n - 1.0) / (1.0 - chi->r3))) + 1);
  }
  return 1;
}

double tail_at(const FunctionFamily& family, int K, double r, double power) {
  return tail_sum(tail_for(family, K), K, r, power);
}

enum class Verdict { Feasible, Infeasible };

}  // namespace

int terms_for(const FunctionFamily& family, const Functional& functional, double r,
              const OracleOptions& opts) {
  const double power = functional_power(functional);
  const int floor_k = min_terms(family);
  auto small_enough = [&](int K) { return tail_at(family, K, r, power) <= opts.tail_tol; };

  int hi = std::max(16, floor_k);
  while (!small_enough(hi)) {
    if (hi >= opts.max_terms) {
      std::ostringstream os;
      os << "tail of " << describe(family) << " exceeds " << opts.tail_tol << " at r=" << r
         << " with " << opts.max_terms << " terms";
      throw TailUnbounded(os.str());
    }
    hi = std::min(2 * hi, opts.max_terms);
  }
  int lo = std::max(floor_k, hi / 2);
  if (lo < hi && small_enough(lo)) return lo;
  // invariant: tail(lo) too large, tail(hi) small enough
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (small_enough(mid) ? hi : lo) = mid;
  }
  return hi;
}

Quantity evaluate(const FunctionFamily& family, const Functional& functional, double r,
                  const OracleOptions& opts) {
  check_compatible(family, functional);
  const int K = opts.terms > 0 ? std::max(opts.terms, min_terms(family))
                               : terms_for(family, functional, r, opts);
  return std::visit(
      Overloaded{
          [&](const Rpq& f) {
            if (is_polydisk(family)) {
              return polydisk_bohr_quantity(homogeneous_sums(family, K), f.params, r);
            }
            return bohr_quantity(coefficients(family, K), f.params, r);
          },
          [&](const Rp& f) { return p_bohr_quantity(coefficients(family, K), f.p, r); },
          [&](const Hp& f) { return h_quantity(coefficients(family, K), f.p, r); },
      },
      functional);
}

double radius_of(const FunctionFamily& family, const Functional& functional,
                 const OracleOptions& opts) {
  check_compatible(family, functional);

  auto verdict = [&](double r) {
    Quantity q{};
    try {
      q = evaluate(family, functional, r, opts);
    } catch (const TailUnbounded&) {
      // fall back to the longest truncation and decide from the enclosure
      OracleOptions capped = opts;
      capped.terms = opts.max_terms;
      q = evaluate(family, functional, r, capped);
      if (q.truncated() > 1.0) return Verdict::Infeasible;
      if (q.value <= 1.0) return Verdict::Feasible;
      throw;
    }
    return q.value <= 1.0 ? Verdict::Feasible : Verdict::Infeasible;
  };

  if (opts.monotone_grid >= 2) {
    double prev = -1.0;
    for (int i = 0; i < opts.monotone_grid; ++i) {
      const double r = opts.r_max * i / (opts.monotone_grid - 1);
      double v;
      try {
        v = evaluate(family, functional, r, opts).value;
      } catch (const TailUnbounded&) {
        continue;
      }
      if (v < prev - 1e-9 * std::max(1.0, std::abs(prev))) {
        std::ostringstream os;
        os << "functional is not monotone in r for " << describe(family) << " near r=" << r;
        throw std::logic_error(os.str());
      }
      prev = v;
    }
  }

  {
    const Quantity top = [&] {
      try {
        return evaluate(family, functional, opts.r_max, opts);
      } catch (const TailUnbounded&) {
        OracleOptions capped = opts;
        capped.terms = opts.max_terms;
        return evaluate(family, functional, opts.r_max, capped);
      }
    }();
    if (top.value < 1.0 - (1.0 - opts.r_max)) return 1.0;
  }
  if (verdict(0.0) == Verdict::Infeasible) return 0.0;

  double lo = 0.0, hi = opts.r_max;
  for (int it = 0; it < opts.max_iter && hi - lo > opts.r_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (verdict(mid) == Verdict::Feasible ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double bombieri_bound(double a, double r) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("bombieri_bound: a must lie in [0,1]");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("bombieri_bound: r must lie in [0,1)");
  const double general = r * std::sqrt((1.0 - a) * (1.0 + a)) / std::sqrt((1.0 - r) * (1.0 + r));
  if (r <= a) return std::min(general, r * (1.0 - a) * (1.0 + a) / (1.0 - a * r));
  return general;
}

}  // namespace bohr
