#pragma once

// Brute-force radius location: truncate the family's series so its tail is
// negligible at the trial radius, evaluate the functional, and bisect on r.

#include <variant>

#include "bohr/families.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// |x0|^p + (sum ||x_alpha z^alpha||)^q <= 1
struct Rpq {
  BohrParams params;
};
/// sum ||x_alpha z^alpha||^p <= 1
struct Rp {
  double p;
};
/// (1/2) (sum |x_alpha z^alpha|^p)^{1/p} <= 1
struct Hp {
  double p;
};

using Functional = std::variant<Rpq, Rp, Hp>;

struct OracleOptions {
  double tail_tol = 1e-12;
  int max_terms = 100000;
  // fixed truncation; 0 selects it from tail_tol
  int terms = 0;
  double r_max = 1.0 - 1e-8;
  double r_tol = 1e-10;
  int max_iter = 60;
  int monotone_grid = 16;
};

/// Smallest K (up to opts.max_terms) whose tail bound at r, raised to the
/// functional's power, is below opts.tail_tol. Throws TailUnbounded when the
/// cap is reached first.
int terms_for(const FunctionFamily& family, const Functional& functional, double r,
              const OracleOptions& opts = {});

/// Functional value of the family at radius r. The truncation follows
/// opts.terms when set, otherwise terms_for().
Quantity evaluate(const FunctionFamily& family, const Functional& functional, double r,
                  const OracleOptions& opts = {});

/// sup{ r : functional(r) <= 1 } by bisection on [0, r_max].
///
/// Returns 1 when the functional at r_max is still below 1 - (1 - r_max).
/// Feasibility uses the tail-inclusive (upper) value, so the result never
/// overstates the radius by more than r_tol. Checks monotonicity in r on a
/// grid first and throws std::logic_error if it fails.
double radius_of(const FunctionFamily& family, const Functional& functional,
                 const OracleOptions& opts = {});

/// Upper bound for sum_{n>=1} |a_n| r^n over Schur functions with |a_0| = a:
/// r(1-a^2)/(1-ar) when r <= a, and r sqrt(1-a^2)/sqrt(1-r^2) always; the
/// smaller applicable one is returned.
double bombieri_bound(double a, double r);

}  // namespace bohr
