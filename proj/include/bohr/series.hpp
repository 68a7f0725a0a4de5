#pragma once

// Truncated power series with certified tail bounds, and the three Bohr-type
// functionals evaluated on them.

#include <limits>
#include <variant>
#include <vector>

#include "bohr/params.hpp"

namespace bohr {

// Coefficients beyond the truncation vanish.
struct ZeroTail {};

// |c_{K+j}| <= min(cap, scale * ratio^{j-1}) for j >= 1, with 0 <= ratio < 1.
// Equality holds for the Mobius families (cap unused).
struct GeometricTail {
  double ratio;
  double scale;
  double cap = std::numeric_limits<double>::infinity();
};

// |c_k| <= bound for every k > K (bound 1 for Schur functions, 2 for the
// Caratheodory class).
struct SchurTail {
  double bound = 1.0;
};

using TailBound = std::variant<ZeroTail, GeometricTail, SchurTail>;

/// Upper bound for sum_{k > K} |c_k|^power x^{k power}.
/// Returns +inf when the bound diverges (x >= 1, or ratio * x >= 1).
double tail_sum(const TailBound& tail, int K, double x, double power);

/// Coefficient moduli |c_0|, ..., |c_K| of a one-variable series.
class PowerSeries1D {
 public:
  PowerSeries1D(std::vector<double> moduli, TailBound tail);

  const std::vector<double>& moduli() const noexcept { return moduli_; }
  const TailBound& tail() const noexcept { return tail_; }
  // K, the index of the last stored coefficient.
  int degree() const noexcept { return static_cast<int>(moduli_.size()) - 1; }

 private:
  std::vector<double> moduli_;
  TailBound tail_;
};

/// Norms of the homogeneous parts of a polydisk series: head = ||x_0|| and
/// sums[k-1] = sum_{|alpha|=k} ||x_alpha|| for k = 1..K.
///
/// Since ||x_alpha z^alpha|| <= ||x_alpha|| rho^{|alpha|} on rho D^n with
/// equality on the diagonal, the Bohr sum over rho D^n is
/// sum_k sums[k-1] rho^k. For the p-th power functionals the per-monomial
/// moduli are needed; single_monomial marks families with one monomial per
/// degree (functions of z_1 alone), where sums[k-1] is that modulus.
struct HomogeneousSums {
  double head = 0.0;
  std::vector<double> sums;
  TailBound tail = ZeroTail{};
  bool single_monomial = false;

  void validate() const;
};

/// Value of a functional and the amount by which the tail bound raised it.
/// value is an upper bound; value - tail_error is the truncated value.
struct Quantity {
  double value;
  double tail_error;

  double truncated() const { return value - tail_error; }
};

/// |c_0|^p + (sum_{n>=1} |c_n| r^n)^q, tail added to the inner sum.
Quantity bohr_quantity(const PowerSeries1D& series, const BohrParams& params, double r);

/// sum_n |c_n|^p r^{np}. Rejects series with a coefficient modulus above 1.
Quantity p_bohr_quantity(const PowerSeries1D& series, double p, double r);

/// (1/2) (sum_n |c_n|^p r^{np})^{1/p}; requires c_0 = 1.
Quantity h_quantity(const PowerSeries1D& series, double p, double r);

/// head^p + (sum_k s_k rho^k)^q.
Quantity polydisk_bohr_quantity(const HomogeneousSums& h, const BohrParams& params, double rho);

/// (1/2) (head^p + sum_k s_k^p rho^{kp})^{1/p}; needs single_monomial.
Quantity polydisk_h_quantity(const HomogeneousSums& h, double p, double rho);

}  // namespace bohr
