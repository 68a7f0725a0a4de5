#pragma once

// Several-variable and vector-valued Bohr radii: polydisk D^n, Hilbert-space
// valued maps, p-Bohr radii and the Caratheodory (positive real part) class.

#include <limits>
#include <vector>

#include "bohr/params.hpp"

namespace bohr {

struct HilbertRadius {
  double value;
  double argmin_a;
};

/// Extremal data of the Hilbert-valued polydisk problem.
///
/// chi(z) = b3 e_0 + scale_c * sum_k r3^k sum_{|alpha|=k} z^alpha e_alpha has
/// norm one on the torus and Bohr radius exactly r3.
struct HilbertExtremal {
  double b3;
  double r3;
  double scale_c;
  int n;

  // b3^2 + scale_c^2 ((1 - r3^2)^{-n} - 1); equals 1 on the extremal.
  double boundary_norm() const;
  // b3^p + (scale_c ((1 - r3^2)^{-n} - 1))^q; equals 1 on the extremal.
  double bohr_sum(const BohrParams& params) const;
};

/// R^n_{p,q}(H) = inf_a (1 - (1 - S_{p,q}(a)^2)^{1/n})^{1/2}; requires q >= 2.
HilbertRadius hilbert_radius(const BohrParams& params, int n);
HilbertExtremal hilbert_extremal(const BohrParams& params, int n);

/// The increasing map s -> (1 - (1 - s^2)^{1/n})^{1/2}.
double hilbert_transform(double s, int n);

/// R (1 - 2^{-1/n}): lower bound for R^n_{p,q}(X) from a one-variable radius R.
double polydisk_lower(double scalar_radius, int n);

/// sqrt(log n / n), natural logarithm; n >= 2.
double finite_dim_asymptotic(int n);

/// r1n^{(2-p)/p}, for 1 < p < 2.
double pbohr_scalar_lower(double p, double r1n);

/// p-uniform PL-convexity constant I_p(X) of a Banach space, p >= 2.
struct PLConvexityConstant {
  PLConvexityConstant(double p, double ip);
  double p;
  double ip;
};

/// (I_p / (2^p + I_p))^{2/p}, independent of n.
double pbohr_vector_lower(const PLConvexityConstant& c);

/// H^n_p = ((2^p - 1) / (2^{p+1} - 1))^{1/p} for p >= 2.
double hpn_exact(double p);

/// h1^{(2-p)/p} h2^{(2p-2)/p}, a lower bound for H^n_p when 1 < p < 2.
double hpn_lower_combine(double p, double h1, double h2);

struct OmegaSample {
  double delta;
  double omega;
};

/// Tabulated values of the modulus Omega_X(delta).
class OmegaSamples {
 public:
  explicit OmegaSamples(std::vector<OmegaSample> pairs);
  const std::vector<OmegaSample>& pairs() const noexcept { return pairs_; }

 private:
  std::vector<OmegaSample> pairs_;
};

struct OmegaCheck {
  bool holds;
  // +infinity when the divergence heuristic fires.
  double c_est;
  // Local power-law exponent of the ratio between the two smallest positive
  // deltas; positive means the ratio grows as delta -> 0.
  double small_delta_slope;
};

/// Sample-wise necessary check of
///   Omega_X(delta) <= C ((1+delta)^q - (1+delta)^{q-p})^{1/q}.
///
/// c_est is the largest observed ratio. The condition is reported as failing
/// when the ratio follows a growing power law at the small-delta end, i.e.
/// when its log-log slope between the two smallest positive deltas exceeds
/// kOmegaDivergenceSlope. This is a reporting convention, not a proof.
OmegaCheck omega_condition_check(const BohrParams& params, const OmegaSamples& samples);

inline constexpr double kOmegaDivergenceSlope = 1e-2;

/// R / (2e): lower bound for R_{p,q}(Y, X) from R = R_{p,q}(X).
double frechet_lower(double radius);

}  // namespace bohr
