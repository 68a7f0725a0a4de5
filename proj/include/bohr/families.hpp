#pragma once

// Concrete analytic families with closed-form or recursively computed
// coefficients. All one-variable families except HalfPlane and Herglotz are
// Schur functions (sup norm <= 1); those two have positive real part and
// value 1 at the origin.

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "bohr/series.hpp"

namespace bohr {

using Complex = std::complex<double>;

/// phi_a(z) = (a - z) / (1 - a z), 0 <= a < 1.
struct Mobius {
  double a;
};

/// z phi_a(z).
struct ZMobius {
  double a;
};

/// phase * prod_i (a_i - z) / (1 - conj(a_i) z); |a_i| < 1, |phase| = 1.
/// No zeros gives the unimodular constant.
struct Blaschke {
  std::vector<Complex> zeros;
  Complex phase{1.0, 0.0};
};

/// (1 + z1) / (1 - z1); as an n-variable map it depends on z1 only.
struct HalfPlane {};

/// (1 + psi) / (1 - psi) with psi(z) = z * phase * prod_i (a_i - z)/(1 - conj(a_i) z)
/// and |phase| <= 1, so psi is a Schur function vanishing at 0. phase = 0 gives
/// the constant 1 and no zeros with phase 1 gives the half-plane map.
struct Herglotz {
  std::vector<Complex> zeros;
  Complex phase{1.0, 0.0};
};

/// Hilbert-space valued extremal on D^n:
///   b3 e_0 + scale_c sum_k r3^k sum_{|alpha|=k} z^alpha e_alpha.
struct HilbertChi {
  double b3;
  double r3;
  double scale_c;
  int n;
};

struct Constant {
  Complex c;
};

using FunctionFamily =
    std::variant<Mobius, ZMobius, Blaschke, HalfPlane, Herglotz, HilbertChi, Constant>;

/// Throws DomainError when parameters leave their domains.
void validate(const FunctionFamily& family);

bool is_schur(const FunctionFamily& family);
bool is_positive_real(const FunctionFamily& family);
bool is_polydisk(const FunctionFamily& family);

std::string describe(const FunctionFamily& family);

/// Coefficients c_0..c_K of a one-variable family with a certified tail.
/// HilbertChi has no one-variable expansion and is rejected.
PowerSeries1D coefficients(const FunctionFamily& family, int K);

/// Tail descriptor that coefficients(family, K) would attach, computed without
/// expanding the series.
TailBound tail_for(const FunctionFamily& family, int K);

/// Homogeneous-part norms s_1..s_K on the polydisk. One-variable families are
/// treated as functions of z1.
HomogeneousSums homogeneous_sums(const FunctionFamily& family, int K);

/// Complex coefficients of N(z)/D(z) up to degree K, with D(0) = 1.
std::vector<Complex> divide_series(const std::vector<Complex>& numerator,
                                   const std::vector<Complex>& denominator, int K);

}  // namespace bohr
