#pragma once

#include <functional>

namespace bohr {

struct ScanOptions {
  int uniform_points = 2048;
  // Extra points spaced logarithmically in (hi - a), resolving minima that
  // sit very close to the right end of the interval.
  int boundary_points = 256;
  double argument_tol = 1e-12;
};

struct ScanResult {
  double value;
  double argmin;
};

/// Global minimum of f on [lo, hi] by a grid scan seeded golden-section search.
///
/// The grid minimum is refined inside the bracket formed by its two grid
/// neighbours. A refined point replaces the grid point only if it is strictly
/// smaller; ties between grid points resolve to the smallest argument, so the
/// result does not depend on evaluation order.
ScanResult scan_minimize(const std::function<double(double)>& f, double lo, double hi,
                         const ScanOptions& opts = {});

/// Golden-section search on [lo, hi]; assumes f unimodal there.
ScanResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                          double tol);

/// Root of a monotone function with f(lo) and f(hi) of opposite sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                   int max_iter);

}  // namespace bohr
