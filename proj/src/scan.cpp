#include "bohr/scan.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "bohr/params.hpp"

namespace bohr {

namespace {

// Relative slack under which two function values count as a tie.
constexpr double kTieRel = 1e-13;

bool strictly_less(double a, double b) {
  return a < b - kTieRel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

ScanResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {f(x), x};
}

ScanResult scan_minimize(const std::function<double(double)>& f, double lo, double hi,
                         const ScanOptions& opts) {
  if (!(lo <= hi)) throw DomainError("scan_minimize: empty interval");
  if (lo == hi) return {f(lo), lo};

  std::vector<double> grid;
  grid.reserve(opts.uniform_points + opts.boundary_points);
  const int n = std::max(opts.uniform_points, 2);
  for (int i = 0; i < n; ++i) grid.push_back(lo + (hi - lo) * i / (n - 1));
  if (opts.boundary_points > 0) {
    // gaps hi - a from (hi - lo) * 1e-12 up to (hi - lo) / n
    const double span = hi - lo;
    const double g0 = std::log(span * 1e-12);
    const double g1 = std::log(span / n);
    for (int i = 0; i < opts.boundary_points; ++i) {
      const double t = static_cast<double>(i) / std::max(opts.boundary_points - 1, 1);
      grid.push_back(hi - std::exp(g0 + (g1 - g0) * t));
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::size_t best = 0;
  double best_val = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (strictly_less(v, best_val)) {
      best_val = v;
      best = i;
    }
  }

  const double blo = grid[best == 0 ? 0 : best - 1];
  const double bhi = grid[std::min(best + 1, grid.size() - 1)];
  ScanResult result{best_val, grid[best]};
  if (bhi > blo) {
    const ScanResult refined = golden_section(f, blo, bhi, opts.argument_tol);
    if (strictly_less(refined.value, best_val)) result = refined;
  }
  return result;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol,
                   int max_iter) {
  double flo = f(lo);
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace bohr
