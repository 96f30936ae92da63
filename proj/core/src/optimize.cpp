#include "hh/optimize.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hh {

namespace {
constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5)-1)/2
}

OptimumResult minimize_scalar(const RealFn& phi, const Interval& iv, int n_grid,
                              double refine_tol) {
  if (n_grid < 3) throw std::invalid_argument("n_grid must be >= 3");

  std::vector<double> xs(n_grid), vals(n_grid);
  std::vector<bool> ok(n_grid, false);
  int evaluations = 0;
  int best = -1;
  for (int i = 0; i < n_grid; ++i) {
    xs[i] = iv.a + (iv.b - iv.a) * i / (n_grid - 1);
    try {
      vals[i] = phi(xs[i]);
      ++evaluations;
      ok[i] = true;
      if (best < 0 || vals[i] < vals[best]) best = i;
    } catch (const QuadDomainError&) {
      // excluded grid point
    }
  }
  if (best < 0) throw std::runtime_error("objective faulted at every grid point");

  double lo = xs[best > 0 ? best - 1 : best];
  double hi = xs[best + 1 < n_grid ? best + 1 : best];
  double best_x = xs[best];
  double best_v = vals[best];

  bool refined = false;
  if (hi > lo) {
    double c = hi - (hi - lo) * kInvPhi;
    double d = lo + (hi - lo) * kInvPhi;
    const double target = refine_tol * (iv.b - iv.a);
    try {
      double fc = phi(c), fd = phi(d);
      evaluations += 2;
      while (hi - lo > target) {
        if (fc < fd) {
          hi = d; d = c; fd = fc;
          c = hi - (hi - lo) * kInvPhi;
          fc = phi(c);
        } else {
          lo = c; c = d; fc = fd;
          d = lo + (hi - lo) * kInvPhi;
          fd = phi(d);
        }
        ++evaluations;
      }
      refined = true;
      const double x = fc < fd ? c : d;
      const double v = fc < fd ? fc : fd;
      if (v < best_v) { best_v = v; best_x = x; }
    } catch (const QuadDomainError&) {
      // fall back to the grid minimum
    }
  }
  return OptimumResult{best_x, best_v, evaluations, refined};
}

OptimumResult maximize_scalar(const RealFn& phi, const Interval& iv, int n_grid,
                              double refine_tol) {
  RealFn neg = [&phi](double x) { return -phi(x); };
  OptimumResult r = minimize_scalar(neg, iv, n_grid, refine_tol);
  r.value = -r.value;
  return r;
}

}  // namespace hh
