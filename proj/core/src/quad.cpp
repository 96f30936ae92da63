#include "hh/quad.hpp"

#include <cmath>

namespace hh {

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1,1]; exact for degree <= 9.
constexpr double kNodes[5] = {
    -0.9061798459386639928, -0.5384693101056830910, 0.0,
    0.5384693101056830910, 0.9061798459386639928};
constexpr double kWeights[5] = {
    0.2369268850561890875, 0.4786286704993664680, 0.5688888888888888889,
    0.4786286704993664680, 0.2369268850561890875};

double panel(const RealFn& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += kWeights[i] * f(c + h * kNodes[i]);
  return s * h;
}

struct Adapt {
  const RealFn& f;
  double abs_tol;
  QuadResult out;

  // coarse is the single-panel estimate over [lo,hi]
  double refine(double lo, double hi, double coarse, double tol, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = panel(f, lo, mid);
    const double right = panel(f, mid, hi);
    const double fine = left + right;
    const double delta = std::fabs(fine - coarse);
    if (delta <= tol || depth >= kMaxQuadDepth) {
      if (depth >= kMaxQuadDepth && delta > tol) out.converged = false;
      out.err_estimate += delta;
      return fine;
    }
    ++out.subdivisions;
    return refine(lo, mid, left, 0.5 * tol, depth + 1) +
           refine(mid, hi, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

RealFn fn_of(const Expr& e) {
  NodePtr root = e.root_ptr();
  return [root](double x) {
    EvalOutcome r = Expr(root).eval(x);
    if (!r.ok()) throw QuadDomainError(x, r.fault);
    return r.value;
  };
}

QuadResult integrate(const RealFn& f, const Interval& iv, double rel_tol) {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-2))
    throw std::invalid_argument("rel_tol must be in [1e-14, 1e-2]");
  const double coarse = panel(f, iv.a, iv.b);
  Adapt ad{f, 0.0, {}};
  const double tol = std::max(rel_tol * std::fabs(coarse), 1e-14);
  ad.out.value = ad.refine(iv.a, iv.b, coarse, tol, 0);
  return ad.out;
}

QuadResult integrate(const Expr& f, const Interval& iv, double rel_tol) {
  return integrate(fn_of(f), iv, rel_tol);
}

QuadResult integrate_symmetric_product(const Expr& f, const Expr& g, const Interval& iv,
                                       double rel_tol) {
  RealFn ff = fn_of(f), gg = fn_of(g);
  const double s = iv.a + iv.b;
  RealFn integrand = [ff, gg, s](double x) {
    return ff(x) * ff(s - x) + gg(x) * gg(s - x);
  };
  return integrate(integrand, iv, rel_tol);
}

}  // namespace hh
