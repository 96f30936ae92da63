#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "hh/expr.hpp"
#include "hh/interval.hpp"

namespace hh {

/// Integral value plus an a-posteriori absolute error estimate.
struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;  // accumulated last-refinement deltas
  int subdivisions = 0;
  bool converged = true;      // false when max recursion depth was hit
};

/// Thrown when the integrand faults inside the integration interval.
class QuadDomainError : public std::runtime_error {
public:
  QuadDomainError(double abscissa, EvalFault fault)
      : std::runtime_error("integrand domain fault (" + std::string(to_string(fault)) +
                           ") at x=" + std::to_string(abscissa)),
        abscissa_(abscissa), fault_(fault) {}

  double abscissa() const { return abscissa_; }
  EvalFault fault() const { return fault_; }

private:
  double abscissa_;
  EvalFault fault_;
};

using RealFn = std::function<double(double)>;

/// Wraps an Expr as a plain callable; domain faults become QuadDomainError.
RealFn fn_of(const Expr& e);

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr int kMaxQuadDepth = 40;

/// Adaptive composite Gauss-Legendre (5-point panels, bisection refinement).
/// Heuristic target |value - true| <= max(rel_tol*|value|, 1e-14) for smooth
/// integrands. On hitting max depth the best value is returned with
/// converged = false.
QuadResult integrate(const RealFn& f, const Interval& iv, double rel_tol = kDefaultQuadTol);
QuadResult integrate(const Expr& f, const Interval& iv, double rel_tol = kDefaultQuadTol);

/// Integral of x -> f(x)*f(a+b-x) + g(x)*g(a+b-x) over [a,b].
QuadResult integrate_symmetric_product(const Expr& f, const Expr& g, const Interval& iv,
                                       double rel_tol = kDefaultQuadTol);

}  // namespace hh
