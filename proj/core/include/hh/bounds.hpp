#pragma once

#include <map>
#include <string>
#include <vector>

#include "hh/convexity.hpp"
#include "hh/expr.hpp"
#include "hh/interval.hpp"
#include "hh/means.hpp"
#include "hh/optimize.hpp"
#include "hh/quad.hpp"

namespace hh {

enum class BoundVerdict { holds, violated, hypotheses_unmet };
const char* to_string(BoundVerdict v);

/// Every numeric knob in one place; all are surfaced as CLI flags.
struct Tolerances {
  double quad_tol = kDefaultQuadTol;
  double certify_tol = kDefaultCertifyTol;
  double verify_tol = 1e-9;
  GridSpec grid{};
  int mono_n = 101;
  int opt_grid = kDefaultOptGrid;
  double opt_tol = kDefaultOptTol;

  // a verdict must never hinge on integration noise
  double effective_verify_tol(double quad_error) const {
    return std::max(verify_tol, 10.0 * quad_error);
  }
};

struct CertificateSummary {
  std::string role;         // which hypothesis this certificate backs
  std::string class_name;
  CertVerdict verdict;
  double worst_violation;
};

/// One theorem instance: all computed quantities, margins, quadrature error
/// estimates, and hypothesis-certificate summaries.
struct BoundReport {
  std::string theorem_id;
  std::vector<std::string> expressions;
  Interval interval;
  std::map<std::string, double> params;
  std::map<std::string, double> quantities;
  double quad_error = 0.0;
  std::vector<CertificateSummary> certificates;
  BoundVerdict verdict = BoundVerdict::hypotheses_unmet;
  double margin = 0.0;  // RHS - LHS at the tightest link
  std::vector<std::string> notes;
};

enum class SplitDirection { min_logconvex, max_logconcave };

// f((a+b)/2) <= mean of f <= (f(a)+f(b))/2, for convex f.
BoundReport classic_hadamard(const Expr& f, const Interval& iv, const Tolerances& tol = {});

// mean of f <= L(f(a), f(b)) for log-convex f; reversed when concave_variant.
BoundReport gill_bound(const Expr& f, const Interval& iv, bool concave_variant = false,
                       const Tolerances& tol = {});

// mean of prod f_i <= L(prod f_i(a), prod f_i(b)); reversed when concave_variant.
BoundReport product_bound(const std::vector<Expr>& fs, const Interval& iv,
                          bool concave_variant = false, const Tolerances& tol = {});

// Split-point refinement: optimize over x of
//   [(x-a) L(P(a),P(x)) + (b-x) L(P(x),P(b))] / (b-a),  P = prod f_i.
// min over log-convex inputs, max over log-concave.
BoundReport split_point_bound(const std::vector<Expr>& fs, const Interval& iv,
                              SplitDirection direction, const Tolerances& tol = {});

// f(mid)g(mid) <= (1/2) mean of [f(x)f(a+b-x)+g(x)g(a+b-x)] <= (f(a)f(b)+g(a)g(b))/2.
BoundReport sandwich_e9(const Expr& f, const Expr& g, const Interval& iv,
                        const Tolerances& tol = {});

// 2 f(mid)g(mid) <= mean of (f^2+g^2) <= avg(f)L(f(a),f(b)) + avg(g)L(g(a),g(b)).
BoundReport sandwich_e17(const Expr& f, const Expr& g, const Interval& iv,
                         const Tolerances& tol = {});

// mean of fg <= min{S1,S2} for non-increasing m1-/m2-convex f,g.
BoundReport mconvex_bound(const Expr& f, const Expr& g, const Interval& iv, double m1,
                          double m2, const Tolerances& tol = {});

// mean of fg <= min{E1,E2} for non-increasing (a1,m1)-/(a2,m2)-convex f,g.
BoundReport alpham_bound(const Expr& f, const Expr& g, const Interval& iv, double a1,
                         double m1, double a2, double m2, const Tolerances& tol = {});

/// cd <= (c^2+d^2)/2 for c,d >= 0. Property-test anchor.
bool verify_elementary(double c, double d);

}  // namespace hh
