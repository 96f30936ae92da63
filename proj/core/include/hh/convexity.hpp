#pragma once

#include <optional>
#include <string>

#include "hh/expr.hpp"
#include "hh/interval.hpp"

namespace hh {

enum class ClassKind { convex, log_convex, log_concave, m_convex, alpha_m_convex };

const char* to_string(ClassKind k);
std::optional<ClassKind> class_kind_from_string(const std::string& s);

/// Which class-defining inequality to test, plus its parameters.
/// m is meaningful for m_convex and alpha_m_convex; alpha for alpha_m_convex.
struct ClassSpec {
  ClassKind kind;
  double m = 1.0;
  double alpha = 1.0;

  void validate() const;  // throws std::invalid_argument on bad parameters
};

struct GridSpec {
  int n_xy = 41;
  int n_t = 21;
};

enum class CertVerdict { certified, refuted, inconclusive };
const char* to_string(CertVerdict v);

struct Counterexample {
  double x, y, t;
  double violation;
};

inline constexpr double kDefaultCertifyTol = 1e-9;

/// Grid-resolution-qualified membership verdict. "certified" means no
/// violation above certify_tol was found at resolution (n_xy, n_t), not a
/// proof. checked_lo/checked_hi record the full evaluation range actually
/// touched (combined points can fall outside [a,b] when m < 1).
struct ConvexityCertificate {
  ClassSpec spec;
  Interval domain;
  GridSpec grid;
  double certify_tol;
  double worst_violation;  // max over grid of LHS - RHS; <= 0 means satisfied
  CertVerdict verdict;
  std::optional<Counterexample> counterexample;
  std::optional<bool> in_k_class;  // f(0) <= 0, for the m-parameterized kinds
  std::optional<std::string> fault_note;
  double checked_lo = 0.0;
  double checked_hi = 0.0;
};

ConvexityCertificate certify(const Expr& f, const ClassSpec& spec, const Interval& domain,
                             GridSpec grid = {}, double certify_tol = kDefaultCertifyTol);

struct MonotonicityCertificate {
  Interval domain;
  int n;
  double certify_tol;
  double worst_violation;  // max adjacent increase
  CertVerdict verdict;
  std::optional<Counterexample> counterexample;  // (x, y) adjacent pair, t unused
  std::optional<std::string> fault_note;
};

/// Checks f(x_i) >= f(x_{i+1}) - certify_tol over n equispaced samples.
MonotonicityCertificate certify_monotone(const Expr& f, const Interval& domain, int n = 101,
                                         double certify_tol = kDefaultCertifyTol);

/// Re-evaluates the class-defining inequality at one point; returns LHS - RHS.
/// Used to independently confirm refutation counterexamples.
EvalOutcome inequality_slack(const Expr& f, const ClassSpec& spec, double x, double y, double t);

}  // namespace hh
