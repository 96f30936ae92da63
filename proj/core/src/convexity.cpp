#include "hh/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hh {

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::convex: return "convex";
    case ClassKind::log_convex: return "log_convex";
    case ClassKind::log_concave: return "log_concave";
    case ClassKind::m_convex: return "m_convex";
    case ClassKind::alpha_m_convex: return "alpha_m_convex";
  }
  return "?";
}

std::optional<ClassKind> class_kind_from_string(const std::string& s) {
  if (s == "convex") return ClassKind::convex;
  if (s == "log_convex") return ClassKind::log_convex;
  if (s == "log_concave") return ClassKind::log_concave;
  if (s == "m_convex") return ClassKind::m_convex;
  if (s == "alpha_m_convex") return ClassKind::alpha_m_convex;
  return std::nullopt;
}

const char* to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::certified: return "certified";
    case CertVerdict::refuted: return "refuted";
    case CertVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

void ClassSpec::validate() const {
  const bool needs_m = kind == ClassKind::m_convex || kind == ClassKind::alpha_m_convex;
  const bool needs_alpha = kind == ClassKind::alpha_m_convex;
  if (needs_m && !(m > 0.0 && m <= 1.0))
    throw std::invalid_argument("m must be in (0,1]");
  if (needs_alpha && !(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must be in (0,1]");
}

namespace {

// Effective (alpha, m) for the convexity-style kinds. convex = (1,1) and
// m_convex = (1,m) share the alpha_m kernel, which makes the specialization
// identities bit-exact (pow(t,1.0) == t).
struct AlphaM {
  double alpha, m;
};

AlphaM alpha_m_of(const ClassSpec& s) {
  switch (s.kind) {
    case ClassKind::convex: return {1.0, 1.0};
    case ClassKind::m_convex: return {1.0, s.m};
    case ClassKind::alpha_m_convex: return {s.alpha, s.m};
    default: return {1.0, 1.0};
  }
}

bool is_log_kind(ClassKind k) {
  return k == ClassKind::log_convex || k == ClassKind::log_concave;
}

std::string fault_at(double x, EvalFault f) {
  return std::string("evaluation fault (") + to_string(f) + ") at x=" + std::to_string(x);
}

}  // namespace

EvalOutcome inequality_slack(const Expr& f, const ClassSpec& spec, double x, double y,
                             double t) {
  if (is_log_kind(spec.kind)) {
    const double comb = t * x + (1.0 - t) * y;
    EvalOutcome fx = f.eval(x), fy = f.eval(y), fc = f.eval(comb);
    if (!fx.ok()) return fx;
    if (!fy.ok()) return fy;
    if (!fc.ok()) return fc;
    if (fx.value <= 0.0 || fy.value <= 0.0 || fc.value <= 0.0)
      return EvalOutcome::faulted(EvalFault::log_domain);
    const double rhs = std::pow(fx.value, t) * std::pow(fy.value, 1.0 - t);
    const double slack = (spec.kind == ClassKind::log_convex) ? fc.value - rhs
                                                              : rhs - fc.value;
    return EvalOutcome::of(slack);
  }
  const AlphaM am = alpha_m_of(spec);
  const double comb = t * x + am.m * (1.0 - t) * y;
  EvalOutcome fx = f.eval(x), fy = f.eval(y), fc = f.eval(comb);
  if (!fx.ok()) return fx;
  if (!fy.ok()) return fy;
  if (!fc.ok()) return fc;
  const double ta = std::pow(t, am.alpha);
  const double rhs = ta * fx.value + am.m * (1.0 - ta) * fy.value;
  return EvalOutcome::of(fc.value - rhs);
}

ConvexityCertificate certify(const Expr& f, const ClassSpec& spec, const Interval& domain,
                             GridSpec grid, double certify_tol) {
  spec.validate();
  if (grid.n_xy < 2 || grid.n_t < 2) throw std::invalid_argument("grid too small");

  ConvexityCertificate cert{spec, domain, grid, certify_tol,
                            -std::numeric_limits<double>::infinity(),
                            CertVerdict::certified, std::nullopt, std::nullopt,
                            std::nullopt, domain.a, domain.b};

  std::vector<double> xs(grid.n_xy), ts(grid.n_t), fxs(grid.n_xy);
  for (int i = 0; i < grid.n_xy; ++i)
    xs[i] = domain.a + (domain.b - domain.a) * i / (grid.n_xy - 1);
  for (int j = 0; j < grid.n_t; ++j) ts[j] = double(j) / (grid.n_t - 1);

  const bool log_kind = is_log_kind(spec.kind);
  const AlphaM am = alpha_m_of(spec);

  for (int i = 0; i < grid.n_xy; ++i) {
    EvalOutcome r = f.eval(xs[i]);
    if (!r.ok()) {
      cert.verdict = CertVerdict::inconclusive;
      cert.fault_note = fault_at(xs[i], r.fault);
      return cert;
    }
    if (log_kind && r.value <= 0.0) {
      cert.verdict = CertVerdict::refuted;
      cert.counterexample = Counterexample{xs[i], xs[i], 1.0, 0.0};
      cert.fault_note = "non-positive value at x=" + std::to_string(xs[i]);
      return cert;
    }
    fxs[i] = r.value;
  }

  std::vector<double> tpow(grid.n_t);
  for (int j = 0; j < grid.n_t; ++j)
    tpow[j] = log_kind ? ts[j] : std::pow(ts[j], am.alpha);

  for (int i = 0; i < grid.n_xy; ++i) {
    for (int k = 0; k < grid.n_xy; ++k) {
      for (int j = 0; j < grid.n_t; ++j) {
        const double t = ts[j];
        double comb, rhs;
        if (log_kind) {
          comb = t * xs[i] + (1.0 - t) * xs[k];
          rhs = std::pow(fxs[i], t) * std::pow(fxs[k], 1.0 - t);
        } else {
          comb = t * xs[i] + am.m * (1.0 - t) * xs[k];
          const double ta = tpow[j];
          rhs = ta * fxs[i] + am.m * (1.0 - ta) * fxs[k];
        }
        cert.checked_lo = std::min(cert.checked_lo, comb);
        cert.checked_hi = std::max(cert.checked_hi, comb);
        EvalOutcome fc = f.eval(comb);
        if (!fc.ok()) {
          cert.verdict = CertVerdict::inconclusive;
          cert.fault_note = fault_at(comb, fc.fault);
          return cert;
        }
        if (log_kind && fc.value <= 0.0) {
          cert.verdict = CertVerdict::refuted;
          cert.counterexample = Counterexample{xs[i], xs[k], t, 0.0};
          cert.fault_note = "non-positive value at x=" + std::to_string(comb);
          return cert;
        }
        double slack;
        if (log_kind) {
          slack = (spec.kind == ClassKind::log_convex) ? fc.value - rhs : rhs - fc.value;
        } else {
          slack = fc.value - rhs;
        }
        if (slack > cert.worst_violation) {
          cert.worst_violation = slack;
          if (slack > certify_tol)
            cert.counterexample = Counterexample{xs[i], xs[k], t, slack};
        }
      }
    }
  }

  // ties at exactly certify_tol resolve to certified
  if (cert.worst_violation > certify_tol) {
    cert.verdict = CertVerdict::refuted;
  } else {
    cert.verdict = CertVerdict::certified;
    cert.counterexample.reset();
  }

  if (spec.kind == ClassKind::m_convex || spec.kind == ClassKind::alpha_m_convex) {
    EvalOutcome f0 = f.eval(0.0);
    if (f0.ok()) cert.in_k_class = (f0.value <= 0.0);
  }
  return cert;
}

MonotonicityCertificate certify_monotone(const Expr& f, const Interval& domain, int n,
                                         double certify_tol) {
  if (n < 2) throw std::invalid_argument("need at least 2 samples");
  MonotonicityCertificate cert{domain, n, certify_tol,
                               -std::numeric_limits<double>::infinity(),
                               CertVerdict::certified, std::nullopt, std::nullopt};
  double prev_x = domain.a;
  EvalOutcome prev = f.eval(prev_x);
  if (!prev.ok()) {
    cert.verdict = CertVerdict::inconclusive;
    cert.fault_note = fault_at(prev_x, prev.fault);
    return cert;
  }
  for (int i = 1; i < n; ++i) {
    const double x = domain.a + (domain.b - domain.a) * i / (n - 1);
    EvalOutcome cur = f.eval(x);
    if (!cur.ok()) {
      cert.verdict = CertVerdict::inconclusive;
      cert.fault_note = fault_at(x, cur.fault);
      return cert;
    }
    const double rise = cur.value - prev.value;
    if (rise > cert.worst_violation) {
      cert.worst_violation = rise;
      if (rise > certify_tol) cert.counterexample = Counterexample{prev_x, x, 0.0, rise};
    }
    prev = cur;
    prev_x = x;
  }
  if (cert.worst_violation > certify_tol) cert.verdict = CertVerdict::refuted;
  else cert.counterexample.reset();
  return cert;
}

}  // namespace hh
