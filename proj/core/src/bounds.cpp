#include "hh/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hh {

const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::holds: return "holds";
    case BoundVerdict::violated: return "violated";
    case BoundVerdict::hypotheses_unmet: return "hypotheses_unmet";
  }
  return "?";
}

bool verify_elementary(double c, double d) {
  if (c < 0.0 || d < 0.0) throw std::domain_error("verify_elementary needs c,d >= 0");
  return c * d <= 0.5 * (c * c + d * d);
}

namespace {

double eval_or_throw(const Expr& f, double x) {
  EvalOutcome r = f.eval(x);
  if (!r.ok()) throw QuadDomainError(x, r.fault);
  return r.value;
}

CertificateSummary summarize(const std::string& role, const ConvexityCertificate& c) {
  return {role, to_string(c.spec.kind), c.verdict, c.worst_violation};
}

CertificateSummary summarize(const std::string& role, const MonotonicityCertificate& c) {
  return {role, "non_increasing", c.verdict, c.worst_violation};
}

bool all_certified(const BoundReport& r) {
  return std::all_of(r.certificates.begin(), r.certificates.end(),
                     [](const CertificateSummary& c) {
                       return c.verdict == CertVerdict::certified;
                     });
}

// Verdict from a chain of links lhs_i <= rhs_i; margin is the tightest link.
void settle(BoundReport& r, const std::vector<std::pair<double, double>>& links,
            const Tolerances& tol) {
  const double vtol = tol.effective_verify_tol(r.quad_error);
  r.quantities["verify_tol"] = vtol;
  double margin = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (const auto& [lhs, rhs] : links) {
    margin = std::min(margin, rhs - lhs);
    if (!(lhs <= rhs + vtol)) ok = false;
  }
  r.margin = margin;
  if (!all_certified(r)) {
    r.verdict = BoundVerdict::hypotheses_unmet;
    r.notes.push_back("hypothesis certificate not certified; no inequality claim made");
  } else {
    r.verdict = ok ? BoundVerdict::holds : BoundVerdict::violated;
  }
}

void fault_out(BoundReport& r, const std::string& what) {
  r.verdict = BoundVerdict::hypotheses_unmet;
  r.notes.push_back(what);
}

// Pointwise product of the f_i. Single-element lists reduce to the bare
// function with identical arithmetic, so gill_bound == product_bound(n=1)
// bit-for-bit.
RealFn product_fn(const std::vector<Expr>& fs) {
  return [fs](double x) {
    double v = eval_or_throw(fs[0], x);
    for (std::size_t i = 1; i < fs.size(); ++i) v *= eval_or_throw(fs[i], x);
    return v;
  };
}

}  // namespace

BoundReport classic_hadamard(const Expr& f, const Interval& iv, const Tolerances& tol) {
  BoundReport r{"classic", {f.pretty()}, iv, {}, {}, 0.0, {}, BoundVerdict::hypotheses_unmet,
                0.0, {}};
  r.certificates.push_back(
      summarize("f convex", certify(f, {ClassKind::convex}, iv, tol.grid, tol.certify_tol)));
  try {
    const double lhs = eval_or_throw(f, iv.midpoint());
    const double fa = eval_or_throw(f, iv.a);
    const double fb = eval_or_throw(f, iv.b);
    QuadResult q = integrate(f, iv, tol.quad_tol);
    if (!q.converged) r.notes.push_back("quadrature hit max depth; degraded confidence");
    const double mid = q.value / iv.width();
    r.quad_error = q.err_estimate / iv.width();
    const double rhs = 0.5 * (fa + fb);
    r.quantities = {{"lhs", lhs}, {"integral_mean", mid}, {"rhs", rhs},
                    {"f_a", fa}, {"f_b", fb}};
    settle(r, {{lhs, mid}, {mid, rhs}}, tol);
  } catch (const std::exception& e) {
    fault_out(r, e.what());
  }
  return r;
}

BoundReport product_bound(const std::vector<Expr>& fs, const Interval& iv,
                          bool concave_variant, const Tolerances& tol) {
  if (fs.empty()) throw std::invalid_argument("product_bound needs n >= 1 functions");
  BoundReport r{"thm21_product", {}, iv, {{"n", double(fs.size())}}, {}, 0.0, {},
                BoundVerdict::hypotheses_unmet, 0.0, {}};
  const ClassKind kind = concave_variant ? ClassKind::log_concave : ClassKind::log_convex;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    r.expressions.push_back(fs[i].pretty());
    r.certificates.push_back(summarize("f" + std::to_string(i + 1) + " " + to_string(kind),
                                       certify(fs[i], {kind}, iv, tol.grid, tol.certify_tol)));
  }
  try {
    RealFn prod = product_fn(fs);
    const double pa = prod(iv.a);
    const double pb = prod(iv.b);
    if (!(pa > 0.0) || !(pb > 0.0)) {
      fault_out(r, "endpoint product is not positive");
      return r;
    }
    QuadResult q = integrate(prod, iv, tol.quad_tol);
    if (!q.converged) r.notes.push_back("quadrature hit max depth; degraded confidence");
    const double mean = q.value / iv.width();
    r.quad_error = q.err_estimate / iv.width();
    const double rhs = log_mean(pa, pb);
    r.quantities = {{"integral_mean", mean}, {"rhs", rhs}, {"p_a", pa}, {"p_b", pb}};
    if (concave_variant) settle(r, {{rhs, mean}}, tol);
    else settle(r, {{mean, rhs}}, tol);
  } catch (const std::exception& e) {
    fault_out(r, e.what());
  }
  return r;
}

BoundReport gill_bound(const Expr& f, const Interval& iv, bool concave_variant,
                       const Tolerances& tol) {
  BoundReport r = product_bound({f}, iv, concave_variant, tol);
  r.theorem_id = "gill";
  r.params.erase("n");
  return r;
}

BoundReport split_point_bound(const std::vector<Expr>& fs, const Interval& iv,
                              SplitDirection direction, const Tolerances& tol) {
  if (fs.empty()) throw std::invalid_argument("split_point_bound needs n >= 1 functions");
  const bool minimize = direction == SplitDirection::min_logconvex;
  BoundReport r{fs.size() == 1 ? "cor1" : "cor22", {}, iv, {{"n", double(fs.size())}},
                {}, 0.0, {}, BoundVerdict::hypotheses_unmet, 0.0, {}};
  const ClassKind kind = minimize ? ClassKind::log_convex : ClassKind::log_concave;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    r.expressions.push_back(fs[i].pretty());
    r.certificates.push_back(summarize("f" + std::to_string(i + 1) + " " + to_string(kind),
                                       certify(fs[i], {kind}, iv, tol.grid, tol.certify_tol)));
  }
  try {
    RealFn prod = product_fn(fs);
    const double pa = prod(iv.a);
    const double pb = prod(iv.b);
    if (!(pa > 0.0) || !(pb > 0.0)) {
      fault_out(r, "endpoint product is not positive");
      return r;
    }
    RealFn phi = [&prod, &iv, pa, pb](double x) {
      const double px = prod(x);
      return ((x - iv.a) * log_mean(pa, px) + (iv.b - x) * log_mean(px, pb)) / iv.width();
    };
    OptimumResult opt = minimize ? minimize_scalar(phi, iv, tol.opt_grid, tol.opt_tol)
                                 : maximize_scalar(phi, iv, tol.opt_grid, tol.opt_tol);
    QuadResult q = integrate(prod, iv, tol.quad_tol);
    if (!q.converged) r.notes.push_back("quadrature hit max depth; degraded confidence");
    const double mean = q.value / iv.width();
    r.quad_error = q.err_estimate / iv.width();
    const double gill_value = log_mean(pa, pb);
    r.quantities = {{"integral_mean", mean},
                    {"optimum", opt.value},
                    {minimize ? "minimizer_x" : "maximizer_x", opt.x_star},
                    {"gill_value", gill_value},
                    {"p_a", pa},
                    {"p_b", pb}};
    if (minimize) {
      // phi degenerates to the plain log-mean bound at x -> a, so the
      // optimum can never exceed it
      settle(r, {{mean, opt.value}, {opt.value, gill_value}}, tol);
    } else {
      settle(r, {{opt.value, mean}, {gill_value, opt.value}}, tol);
    }
  } catch (const std::exception& e) {
    fault_out(r, e.what());
  }
  return r;
}

BoundReport sandwich_e9(const Expr& f, const Expr& g, const Interval& iv,
                        const Tolerances& tol) {
  BoundReport r{"thm22_sandwich", {f.pretty(), g.pretty()}, iv, {}, {}, 0.0, {},
                BoundVerdict::hypotheses_unmet, 0.0, {}};
  r.certificates.push_back(summarize(
      "f log_convex", certify(f, {ClassKind::log_convex}, iv, tol.grid, tol.certify_tol)));
  r.certificates.push_back(summarize(
      "g log_convex", certify(g, {ClassKind::log_convex}, iv, tol.grid, tol.certify_tol)));
  try {
    const double mid = iv.midpoint();
    const double lhs = eval_or_throw(f, mid) * eval_or_throw(g, mid);
    QuadResult q = integrate_symmetric_product(f, g, iv, tol.quad_tol);
    if (!q.converged) r.notes.push_back("quadrature hit max depth; degraded confidence");
    const double middle = 0.5 * q.value / iv.width();
    r.quad_error = 0.5 * q.err_estimate / iv.width();
    const double rhs = 0.5 * (eval_or_throw(f, iv.a) * eval_or_throw(f, iv.b) +
                              eval_or_throw(g, iv.a) * eval_or_throw(g, iv.b));
    r.quantities = {{"lhs", lhs}, {"middle", middle}, {"rhs", rhs}};
    settle(r, {{lhs, middle}, {middle, rhs}}, tol);
  } catch (const std::exception& e) {
    fault_out(r, e.what());
  }
  return r;
}

BoundReport sandwich_e17(const Expr& f, const Expr& g, const Interval& iv,
                         const Tolerances& tol) {
  BoundReport r{"thm23_sandwich", {f.pretty(), g.pretty()}, iv, {}, {}, 0.0, {},
                BoundVerdict::hypotheses_unmet, 0.0, {}};
  r.certificates.push_back(summarize(
      "f log_convex", certify(f, {ClassKind::log_convex}, iv, tol.grid, tol.certify_tol)));
  r.certificates.push_back(summarize(
      "g log_convex", certify(g, {ClassKind::log_convex}, iv, tol.grid, tol.certify_tol)));
  try {
    const double mid = iv.midpoint();
    const double lhs = 2.0 * eval_or_throw(f, mid) * eval_or_throw(g, mid);
    RealFn ff = fn_of(f), gg = fn_of(g);
    RealFn sq = [ff, gg](double x) {
      const double fv = ff(x), gv = gg(x);
      return fv * fv + gv * gv;
    };
    QuadResult q = integrate(sq, iv, tol.quad_tol);
    if (!q.converged) r.notes.push_back("quadrature hit max depth; degraded confidence");
    const double middle = q.value / iv.width();
    r.quad_error = q.err_estimate / iv.width();
    const double fa = eval_or_throw(f, iv.a), fb = eval_or_throw(f, iv.b);
    const double ga = eval_or_throw(g, iv.a), gb = eval_or_throw(g, iv.b);
    const double rhs =
        0.5 * (fa + fb) * log_mean(fa, fb) + 0.5 * (ga + gb) * log_mean(ga, gb);
    r.quantities = {{"lhs", lhs}, {"middle", middle}, {"rhs", rhs}};
    settle(r, {{lhs, middle}, {middle, rhs}}, tol);
  } catch (const std::exception& e) {
    fault_out(r, e.what());
  }
  return r;
}

BoundReport alpham_bound(const Expr& f, const Expr& g, const Interval& iv, double a1,
                         double m1, double a2, double m2, const Tolerances& tol) {
  ClassSpec fspec{ClassKind::alpha_m_convex, m1, a1};
  ClassSpec gspec{ClassKind::alpha_m_convex, m2, a2};
  fspec.validate();
  gspec.validate();
  BoundReport r{"thm25_alpham", {f.pretty(), g.pretty()}, iv,
                {{"alpha1", a1}, {"m1", m1}, {"alpha2", a2}, {"m2", m2}}, {}, 0.0, {},
                BoundVerdict::hypotheses_unmet, 0.0, {}};
  r.certificates.push_back(
      summarize("f alpha_m_convex", certify(f, fspec, iv, tol.grid, tol.certify_tol)));
  r.certificates.push_back(summarize(
      "f non_increasing", certify_monotone(f, iv, tol.mono_n, tol.certify_tol)));
  r.certificates.push_back(
      summarize("g alpha_m_convex", certify(g, gspec, iv, tol.grid, tol.certify_tol)));
  r.certificates.push_back(summarize(
      "g non_increasing", certify_monotone(g, iv, tol.mono_n, tol.certify_tol)));
  try {
    // scaled evaluation points b/m, a/m can exceed [a,b]; recorded in notes
    const double fa = eval_or_throw(f, iv.a), fb = eval_or_throw(f, iv.b);
    const double ga = eval_or_throw(g, iv.a), gb = eval_or_throw(g, iv.b);
    const double f_bm = eval_or_throw(f, iv.b / m1), f_am = eval_or_throw(f, iv.a / m1);
    const double g_bm = eval_or_throw(g, iv.b / m2), g_am = eval_or_throw(g, iv.a / m2);
    if (m1 < 1.0 || m2 < 1.0)
      r.notes.push_back("evaluation range extends to " +
                        std::to_string(std::max(iv.b / m1, iv.b / m2)));

    auto c1 = [](double a) { return 1.0 / (2.0 * a + 1.0); };
    auto c2 = [](double a) { return 2.0 * a * a / ((a + 1.0) * (2.0 * a + 1.0)); };
    auto c3 = [](double a) { return 2.0 * a / ((a + 1.0) * (2.0 * a + 1.0)); };

    const double E1 =
        0.5 * (c1(a1) * fa * fa + c2(a1) * m1 * m1 * f_bm * f_bm +
               c3(a1) * m1 * fa * f_bm + c1(a2) * ga * ga +
               c2(a2) * m2 * m2 * g_bm * g_bm + c3(a2) * m2 * ga * g_bm);
    const double E2 =
        0.5 * (c1(a1) * fb * fb + c2(a1) * m1 * m1 * f_am * f_am +
               c3(a1) * m1 * fb * f_am + c1(a2) * gb * gb +
               c2(a2) * m2 * m2 * g_am * g_am + c3(a2) * m2 * gb * g_am);

    RealFn ff = fn_of(f), gg = fn_of(g);
    RealFn fg = [ff, gg](double x) { return ff(x) * gg(x); };
    QuadResult q = integrate(fg, iv, tol.quad_tol);
    if (!q.converged) r.notes.push_back("quadrature hit max depth; degraded confidence");
    const double lhs = q.value / iv.width();
    r.quad_error = q.err_estimate / iv.width();
    const double rhs = std::min(E1, E2);
    r.quantities = {{"lhs", lhs}, {"E1", E1}, {"E2", E2}, {"rhs", rhs}};
    settle(r, {{lhs, rhs}}, tol);
  } catch (const std::exception& e) {
    fault_out(r, e.what());
  }
  return r;
}

BoundReport mconvex_bound(const Expr& f, const Expr& g, const Interval& iv, double m1,
                          double m2, const Tolerances& tol) {
  ClassSpec fspec{ClassKind::m_convex, m1};
  ClassSpec gspec{ClassKind::m_convex, m2};
  fspec.validate();
  gspec.validate();
  BoundReport r{"thm24_mconvex", {f.pretty(), g.pretty()}, iv,
                {{"m1", m1}, {"m2", m2}}, {}, 0.0, {}, BoundVerdict::hypotheses_unmet,
                0.0, {}};
  r.certificates.push_back(
      summarize("f m_convex", certify(f, fspec, iv, tol.grid, tol.certify_tol)));
  r.certificates.push_back(summarize(
      "f non_increasing", certify_monotone(f, iv, tol.mono_n, tol.certify_tol)));
  r.certificates.push_back(
      summarize("g m_convex", certify(g, gspec, iv, tol.grid, tol.certify_tol)));
  r.certificates.push_back(summarize(
      "g non_increasing", certify_monotone(g, iv, tol.mono_n, tol.certify_tol)));
  try {
    const double fa = eval_or_throw(f, iv.a), fb = eval_or_throw(f, iv.b);
    const double ga = eval_or_throw(g, iv.a), gb = eval_or_throw(g, iv.b);
    const double f_bm = eval_or_throw(f, iv.b / m1), f_am = eval_or_throw(f, iv.a / m1);
    const double g_bm = eval_or_throw(g, iv.b / m2), g_am = eval_or_throw(g, iv.a / m2);
    if (m1 < 1.0 || m2 < 1.0)
      r.notes.push_back("evaluation range extends to " +
                        std::to_string(std::max(iv.b / m1, iv.b / m2)));

    const double S1 = (fa * fa + ga * ga + m1 * fa * f_bm + m2 * ga * g_bm +
                       m1 * m1 * f_bm * f_bm + m2 * m2 * g_bm * g_bm) / 6.0;
    const double S2 = (fb * fb + gb * gb + m1 * fb * f_am + m2 * gb * g_am +
                       m1 * m1 * f_am * f_am + m2 * m2 * g_am * g_am) / 6.0;

    RealFn ff = fn_of(f), gg = fn_of(g);
    RealFn fg = [ff, gg](double x) { return ff(x) * gg(x); };
    QuadResult q = integrate(fg, iv, tol.quad_tol);
    if (!q.converged) r.notes.push_back("quadrature hit max depth; degraded confidence");
    const double lhs = q.value / iv.width();
    r.quad_error = q.err_estimate / iv.width();
    const double rhs = std::min(S1, S2);
    r.quantities = {{"lhs", lhs}, {"S1", S1}, {"S2", S2}, {"rhs", rhs}};
    settle(r, {{lhs, rhs}}, tol);
  } catch (const std::exception& e) {
    fault_out(r, e.what());
  }
  return r;
}

}  // namespace hh
