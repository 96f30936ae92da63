#include "hh/verify.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>

namespace hh {

const char* to_string(Family f) {
  switch (f) {
    case Family::exp_quadratic: return "exp_quadratic";
    case Family::positive_quadratic: return "positive_quadratic";
    case Family::shifted_power: return "shifted_power";
    case Family::constant: return "constant";
  }
  return "?";
}

namespace {

std::string num(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::fabs(v));
  assert(ec == std::errc{});
  return std::string(buf, ptr);
}

// "+c" or "-c" so coefficients concatenate into valid DSL source
std::string signed_num(double v) {
  return (v < 0 ? "-" : "+") + num(v);
}

std::string draw_source(const GeneratorSpec& spec, const Interval& iv, SplitMix64& rng) {
  const double lo = spec.coeff_lo, hi = spec.coeff_hi;
  switch (spec.family) {
    case Family::exp_quadratic: {
      // p >= 0 keeps the exponent convex (log-convex draw); p <= 0 for the
      // log-concave variant
      const bool concave = spec.cls.kind == ClassKind::log_concave;
      const double p = concave ? rng.uniform(std::min(lo, 0.0), 0.0)
                               : rng.uniform(0.0, std::max(hi, 0.0));
      const double q = rng.uniform(lo, hi);
      const double r = rng.uniform(lo, hi);
      return "exp(" + num(p) + "*x^2" + signed_num(q) + "*x" + signed_num(r) + ")";
    }
    case Family::positive_quadratic: {
      const double p = rng.uniform(0.0, std::max(hi, 0.0));
      const double q = rng.uniform(lo, hi);
      const double r = rng.uniform(0.1, std::max(hi, 0.2));
      return num(p) + "*x^2" + signed_num(q) + "*x" + signed_num(r);
    }
    case Family::shifted_power: {
      const double c = rng.uniform(iv.b, iv.b + 2.0);
      const int k = rng.pick(2) == 0 ? 2 : 4;
      return "(" + num(c) + "-x)^" + std::to_string(k);
    }
    case Family::constant:
      return num(rng.uniform(0.1, 2.0));
  }
  return "1";
}

}  // namespace

Expr generate(const GeneratorSpec& spec, const Interval& iv, SplitMix64& rng,
              int& discards, GridSpec grid, double certify_tol) {
  spec.cls.validate();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Expr candidate = Expr::parse(draw_source(spec, iv, rng));
    ConvexityCertificate cert = certify(candidate, spec.cls, iv, grid, certify_tol);
    if (cert.verdict == CertVerdict::certified) return candidate;
    ++discards;
  }
  throw GenerationError(std::string("class ") + to_string(spec.cls.kind) +
                            " empirically unreachable with family " +
                            to_string(spec.family) + " after 1000 discards",
                        1000);
}

Expr generate(const GeneratorSpec& spec, const Interval& iv) {
  SplitMix64 rng(spec.seed);
  int discards = 0;
  return generate(spec, iv, rng, discards);
}

namespace {

MarginHistogram make_histogram() {
  return MarginHistogram{{-1e300, 0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1.0, 1e3},
                         std::vector<int>(8, 0)};
}

void bin_margin(MarginHistogram& h, double margin) {
  std::size_t i = 0;
  while (i + 1 < h.edges.size() && margin >= h.edges[i + 1]) ++i;
  ++h.counts[i];
}

struct TheoremPlan {
  int n_functions;
  std::vector<ClassSpec> classes;       // one per generated function
  std::vector<Family> default_families;
};

TheoremPlan plan_for(const FuzzConfig& cfg) {
  const std::string& id = cfg.theorem_id;
  ClassSpec logc{ClassKind::log_convex};
  if (id == "classic")
    return {1, {ClassSpec{ClassKind::convex}},
            {Family::exp_quadratic, Family::positive_quadratic, Family::constant}};
  if (id == "gill")
    return {1, {logc}, {Family::exp_quadratic, Family::constant}};
  if (id == "cor1")
    return {1, {logc}, {Family::exp_quadratic, Family::constant}};
  if (id == "thm21_product" || id == "cor22")
    return {cfg.n_functions, std::vector<ClassSpec>(cfg.n_functions, logc),
            {Family::exp_quadratic, Family::constant}};
  if (id == "thm22_sandwich" || id == "thm23_sandwich")
    return {2, {logc, logc}, {Family::exp_quadratic, Family::constant}};
  if (id == "thm24_mconvex")
    return {2,
            {ClassSpec{ClassKind::m_convex, cfg.m1}, ClassSpec{ClassKind::m_convex, cfg.m2}},
            {Family::shifted_power, Family::constant}};
  if (id == "thm25_alpham")
    return {2,
            {ClassSpec{ClassKind::alpha_m_convex, cfg.m1, cfg.alpha1},
             ClassSpec{ClassKind::alpha_m_convex, cfg.m2, cfg.alpha2}},
            {Family::shifted_power, Family::constant}};
  throw std::invalid_argument("unknown theorem id: " + id);
}

BoundReport dispatch(const FuzzConfig& cfg, const std::vector<Expr>& fs,
                     const Interval& iv) {
  const std::string& id = cfg.theorem_id;
  if (id == "classic") return classic_hadamard(fs[0], iv, cfg.tol);
  if (id == "gill") return gill_bound(fs[0], iv, false, cfg.tol);
  if (id == "thm21_product") return product_bound(fs, iv, false, cfg.tol);
  if (id == "cor1" || id == "cor22")
    return split_point_bound(fs, iv, SplitDirection::min_logconvex, cfg.tol);
  if (id == "thm22_sandwich") return sandwich_e9(fs[0], fs[1], iv, cfg.tol);
  if (id == "thm23_sandwich") return sandwich_e17(fs[0], fs[1], iv, cfg.tol);
  if (id == "thm24_mconvex") return mconvex_bound(fs[0], fs[1], iv, cfg.m1, cfg.m2, cfg.tol);
  if (id == "thm25_alpham")
    return alpham_bound(fs[0], fs[1], iv, cfg.alpha1, cfg.m1, cfg.alpha2, cfg.m2, cfg.tol);
  throw std::invalid_argument("unknown theorem id: " + id);
}

}  // namespace

FuzzSummary fuzz(const FuzzConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  TheoremPlan plan = plan_for(cfg);
  const std::vector<Family>& families =
      cfg.families.empty() ? plan.default_families : cfg.families;

  FuzzSummary s;
  s.theorem_id = cfg.theorem_id;
  s.trials = cfg.trials;
  s.seed = cfg.seed;
  s.rng_algorithm = SplitMix64::kAlgorithm;
  s.margin_histogram = make_histogram();
  s.min_margin = std::numeric_limits<double>::infinity();

  SplitMix64 rng(cfg.seed);
  bool any_margin = false;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const double a = rng.uniform(cfg.iv_lo, cfg.iv_hi - cfg.min_width);
    const double b = rng.uniform(a + cfg.min_width, cfg.iv_hi);
    Interval iv(a, b);

    std::vector<Expr> fs;
    bool generated = true;
    for (int i = 0; i < plan.n_functions; ++i) {
      GeneratorSpec gs{plan.classes[i], families[rng.pick((int)families.size())]};
      try {
        fs.push_back(generate(gs, iv, rng, s.discarded_draws, cfg.tol.grid,
                              cfg.tol.certify_tol));
      } catch (const GenerationError&) {
        generated = false;
        break;
      }
    }
    if (!generated) {
      ++s.hypotheses_unmet;
      continue;
    }

    BoundReport rep = dispatch(cfg, fs, iv);
    switch (rep.verdict) {
      case BoundVerdict::holds:
        ++s.holds;
        break;
      case BoundVerdict::violated: {
        ++s.violations;
        ViolationRecord rec{rep.expressions, iv.a, iv.b, rep.params, rep.margin};
        s.violation_records.push_back(std::move(rec));
        break;
      }
      case BoundVerdict::hypotheses_unmet:
        ++s.hypotheses_unmet;
        continue;  // no inequality verdict, no margin
    }
    any_margin = true;
    s.min_margin = std::min(s.min_margin, rep.margin);
    bin_margin(s.margin_histogram, rep.margin);
  }
  if (!any_margin) s.min_margin = 0.0;
  return s;
}

}  // namespace hh
