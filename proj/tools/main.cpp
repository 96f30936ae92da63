#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hh/bounds.hpp"
#include "hh/convexity.hpp"
#include "hh/expr.hpp"
#include "hh/json_io.hpp"
#include "hh/verify.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUnmet = 2;
constexpr int kExitUsage = 64;

int exit_code(hh::BoundVerdict v) {
  switch (v) {
    case hh::BoundVerdict::holds: return kExitHolds;
    case hh::BoundVerdict::violated: return kExitViolated;
    case hh::BoundVerdict::hypotheses_unmet: return kExitUnmet;
  }
  return kExitUnmet;
}

int exit_code(hh::CertVerdict v) {
  switch (v) {
    case hh::CertVerdict::certified: return kExitHolds;
    case hh::CertVerdict::refuted: return kExitViolated;
    case hh::CertVerdict::inconclusive: return kExitUnmet;
  }
  return kExitUnmet;
}

hh::Expr parse_arg(const std::string& src) {
  try {
    return hh::Expr::parse(src);
  } catch (const hh::ParseError& e) {
    std::cerr << "error in expression '" << src << "': " << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

hh::GridSpec parse_grid(const std::string& s) {
  hh::GridSpec g;
  if (std::sscanf(s.c_str(), "%d,%d", &g.n_xy, &g.n_t) != 2 || g.n_xy < 2 || g.n_t < 2) {
    std::cerr << "bad --grid value '" << s << "', expected NXY,NT\n";
    std::exit(kExitUsage);
  }
  return g;
}

struct CommonFlags {
  double quad_tol = hh::kDefaultQuadTol;
  double certify_tol = hh::kDefaultCertifyTol;
  double verify_tol = 1e-9;
  int opt_grid = hh::kDefaultOptGrid;
  double opt_tol = hh::kDefaultOptTol;
  std::string grid = "41,21";

  void add_to(CLI::App& app) {
    app.add_option("--quad-tol", quad_tol, "quadrature relative tolerance (default 1e-10)");
    app.add_option("--certify-tol", certify_tol, "certification slack tolerance (default 1e-9)");
    app.add_option("--verify-tol", verify_tol, "inequality verification tolerance (default 1e-9)");
    app.add_option("--opt-grid", opt_grid, "split-point scan grid size (default 257)");
    app.add_option("--opt-tol", opt_tol, "split-point refinement tolerance (default 1e-10)");
    app.add_option("--grid", grid, "certification grid NXY,NT (default 41,21)");
  }

  hh::Tolerances tolerances() const {
    hh::Tolerances t;
    t.quad_tol = quad_tol;
    t.certify_tol = certify_tol;
    t.verify_tol = verify_tol;
    t.opt_grid = opt_grid;
    t.opt_tol = opt_tol;
    t.grid = parse_grid(grid);
    return t;
  }
};

int run_parse(const std::string& f_src) {
  try {
    hh::Expr e = hh::Expr::parse(f_src);
    nlohmann::ordered_json j{{"type", "parse_result"},
                             {"source", f_src},
                             {"pretty", e.pretty()}};
    std::cout << j.dump(2) << "\n";
    std::cerr << "parsed: " << e.pretty() << "\n";
    return kExitHolds;
  } catch (const hh::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

int run_certify(const std::string& class_name, const std::string& f_src, double a, double b,
                double m, double alpha, const CommonFlags& flags) {
  auto kind = hh::class_kind_from_string(class_name);
  if (!kind) {
    std::cerr << "unknown class '" << class_name << "'\n";
    return kExitUsage;
  }
  hh::Expr f = parse_arg(f_src);
  hh::ClassSpec spec{*kind, m, alpha};
  try {
    spec.validate();
    hh::Interval iv(a, b);
    hh::ConvexityCertificate cert =
        hh::certify(f, spec, iv, parse_grid(flags.grid), flags.certify_tol);
    std::cout << hh::serialize(cert);
    std::cerr << to_string(*kind) << " on [" << a << "," << b
              << "]: " << to_string(cert.verdict)
              << " (worst violation " << cert.worst_violation << ")\n";
    return exit_code(cert.verdict);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

int run_bound(const std::string& theorem, const std::string& f_src,
              const std::string& g_src, const std::vector<std::string>& fi_src, double a,
              double b, double m1, double m2, double alpha1, double alpha2, bool concave,
              const CommonFlags& flags) {
  hh::Tolerances tol = flags.tolerances();
  std::optional<hh::BoundReport> rep;
  try {
    hh::Interval iv(a, b);

    auto need_f = [&]() {
      if (f_src.empty()) {
        std::cerr << "--theorem " << theorem << " requires --f\n";
        std::exit(kExitUsage);
      }
      return parse_arg(f_src);
    };
    auto need_g = [&]() {
      if (g_src.empty()) {
        std::cerr << "--theorem " << theorem << " requires --g\n";
        std::exit(kExitUsage);
      }
      return parse_arg(g_src);
    };
    auto need_fi = [&]() {
      std::vector<hh::Expr> fs;
      for (const auto& s : fi_src) fs.push_back(parse_arg(s));
      if (fs.empty() && !f_src.empty()) fs.push_back(parse_arg(f_src));
      if (fs.empty()) {
        std::cerr << "--theorem " << theorem << " requires --fi (repeatable) or --f\n";
        std::exit(kExitUsage);
      }
      return fs;
    };

    if (theorem == "classic") rep = hh::classic_hadamard(need_f(), iv, tol);
    else if (theorem == "gill") rep = hh::gill_bound(need_f(), iv, concave, tol);
    else if (theorem == "thm21_product") rep = hh::product_bound(need_fi(), iv, concave, tol);
    else if (theorem == "cor1" || theorem == "cor22") {
      auto dir = concave ? hh::SplitDirection::max_logconcave
                         : hh::SplitDirection::min_logconvex;
      auto fs = theorem == "cor1" ? std::vector<hh::Expr>{need_f()} : need_fi();
      rep = hh::split_point_bound(fs, iv, dir, tol);
      rep->theorem_id = theorem;
    } else if (theorem == "thm22_sandwich") rep = hh::sandwich_e9(need_f(), need_g(), iv, tol);
    else if (theorem == "thm23_sandwich") rep = hh::sandwich_e17(need_f(), need_g(), iv, tol);
    else if (theorem == "thm24_mconvex")
      rep = hh::mconvex_bound(need_f(), need_g(), iv, m1, m2, tol);
    else if (theorem == "thm25_alpham")
      rep = hh::alpham_bound(need_f(), need_g(), iv, alpha1, m1, alpha2, m2, tol);
    else {
      std::cerr << "unknown theorem '" << theorem << "'\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  std::cout << hh::serialize(*rep);
  std::cerr << rep->theorem_id << " on [" << a << "," << b
            << "]: " << to_string(rep->verdict) << " (margin " << rep->margin << ")\n";
  return exit_code(rep->verdict);
}

int run_fuzz(const std::string& theorem, int trials, std::uint64_t seed, int n,
             double m1, double m2, double alpha1, double alpha2,
             const std::string& out_path, const std::string& csv_path,
             const CommonFlags& flags, bool flags_touched) {
  hh::FuzzConfig cfg;
  cfg.theorem_id = theorem;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.n_functions = n;
  cfg.m1 = m1;
  cfg.m2 = m2;
  cfg.alpha1 = alpha1;
  cfg.alpha2 = alpha2;
  if (flags_touched) cfg.tol = flags.tolerances();
  try {
    hh::FuzzSummary s = hh::fuzz(cfg);
    std::string doc = hh::serialize(s);
    std::cout << doc;
    if (!out_path.empty()) std::ofstream(out_path) << doc;
    if (!csv_path.empty()) std::ofstream(csv_path) << hh::margins_csv(s);
    std::cerr << theorem << ": " << s.holds << " holds, " << s.hypotheses_unmet
              << " hypotheses_unmet, " << s.violations << " violations, "
              << s.discarded_draws << " discarded draws (seed " << seed << ")\n";
    return s.violations == 0 ? kExitHolds : kExitViolated;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Computes and verifies Hadamard-type integral bounds for log-convex,\n"
      "m-convex and (alpha,m)-convex functions. Expressions use a small DSL\n"
      "over the variable x (see docs/grammar.md); '^' is right-associative\n"
      "and binds tighter than unary minus, so -x^2 means -(x^2)."};
  app.require_subcommand(1);

  std::string f_src, g_src, class_name, theorem;
  std::vector<std::string> fi_src;
  double a = 0.0, b = 1.0, m = 1.0, alpha = 1.0;
  double m1 = 1.0, m2 = 1.0, alpha1 = 1.0, alpha2 = 1.0;
  bool concave = false;
  int trials = 1000, n = 2;
  std::uint64_t seed = 0;
  std::string out_path, csv_path;

  auto* parse_cmd = app.add_subcommand("parse", "parse an expression and print its canonical form");
  parse_cmd->add_option("--f", f_src, "expression source")->required();

  auto* certify_cmd = app.add_subcommand("certify", "grid-certify membership in a convexity class");
  certify_cmd->add_option("--class", class_name, "convex|log_convex|log_concave|m_convex|alpha_m_convex")->required();
  certify_cmd->add_option("--f", f_src, "expression source")->required();
  certify_cmd->add_option("--a", a, "domain left endpoint")->required();
  certify_cmd->add_option("--b", b, "domain right endpoint")->required();
  certify_cmd->add_option("--m", m, "m parameter in (0,1]");
  certify_cmd->add_option("--alpha", alpha, "alpha parameter in (0,1]");
  CommonFlags certify_flags;
  certify_flags.add_to(*certify_cmd);

  auto* bound_cmd = app.add_subcommand("bound", "evaluate one theorem instance and report margins");
  bound_cmd->add_option("--theorem", theorem,
                        "classic|gill|cor1|thm21_product|cor22|thm22_sandwich|"
                        "thm23_sandwich|thm24_mconvex|thm25_alpham")->required();
  bound_cmd->add_option("--f", f_src, "expression f");
  bound_cmd->add_option("--g", g_src, "expression g");
  bound_cmd->add_option("--fi", fi_src, "product factor (repeatable)");
  bound_cmd->add_option("--a", a, "interval left endpoint")->required();
  bound_cmd->add_option("--b", b, "interval right endpoint")->required();
  bound_cmd->add_option("--m1", m1, "m parameter for f");
  bound_cmd->add_option("--m2", m2, "m parameter for g");
  bound_cmd->add_option("--alpha1", alpha1, "alpha parameter for f");
  bound_cmd->add_option("--alpha2", alpha2, "alpha parameter for g");
  bound_cmd->add_flag("--concave", concave, "use the log-concave (reversed) variant");
  CommonFlags bound_flags;
  bound_flags.add_to(*bound_cmd);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "batch-verify a theorem on random certified inputs");
  fuzz_cmd->add_option("--theorem", theorem, "theorem id (as for bound)")->required();
  fuzz_cmd->add_option("--trials", trials, "number of trials (default 1000)");
  fuzz_cmd->add_option("--seed", seed, "rng seed (default 0)");
  fuzz_cmd->add_option("--n", n, "product size for thm21_product/cor22 (default 2)");
  fuzz_cmd->add_option("--m1", m1, "m parameter for f");
  fuzz_cmd->add_option("--m2", m2, "m parameter for g");
  fuzz_cmd->add_option("--alpha1", alpha1, "alpha parameter for f");
  fuzz_cmd->add_option("--alpha2", alpha2, "alpha parameter for g");
  fuzz_cmd->add_option("--out", out_path, "also write the summary JSON here");
  fuzz_cmd->add_option("--csv", csv_path, "write the margin histogram as CSV");
  CommonFlags fuzz_flags;
  fuzz_flags.grid = "21,11";
  fuzz_flags.add_to(*fuzz_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message/help
    return kExitUsage;
  }

  if (parse_cmd->parsed()) return run_parse(f_src);
  if (certify_cmd->parsed()) return run_certify(class_name, f_src, a, b, m, alpha, certify_flags);
  if (bound_cmd->parsed())
    return run_bound(theorem, f_src, g_src, fi_src, a, b, m1, m2, alpha1, alpha2, concave,
                     bound_flags);
  if (fuzz_cmd->parsed()) {
    bool touched = fuzz_cmd->count("--quad-tol") || fuzz_cmd->count("--certify-tol") ||
                   fuzz_cmd->count("--verify-tol") || fuzz_cmd->count("--opt-grid") ||
                   fuzz_cmd->count("--opt-tol") || fuzz_cmd->count("--grid");
    return run_fuzz(theorem, trials, seed, n, m1, m2, alpha1, alpha2, out_path, csv_path,
                    fuzz_flags, touched);
  }
  return kExitUsage;
}
