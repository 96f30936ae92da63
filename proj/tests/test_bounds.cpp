#include "doctest.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <vector>

#include "hh/bounds.hpp"
#include "hh/json_io.hpp"
#include "hh/means.hpp"
#include "hh/verify.hpp"

using hh::BoundVerdict;
using hh::Expr;
using hh::Interval;

namespace {

// independent integral oracle: 1e6-point midpoint Riemann sum
double riemann_mean(const hh::RealFn& f, const Interval& iv) {
  const int n = 1000000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(iv.a + iv.width() * (i + 0.5) / n);
  return s / n;
}

const double kE = std::exp(1.0);

}  // namespace

TEST_CASE("classic Hadamard on analytic cases") {
  auto r = hh::classic_hadamard(Expr::parse("x^2"), Interval(0, 2));
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.quantities.at("lhs") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.quantities.at("integral_mean") == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(r.quantities.at("rhs") == doctest::Approx(2.0).epsilon(1e-12));

  auto c = hh::classic_hadamard(Expr::parse("3.25"), Interval(0.5, 2.5));
  CHECK(c.verdict == BoundVerdict::holds);
  CHECK(c.quantities.at("lhs") == doctest::Approx(3.25).epsilon(1e-13));
  CHECK(c.quantities.at("rhs") == doctest::Approx(3.25).epsilon(1e-13));
  CHECK(std::fabs(c.margin) <= 1e-12);

  auto e = hh::classic_hadamard(Expr::parse("exp(x)"), Interval(0, 1));
  CHECK(e.verdict == BoundVerdict::holds);
  CHECK(e.quantities.at("lhs") == doctest::Approx(std::sqrt(kE)).epsilon(1e-12));
  CHECK(e.quantities.at("integral_mean") == doctest::Approx(kE - 1.0).epsilon(1e-12));
  CHECK(e.quantities.at("rhs") == doctest::Approx((1.0 + kE) / 2.0).epsilon(1e-12));
}

TEST_CASE("classic Hadamard refuses to claim anything for non-convex f") {
  auto r = hh::classic_hadamard(Expr::parse("sqrt(x)"), Interval(0, 1));
  CHECK(r.verdict == BoundVerdict::hypotheses_unmet);
}

TEST_CASE("log-mean bound: exp is the equality family") {
  auto r = hh::gill_bound(Expr::parse("exp(x)"), Interval(0, 1));
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.quantities.at("integral_mean") == doctest::Approx(kE - 1.0).epsilon(1e-11));
  CHECK(r.quantities.at("rhs") == doctest::Approx(kE - 1.0).epsilon(1e-11));
  CHECK(std::fabs(r.margin) <= 1e-9);

  auto c = hh::gill_bound(Expr::parse("0.75"), Interval(0, 1));
  CHECK(c.verdict == BoundVerdict::holds);
  CHECK(std::fabs(c.margin) <= 1e-12);

  Expr f = Expr::parse("exp(x^2)");
  auto q = hh::gill_bound(f, Interval(0, 1));
  CHECK(q.verdict == BoundVerdict::holds);
  CHECK(q.quantities.at("integral_mean") ==
        doctest::Approx(riemann_mean(hh::fn_of(f), Interval(0, 1))).epsilon(1e-9));
  CHECK(q.quantities.at("rhs") == doctest::Approx(kE - 1.0).epsilon(1e-12));
}

TEST_CASE("log-concave variant reverses the inequality") {
  auto r = hh::gill_bound(Expr::parse("exp(-x^2)"), Interval(0, 1), true);
  CHECK(r.verdict == BoundVerdict::holds);
  // mean >= L(f(a), f(b))
  CHECK(r.quantities.at("integral_mean") >= r.quantities.at("rhs") - 1e-9);
}

TEST_CASE("product bound and the n=1 reduction identity") {
  Expr f = Expr::parse("exp(x)");
  auto gill = hh::gill_bound(f, Interval(0, 1));
  auto prod1 = hh::product_bound({f}, Interval(0, 1));
  // Remark-style reduction: identical numbers bit-for-bit
  for (const char* key : {"integral_mean", "rhs", "p_a", "p_b"}) {
    const double a = gill.quantities.at(key), b = prod1.quantities.at(key);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
  CHECK(gill.margin == prod1.margin);
  CHECK(gill.verdict == prod1.verdict);

  auto two = hh::product_bound({f, f}, Interval(0, 1));
  CHECK(two.verdict == BoundVerdict::holds);
  CHECK(two.quantities.at("integral_mean") ==
        doctest::Approx((kE * kE - 1.0) / 2.0).epsilon(1e-11));
  CHECK(two.quantities.at("rhs") == doctest::Approx((kE * kE - 1.0) / 2.0).epsilon(1e-11));

  auto consts = hh::product_bound({Expr::parse("2"), Expr::parse("3")}, Interval(0, 1));
  CHECK(consts.quantities.at("integral_mean") == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(consts.quantities.at("rhs") == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("scale covariance of the product bound") {
  std::vector<Expr> fs = {Expr::parse("exp(0.5*x^2+0.1*x)"), Expr::parse("exp(x)")};
  auto base = hh::product_bound(fs, Interval(0.2, 1.4));
  for (double c : {0.125, 3.0, 40.0}) {
    std::vector<Expr> scaled = fs;
    scaled[0] = Expr::parse(std::to_string(c) + "*(" + fs[0].pretty() + ")");
    auto rep = hh::product_bound(scaled, Interval(0.2, 1.4));
    CHECK(rep.quantities.at("integral_mean") ==
          doctest::Approx(c * base.quantities.at("integral_mean")).epsilon(1e-9));
    CHECK(rep.quantities.at("rhs") ==
          doctest::Approx(c * base.quantities.at("rhs")).epsilon(1e-9));
  }
}

TEST_CASE("split-point bound: exp gives a flat profile equal to the log-mean bound") {
  auto r = hh::split_point_bound({Expr::parse("exp(x)")}, Interval(0, 1),
                                 hh::SplitDirection::min_logconvex);
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.theorem_id == "cor1");
  CHECK(r.quantities.at("optimum") == doctest::Approx(kE - 1.0).epsilon(1e-11));
  CHECK(r.quantities.at("gill_value") == doctest::Approx(kE - 1.0).epsilon(1e-11));

  auto c = hh::split_point_bound({Expr::parse("1.5")}, Interval(0, 2),
                                 hh::SplitDirection::min_logconvex);
  CHECK(c.quantities.at("optimum") == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("split-point bound on exp(x^2) against a dense phi oracle") {
  Expr f = Expr::parse("exp(x^2)");
  Interval iv(0, 1);
  auto r = hh::split_point_bound({f}, iv, hh::SplitDirection::min_logconvex);
  REQUIRE(r.verdict == BoundVerdict::holds);

  hh::RealFn ff = hh::fn_of(f);
  const double pa = ff(iv.a), pb = ff(iv.b);
  double oracle = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 10000; ++i) {
    const double x = iv.a + iv.width() * i / 10000;
    const double px = ff(x);
    oracle = std::min(oracle, ((x - iv.a) * hh::log_mean(pa, px) +
                               (iv.b - x) * hh::log_mean(px, pb)) / iv.width());
  }
  CHECK(r.quantities.at("optimum") <= oracle + 1e-9);
  CHECK(std::fabs(r.quantities.at("optimum") - oracle) <= 1e-6);
  CHECK(r.quantities.at("integral_mean") <= r.quantities.at("optimum") + 1e-9);
  CHECK(r.quantities.at("optimum") <= hh::log_mean(1.0, kE) + 1e-12);
}

TEST_CASE("split-point max variant for log-concave products") {
  auto r = hh::split_point_bound({Expr::parse("exp(-x^2)"), Expr::parse("exp(-0.5*x^2)")},
                                 Interval(0, 1), hh::SplitDirection::max_logconcave);
  CHECK(r.theorem_id == "cor22");
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.quantities.at("integral_mean") >= r.quantities.at("optimum") - 1e-9);
}

TEST_CASE("symmetric-product sandwich: triple equality at exp") {
  auto r = hh::sandwich_e9(Expr::parse("exp(x)"), Expr::parse("exp(x)"), Interval(0, 1));
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.quantities.at("lhs") == doctest::Approx(kE).epsilon(1e-11));
  CHECK(r.quantities.at("middle") == doctest::Approx(kE).epsilon(1e-11));
  CHECK(r.quantities.at("rhs") == doctest::Approx(kE).epsilon(1e-11));

  auto c = hh::sandwich_e9(Expr::parse("2.5"), Expr::parse("2.5"), Interval(0, 3));
  CHECK(c.quantities.at("lhs") == doctest::Approx(6.25).epsilon(1e-12));
  CHECK(c.quantities.at("rhs") == doctest::Approx(6.25).epsilon(1e-12));

  Expr f = Expr::parse("exp(x^2)");
  Expr g = Expr::parse("exp(x)");
  auto m = hh::sandwich_e9(f, g, Interval(0, 1));
  REQUIRE(m.verdict == BoundVerdict::holds);
  CHECK(m.quantities.at("lhs") <= m.quantities.at("middle") + 1e-9);
  CHECK(m.quantities.at("middle") <= m.quantities.at("rhs") + 1e-9);
  hh::RealFn ff = hh::fn_of(f), gg = hh::fn_of(g);
  hh::RealFn sym = [&](double x) {
    return ff(x) * ff(1.0 - x) + gg(x) * gg(1.0 - x);
  };
  CHECK(m.quantities.at("middle") ==
        doctest::Approx(0.5 * riemann_mean(sym, Interval(0, 1))).epsilon(1e-9));
}

TEST_CASE("squared-sum sandwich: equality of middle and rhs at exp") {
  auto r = hh::sandwich_e17(Expr::parse("exp(x)"), Expr::parse("exp(x)"), Interval(0, 1));
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.quantities.at("lhs") == doctest::Approx(2.0 * kE).epsilon(1e-11));
  CHECK(r.quantities.at("middle") == doctest::Approx(kE * kE - 1.0).epsilon(1e-11));
  CHECK(r.quantities.at("rhs") == doctest::Approx(kE * kE - 1.0).epsilon(1e-11));
  CHECK(r.quantities.at("lhs") < r.quantities.at("middle"));

  auto c = hh::sandwich_e17(Expr::parse("1.5"), Expr::parse("1.5"), Interval(0, 2));
  CHECK(c.quantities.at("lhs") == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(c.quantities.at("middle") == doctest::Approx(4.5).epsilon(1e-12));
  CHECK(c.quantities.at("rhs") == doctest::Approx(4.5).epsilon(1e-12));

  auto m = hh::sandwich_e17(Expr::parse("exp(x)"), Expr::parse("exp(x^2)"), Interval(0, 1));
  REQUIRE(m.verdict == BoundVerdict::holds);
  CHECK(m.quantities.at("lhs") <= m.quantities.at("middle") + 1e-9);
  CHECK(m.quantities.at("middle") <= m.quantities.at("rhs") + 1e-9);
}

TEST_CASE("m-convex product bound on (2-x)^2 at m=1") {
  Expr f = Expr::parse("(2-x)^2");
  auto r = hh::mconvex_bound(f, f, Interval(0, 1), 1.0, 1.0);
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.quantities.at("lhs") == doctest::Approx(31.0 / 5.0).epsilon(1e-11));
  CHECK(r.quantities.at("S1") == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(r.quantities.at("S2") == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(r.margin == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("constants at m=1 give equality; m<1 refutes positive constants") {
  Expr c = Expr::parse("1.75");
  auto r = hh::mconvex_bound(c, c, Interval(0, 1), 1.0, 1.0);
  CHECK(r.verdict == BoundVerdict::holds);
  CHECK(r.quantities.at("lhs") == doctest::Approx(1.75 * 1.75).epsilon(1e-12));
  CHECK(r.quantities.at("rhs") == doctest::Approx(1.75 * 1.75).epsilon(1e-12));

  auto bad = hh::mconvex_bound(c, c, Interval(0, 1), 0.5, 0.5);
  CHECK(bad.verdict == BoundVerdict::hypotheses_unmet);
}

TEST_CASE("m=0.5 on (2-x)^2: quantities still reported under hypotheses_unmet") {
  Expr f = Expr::parse("(2-x)^2");
  auto r = hh::mconvex_bound(f, f, Interval(0, 1), 0.5, 0.5);
  CHECK(r.verdict == BoundVerdict::hypotheses_unmet);
  CHECK(r.quantities.at("S1") == doctest::Approx(32.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("S1/S2 swap symmetry against direct re-derivation") {
  Expr f = Expr::parse("(3-x)^2");
  Expr g = Expr::parse("(4-x)^4");
  Interval iv(0.3, 1.1);
  const double m1 = 0.8, m2 = 0.6;
  auto r = hh::mconvex_bound(f, g, iv, m1, m2);
  auto F = hh::fn_of(f), G = hh::fn_of(g);
  // S2 must equal S1's formula with the roles of a and b exchanged
  const double s2_direct =
      (F(iv.b) * F(iv.b) + G(iv.b) * G(iv.b) + m1 * F(iv.b) * F(iv.a / m1) +
       m2 * G(iv.b) * G(iv.a / m2) + m1 * m1 * F(iv.a / m1) * F(iv.a / m1) +
       m2 * m2 * G(iv.a / m2) * G(iv.a / m2)) / 6.0;
  const double s2 = r.quantities.at("S2");
  CHECK(std::memcmp(&s2, &s2_direct, sizeof s2) == 0);
}

TEST_CASE("(alpha,m) bound: printed coefficients at alpha = 0.5 and 1") {
  auto c1 = [](double a) { return 1.0 / (2.0 * a + 1.0); };
  auto c2 = [](double a) { return 2.0 * a * a / ((a + 1.0) * (2.0 * a + 1.0)); };
  auto c3 = [](double a) { return 2.0 * a / ((a + 1.0) * (2.0 * a + 1.0)); };
  CHECK(c1(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(c2(0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(c3(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c1(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c2(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(c3(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("(alpha,m) bound at alpha=0.5 reproduces the worked E1 value") {
  Expr f = Expr::parse("(2-x)^2");  // f(0)=4, f(1)=1
  auto r = hh::alpham_bound(f, f, Interval(0, 1), 0.5, 1.0, 0.5, 1.0);
  CHECK(r.quantities.at("E1") == doctest::Approx(9.5).epsilon(1e-12));

  // cross-check by independent re-derivation of the t-integral
  // int_0^1 (t^a A + m(1-t^a) B)^2 dt, midpoint rule
  auto tint = [](double alpha, double m, double A, double B) {
    const int n = 2000000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = (i + 0.5) / n;
      const double ta = std::pow(t, alpha);
      const double v = ta * A + m * (1.0 - ta) * B;
      s += v * v;
    }
    return s / n;
  };
  const double e1_oracle = 0.5 * (tint(0.5, 1.0, 4.0, 1.0) + tint(0.5, 1.0, 4.0, 1.0));
  CHECK(r.quantities.at("E1") == doctest::Approx(e1_oracle).epsilon(1e-6));
}

TEST_CASE("alpha=1 reduction matches the m-convex bound on random certified inputs") {
  hh::SplitMix64 rng(313);
  int discards = 0;
  int done = 0;
  while (done < 100) {
    const double a = rng.uniform(0.1, 2.0);
    const double b = rng.uniform(a + 0.3, 3.0);
    Interval iv(a, b);
    hh::GeneratorSpec gs{{hh::ClassKind::m_convex, 1.0},
                         done % 3 == 0 ? hh::Family::constant : hh::Family::shifted_power};
    Expr f = hh::generate(gs, iv, rng, discards);
    Expr g = hh::generate(gs, iv, rng, discards);
    auto mc = hh::mconvex_bound(f, g, iv, 1.0, 1.0);
    auto am = hh::alpham_bound(f, g, iv, 1.0, 1.0, 1.0, 1.0);
    for (auto [skey, ekey] : {std::pair{"S1", "E1"}, std::pair{"S2", "E2"}}) {
      const double s = mc.quantities.at(skey), e = am.quantities.at(ekey);
      REQUIRE(std::fabs(s - e) <= 1e-15 * std::fabs(s));
    }
    ++done;
  }
}

TEST_CASE("elementary inequality cd <= (c^2+d^2)/2") {
  CHECK(hh::verify_elementary(3.0, 3.0));
  CHECK(hh::verify_elementary(0.0, 5.0));
  CHECK(hh::verify_elementary(2.0, 8.0));
  CHECK_THROWS_AS(hh::verify_elementary(-1.0, 1.0), std::domain_error);
  hh::SplitMix64 rng(99);
  for (int i = 0; i < 10000; ++i)
    REQUIRE(hh::verify_elementary(rng.uniform(0.0, 1e6), rng.uniform(0.0, 1e6)));
}
