#include "doctest.h"

#include <cmath>
#include <limits>
#include <string>

#include "hh/quad.hpp"
#include "hh/verify.hpp"

using hh::Expr;
using hh::Interval;

TEST_CASE("analytic antiderivative oracles") {
  auto r = hh::integrate(Expr::parse("exp(x)"), Interval(0, 1), 1e-12);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));

  auto r2 = hh::integrate(Expr::parse("x^2"), Interval(0, 2), 1e-12);
  CHECK(r2.value == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("degenerate interval is rejected by the Interval invariant") {
  CHECK_THROWS_AS(Interval(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("rel_tol outside [1e-14, 1e-2] is rejected") {
  Expr f = Expr::parse("x");
  CHECK_THROWS_AS(hh::integrate(f, Interval(0, 1), 1e-15), std::invalid_argument);
  CHECK_THROWS_AS(hh::integrate(f, Interval(0, 1), 0.1), std::invalid_argument);
}

TEST_CASE("5-point panels are exact for polynomials of degree <= 9") {
  // oracle: sum of monomial antiderivatives, coefficients all 1
  // p(x) = 1 + x + ... + x^9 over [0, 2]
  std::string src = "1";
  double exact = 2.0;
  for (int k = 1; k <= 9; ++k) {
    src += "+x^" + std::to_string(k);
    exact += std::pow(2.0, k + 1) / (k + 1);
  }
  auto r = hh::integrate(Expr::parse(src), Interval(0, 2), 1e-12);
  CHECK(std::fabs(r.value - exact) <= 1e-12 * std::fabs(exact));
  CHECK(r.subdivisions == 0);  // no refinement needed
}

TEST_CASE("domain fault inside the interval names the abscissa") {
  Expr f = Expr::parse("log(x-1)");  // faults for x <= 1
  try {
    hh::integrate(f, Interval(0, 2), 1e-10);
    FAIL("expected QuadDomainError");
  } catch (const hh::QuadDomainError& e) {
    CHECK(e.abscissa() <= 1.0);
    CHECK(e.fault() == hh::EvalFault::log_domain);
  }
}

TEST_CASE("additivity across an interior split point") {
  hh::SplitMix64 rng(7);
  Expr f = Expr::parse("exp(0.7*x^2-0.3*x+0.1)");
  for (int i = 0; i < 20; ++i) {
    double a = rng.uniform(0.0, 1.0), b = rng.uniform(a + 0.5, 3.0);
    double c = rng.uniform(a + 0.1, b - 0.1);
    auto whole = hh::integrate(f, Interval(a, b), 1e-12);
    auto left = hh::integrate(f, Interval(a, c), 1e-12);
    auto right = hh::integrate(f, Interval(c, b), 1e-12);
    const double err = whole.err_estimate + left.err_estimate + right.err_estimate + 1e-11;
    CHECK(std::fabs(whole.value - (left.value + right.value)) <= err);
  }
}

TEST_CASE("linearity in the integrand") {
  Expr f = Expr::parse("exp(x)");
  Expr g = Expr::parse("x^3+1");
  hh::RealFn ff = hh::fn_of(f), gg = hh::fn_of(g);
  hh::SplitMix64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const double al = rng.uniform(-2.0, 2.0), be = rng.uniform(-2.0, 2.0);
    hh::RealFn combo = [=](double x) { return al * ff(x) + be * gg(x); };
    Interval iv(0, 2);
    const double lhs = hh::integrate(combo, iv, 1e-12).value;
    const double rhs = al * hh::integrate(ff, iv, 1e-12).value +
                       be * hh::integrate(gg, iv, 1e-12).value;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("symmetric product integrand") {
  Interval iv(0, 1);
  Expr ex = Expr::parse("exp(x)");
  Expr one = Expr::parse("1");

  // f=g=exp: integrand is the constant 2e
  auto r = hh::integrate_symmetric_product(ex, ex, iv, 1e-12);
  CHECK(r.value == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-13));

  auto r2 = hh::integrate_symmetric_product(one, one, iv, 1e-12);
  CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-14));

  auto r3 = hh::integrate_symmetric_product(ex, one, iv, 1e-12);
  CHECK(r3.value == doctest::Approx(std::exp(1.0) + 1.0).epsilon(1e-13));
}

TEST_CASE("symmetric product is invariant under x -> a+b-x") {
  // substitute u = a+b-x in f: reflect f and integrate again
  Interval iv(0.3, 1.7);
  Expr f = Expr::parse("exp(0.5*x^2+0.1*x)");
  Expr g = Expr::parse("exp(1.1*x^2-0.4*x+0.2)");
  const double s = iv.a + iv.b;
  hh::RealFn ff = hh::fn_of(f), gg = hh::fn_of(g);
  hh::RealFn reflected = [=](double x) {
    return ff(s - x) * ff(x) + gg(s - x) * gg(x);
  };
  const double direct = hh::integrate_symmetric_product(f, g, iv, 1e-12).value;
  const double mirror = hh::integrate(reflected, iv, 1e-12).value;
  CHECK(direct == doctest::Approx(mirror).epsilon(1e-12));
}
