#pragma once

#include <cmath>
#include <stdexcept>

namespace hh {

/// Ordered pair (a, b) with a < b, both finite.
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw std::invalid_argument("interval endpoints must be finite");
    if (!(a < b))
      throw std::invalid_argument("interval requires a < b");
  }

  double width() const { return b - a; }
  // a + (b-a)/2 avoids overflow and halves rounding error vs (a+b)/2
  double midpoint() const { return a + (b - a) / 2.0; }
};

}  // namespace hh
