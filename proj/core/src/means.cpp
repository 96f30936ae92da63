#include "hh/means.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hh {

namespace {
void require_positive(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw std::domain_error("mean arguments must be positive and finite");
}
}  // namespace

double log_mean(double p, double q) {
  require_positive(p, q);
  if (p > q) std::swap(p, q);
  if (p == q) return p;
  if (q - p <= 1e-8 * q) return (p + q) / 2.0;
  // log1p of the ratio keeps full precision when p and q are close
  return (q - p) / std::log1p((q - p) / p);
}

double arithmetic_mean(double p, double q) {
  require_positive(p, q);
  return (p + q) / 2.0;
}

double geometric_mean(double p, double q) {
  require_positive(p, q);
  return std::sqrt(p * q);
}

}  // namespace hh
