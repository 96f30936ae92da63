#pragma once

namespace hh {

/// Logarithmic mean L(p,q) = (p-q)/(ln p - ln q), with L(p,p) = p.
///
/// Arguments are ordered canonically before computing, so symmetry is
/// bit-exact. For |p-q| <= 1e-8*max(p,q) the direct formula loses all
/// precision and the midpoint (p+q)/2 is returned instead; its relative
/// error O(((p-q)/p)^2) is below 1e-16 at the switch point.
/// Throws std::domain_error on non-positive or non-finite input.
double log_mean(double p, double q);

double arithmetic_mean(double p, double q);
double geometric_mean(double p, double q);

}  // namespace hh
