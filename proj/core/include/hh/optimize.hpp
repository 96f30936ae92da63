#pragma once

#include <functional>

#include "hh/interval.hpp"
#include "hh/quad.hpp"

namespace hh {

struct OptimumResult {
  double x_star;
  double value;
  int evaluations;
  bool refined;  // golden-section stage ran (false for flat/edge profiles)
};

inline constexpr int kDefaultOptGrid = 257;
inline constexpr double kDefaultOptTol = 1e-10;

/// Dense-grid scan followed by golden-section refinement of the best
/// bracket. The grid guards against non-unimodal profiles; ties between
/// equal grid minima break to the lowest x (determinism for regression
/// tests). Grid points where phi faults are skipped; all faulting is an
/// error.
OptimumResult minimize_scalar(const RealFn& phi, const Interval& iv,
                              int n_grid = kDefaultOptGrid,
                              double refine_tol = kDefaultOptTol);

/// Negates phi and minimizes.
OptimumResult maximize_scalar(const RealFn& phi, const Interval& iv,
                              int n_grid = kDefaultOptGrid,
                              double refine_tol = kDefaultOptTol);

}  // namespace hh
