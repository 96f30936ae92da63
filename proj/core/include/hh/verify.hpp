#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/bounds.hpp"
#include "hh/convexity.hpp"
#include "hh/expr.hpp"

namespace hh {

/// Deterministic 64-bit generator (splitmix64). The algorithm identifier is
/// recorded in every FuzzSummary so regression corpora stay replayable
/// across implementations.
class SplitMix64 {
public:
  static constexpr const char* kAlgorithm = "splitmix64-v1";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int pick(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
  std::uint64_t state_;
};

enum class Family { exp_quadratic, positive_quadratic, shifted_power, constant };
const char* to_string(Family f);

/// Random-function recipe: draws from `family` until the draw certifies for
/// `cls` on the target interval; non-certifying draws are discarded and
/// counted.
struct GeneratorSpec {
  ClassSpec cls;
  Family family;
  double coeff_lo = -2.0;
  double coeff_hi = 2.0;
  std::uint64_t seed = 0;
};

class GenerationError : public std::runtime_error {
public:
  GenerationError(std::string what, int discards)
      : std::runtime_error(std::move(what)), discards_(discards) {}
  int discards() const { return discards_; }

private:
  int discards_;
};

/// Deterministic given the rng state; throws GenerationError after 1000
/// consecutive discards (the class is empirically unreachable with this
/// family). `discards` accumulates across the call.
Expr generate(const GeneratorSpec& spec, const Interval& iv, SplitMix64& rng,
              int& discards, GridSpec grid = {21, 11},
              double certify_tol = kDefaultCertifyTol);

/// Seed-owning convenience overload.
Expr generate(const GeneratorSpec& spec, const Interval& iv);

struct ViolationRecord {
  std::vector<std::string> expressions;
  double a, b;
  std::map<std::string, double> params;
  double margin;
};

struct MarginHistogram {
  // fixed bin edges; counts[i] covers [edges[i], edges[i+1]), last bin open
  std::vector<double> edges;
  std::vector<int> counts;
};

struct FuzzSummary {
  std::string theorem_id;
  int trials = 0;
  int holds = 0;
  int hypotheses_unmet = 0;
  int violations = 0;
  double min_margin = 0.0;
  MarginHistogram margin_histogram;
  int discarded_draws = 0;
  std::uint64_t seed = 0;
  std::string rng_algorithm;
  std::vector<ViolationRecord> violation_records;
};

struct FuzzConfig {
  std::string theorem_id;
  int trials = 1000;
  std::uint64_t seed = 0;
  int n_functions = 2;  // product size for cor22 / thm21_product
  double m1 = 1.0, m2 = 1.0, alpha1 = 1.0, alpha2 = 1.0;
  // intervals drawn within [0.1, 3] with b - a >= 0.2
  double iv_lo = 0.1, iv_hi = 3.0, min_width = 0.2;
  std::vector<Family> families;  // empty = per-theorem defaults
  Tolerances tol = fuzz_tolerances();

  // lighter certification grid than the CLI default keeps 1000-trial
  // suites inside the acceptance-runtime budget
  static Tolerances fuzz_tolerances() {
    Tolerances t;
    t.grid = GridSpec{21, 11};
    t.mono_n = 41;
    return t;
  }
};

/// Runs the matching bounds operation on freshly generated certified inputs
/// and random subintervals; aggregation is order-independent and the whole
/// run is deterministic given the seed.
FuzzSummary fuzz(const FuzzConfig& cfg);

}  // namespace hh
