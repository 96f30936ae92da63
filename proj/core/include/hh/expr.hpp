#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hh {

enum class BinaryOp { add, sub, mul, div, pow };
enum class CallName { exp, log, sqrt, abs };
enum class ConstName { e, pi };

enum class EvalFault {
  none,
  log_domain,    // log of a non-positive argument
  sqrt_domain,   // square root of a negative argument
  pow_domain,    // negative base with non-integer exponent, or 0^negative
  div_by_zero,
  nonfinite      // overflow / nan anywhere in the tree
};

const char* to_string(EvalFault f);

/// Result of evaluating an expression: either a finite binary64 value or a
/// domain-fault marker. Faults are values, not exceptions, so callers can
/// map them to "hypothesis not satisfied at this sample".
struct EvalOutcome {
  double value = 0.0;
  EvalFault fault = EvalFault::none;

  bool ok() const { return fault == EvalFault::none; }
  static EvalOutcome of(double v);
  static EvalOutcome faulted(EvalFault f) { return EvalOutcome{0.0, f}; }
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  struct Number { double value; };
  struct Variable {};
  struct Neg { NodePtr arg; };
  struct Binary { BinaryOp op; NodePtr lhs, rhs; };
  struct Call { CallName fn; NodePtr arg; };
  struct Constant { ConstName which; };

  std::variant<Number, Variable, Neg, Binary, Call, Constant> v;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Immutable expression tree for a scalar real function of one variable `x`.
///
/// Grammar (see docs/grammar.md): `+ - * / ^` with `^` right-associative and
/// binding tighter than unary minus; calls exp/log/sqrt/abs; constants e, pi.
/// Implicit multiplication is not supported.
class Expr {
public:
  static Expr parse(std::string_view source);

  EvalOutcome eval(double x) const;
  std::string pretty() const;

  const Node& root() const { return *root_; }
  NodePtr root_ptr() const { return root_; }

  friend bool structurally_equal(const Expr& a, const Expr& b);

  explicit Expr(NodePtr root) : root_(std::move(root)) {}

private:
  NodePtr root_;
};

bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace hh
