#include "hh/expr.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace hh {

const char* to_string(EvalFault f) {
  switch (f) {
    case EvalFault::none: return "none";
    case EvalFault::log_domain: return "log_domain";
    case EvalFault::sqrt_domain: return "sqrt_domain";
    case EvalFault::pow_domain: return "pow_domain";
    case EvalFault::div_by_zero: return "div_by_zero";
    case EvalFault::nonfinite: return "nonfinite";
  }
  return "?";
}

EvalOutcome EvalOutcome::of(double v) {
  if (!std::isfinite(v)) return faulted(EvalFault::nonfinite);
  return EvalOutcome{v, EvalFault::none};
}

ParseError::ParseError(std::string message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(std::move(message)),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

NodePtr make(Node::Number n) { return std::make_shared<Node>(Node{n}); }
NodePtr make_var() { return std::make_shared<Node>(Node{Node::Variable{}}); }
NodePtr make_neg(NodePtr a) { return std::make_shared<Node>(Node{Node::Neg{std::move(a)}}); }
NodePtr make_bin(BinaryOp op, NodePtr l, NodePtr r) {
  return std::make_shared<Node>(Node{Node::Binary{op, std::move(l), std::move(r)}});
}
NodePtr make_call(CallName fn, NodePtr a) {
  return std::make_shared<Node>(Node{Node::Call{fn, std::move(a)}});
}
NodePtr make_const(ConstName c) { return std::make_shared<Node>(Node{Node::Constant{c}}); }

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr run() {
    skip_ws();
    NodePtr e = expression();
    skip_ws();
    if (pos_ != src_.size())
      fail("unexpected trailing input", {"end of input", "operator"});
    return e;
  }

private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + what,
                     pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  bool consume(char c) {
    if (peek() == c) { ++pos_; skip_ws(); return true; }
    return false;
  }

  // expression := term (('+'|'-') term)*
  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      if (consume('+')) lhs = make_bin(BinaryOp::add, lhs, term());
      else if (consume('-')) lhs = make_bin(BinaryOp::sub, lhs, term());
      else return lhs;
    }
  }

  // term := unary (('*'|'/') unary)*
  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (consume('*')) lhs = make_bin(BinaryOp::mul, lhs, unary());
      else if (consume('/')) lhs = make_bin(BinaryOp::div, lhs, unary());
      else return lhs;
    }
  }

  // unary := '-' unary | power
  // `^` binds tighter than unary minus, so -x^2 parses as -(x^2).
  NodePtr unary() {
    if (consume('-')) return make_neg(unary());
    return power();
  }

  // power := atom ('^' unary)?   (right-associative; exponent may be signed)
  NodePtr power() {
    NodePtr base = atom();
    if (consume('^')) return make_bin(BinaryOp::pow, base, unary());
    return base;
  }

  NodePtr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_; skip_ws();
      NodePtr e = expression();
      if (!consume(')')) fail("expected ')'", {")"});
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("expected expression", {"number", "x", "(", "function", "constant"});
  }

  NodePtr number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && src_[start] == '.'))
      fail("malformed number", {"digit"});
    // exponent suffix only when followed by digits (so "2*e" still lexes)
    if ((peek() == 'e' || peek() == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    double value = 0.0;
    auto text = src_.substr(start, pos_ - start);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      fail("malformed number", {"number"});
    skip_ws();
    return make(Node::Number{value});
  }

  NodePtr identifier() {
    std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    skip_ws();
    if (name == "x") return make_var();
    if (name == "e") return make_const(ConstName::e);
    if (name == "pi") return make_const(ConstName::pi);
    CallName fn;
    if (name == "exp") fn = CallName::exp;
    else if (name == "log") fn = CallName::log;
    else if (name == "sqrt") fn = CallName::sqrt;
    else if (name == "abs") fn = CallName::abs;
    else {
      pos_ = start;
      fail("unknown identifier '" + name + "'",
           {"x", "e", "pi", "exp", "log", "sqrt", "abs"});
    }
    if (!consume('(')) fail("expected '(' after function name", {"("});
    NodePtr arg = expression();
    if (!consume(')')) fail("expected ')'", {")"});
    return make_call(fn, arg);
  }
};

EvalOutcome eval_node(const Node& n, double x) {
  struct V {
    double x;
    EvalOutcome operator()(const Node::Number& m) const { return EvalOutcome::of(m.value); }
    EvalOutcome operator()(const Node::Variable&) const { return EvalOutcome::of(x); }
    EvalOutcome operator()(const Node::Neg& m) const {
      EvalOutcome a = eval_node(*m.arg, x);
      if (!a.ok()) return a;
      return EvalOutcome::of(-a.value);
    }
    EvalOutcome operator()(const Node::Binary& m) const {
      EvalOutcome l = eval_node(*m.lhs, x);
      if (!l.ok()) return l;
      EvalOutcome r = eval_node(*m.rhs, x);
      if (!r.ok()) return r;
      switch (m.op) {
        case BinaryOp::add: return EvalOutcome::of(l.value + r.value);
        case BinaryOp::sub: return EvalOutcome::of(l.value - r.value);
        case BinaryOp::mul: return EvalOutcome::of(l.value * r.value);
        case BinaryOp::div:
          if (r.value == 0.0) return EvalOutcome::faulted(EvalFault::div_by_zero);
          return EvalOutcome::of(l.value / r.value);
        case BinaryOp::pow: {
          if (l.value < 0.0 && r.value != std::floor(r.value))
            return EvalOutcome::faulted(EvalFault::pow_domain);
          if (l.value == 0.0 && r.value < 0.0)
            return EvalOutcome::faulted(EvalFault::pow_domain);
          return EvalOutcome::of(std::pow(l.value, r.value));
        }
      }
      return EvalOutcome::faulted(EvalFault::nonfinite);
    }
    EvalOutcome operator()(const Node::Call& m) const {
      EvalOutcome a = eval_node(*m.arg, x);
      if (!a.ok()) return a;
      switch (m.fn) {
        case CallName::exp: return EvalOutcome::of(std::exp(a.value));
        case CallName::log:
          if (a.value <= 0.0) return EvalOutcome::faulted(EvalFault::log_domain);
          return EvalOutcome::of(std::log(a.value));
        case CallName::sqrt:
          if (a.value < 0.0) return EvalOutcome::faulted(EvalFault::sqrt_domain);
          return EvalOutcome::of(std::sqrt(a.value));
        case CallName::abs: return EvalOutcome::of(std::fabs(a.value));
      }
      return EvalOutcome::faulted(EvalFault::nonfinite);
    }
    EvalOutcome operator()(const Node::Constant& m) const {
      return EvalOutcome::of(m.which == ConstName::e ? std::exp(1.0)
                                                     : 3.14159265358979323846);
    }
  };
  return std::visit(V{x}, n.v);
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  assert(ec == std::errc{});
  return std::string(buf, ptr);
}

void pretty_node(const Node& n, std::string& out) {
  struct V {
    std::string& out;
    void operator()(const Node::Number& m) const { out += format_number(m.value); }
    void operator()(const Node::Variable&) const { out += 'x'; }
    void operator()(const Node::Neg& m) const {
      out += "(-";
      pretty_node(*m.arg, out);
      out += ')';
    }
    void operator()(const Node::Binary& m) const {
      static const char* ops[] = {"+", "-", "*", "/", "^"};
      out += '(';
      pretty_node(*m.lhs, out);
      out += ops[static_cast<int>(m.op)];
      pretty_node(*m.rhs, out);
      out += ')';
    }
    void operator()(const Node::Call& m) const {
      static const char* names[] = {"exp", "log", "sqrt", "abs"};
      out += names[static_cast<int>(m.fn)];
      out += '(';
      pretty_node(*m.arg, out);
      out += ')';
    }
    void operator()(const Node::Constant& m) const {
      out += (m.which == ConstName::e) ? "e" : "pi";
    }
  };
  std::visit(V{out}, n.v);
}

bool equal_node(const Node& a, const Node& b) {
  if (a.v.index() != b.v.index()) return false;
  struct V {
    const Node& b;
    bool operator()(const Node::Number& m) const {
      return m.value == std::get<Node::Number>(b.v).value;
    }
    bool operator()(const Node::Variable&) const { return true; }
    bool operator()(const Node::Neg& m) const {
      return equal_node(*m.arg, *std::get<Node::Neg>(b.v).arg);
    }
    bool operator()(const Node::Binary& m) const {
      const auto& o = std::get<Node::Binary>(b.v);
      return m.op == o.op && equal_node(*m.lhs, *o.lhs) && equal_node(*m.rhs, *o.rhs);
    }
    bool operator()(const Node::Call& m) const {
      const auto& o = std::get<Node::Call>(b.v);
      return m.fn == o.fn && equal_node(*m.arg, *o.arg);
    }
    bool operator()(const Node::Constant& m) const {
      return m.which == std::get<Node::Constant>(b.v).which;
    }
  };
  return std::visit(V{b}, a.v);
}

}  // namespace

Expr Expr::parse(std::string_view source) {
  return Expr(Parser(source).run());
}

EvalOutcome Expr::eval(double x) const { return eval_node(*root_, x); }

std::string Expr::pretty() const {
  std::string out;
  pretty_node(*root_, out);
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  return equal_node(*a.root_, *b.root_);
}

}  // namespace hh
