#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace vlp {

enum class Op { constant, variable, add, sub, mul, div, pow, neg, ln, exp, sqrt, sin, cos, abs, min, max };

/// Immutable closed-form expression in one real variable. Copies share the
/// underlying tree; construction folds constant subtrees.
class Expr {
 public:
  Expr() : Expr(constant(0.0)) {}

  static Expr constant(double value);
  static Expr variable();

  static Expr unary(Op op, const Expr& arg);
  static Expr binary(Op op, const Expr& lhs, const Expr& rhs);

  double operator()(double t) const noexcept;

  Op op() const noexcept;
  bool is_constant() const noexcept;
  /// Value of a constant expression; NaN otherwise.
  double constant_value() const noexcept;
  std::size_t node_count() const noexcept;
  std::size_t depth() const noexcept;

  /// Expression with the variable replaced by `inner`.
  Expr compose(const Expr& inner) const;

  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b) { return binary(Op::add, a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return binary(Op::sub, a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return binary(Op::mul, a, b); }
  friend Expr operator/(const Expr& a, const Expr& b) { return binary(Op::div, a, b); }
  friend Expr operator-(const Expr& a) { return unary(Op::neg, a); }

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using ParamMap = std::map<std::string, double, std::less<>>;

struct ParseLimits {
  std::size_t max_depth = 64;
  std::size_t max_nodes = 4096;
};

/// Parses `text` with the usual precedence (unary minus, ^ right-assoc, * /,
/// + -). Functions: ln, log (natural), exp, sqrt, sin, cos, abs, min, max.
/// Constants: e, pi, and any name in `params`. Any name in `variables`
/// denotes the variable.
/// Throws SyntaxError with the offending offset.
Expr parse_expr(std::string_view text, const ParamMap& params = {},
                const std::vector<std::string>& variables = {"t", "x"},
                const ParseLimits& limits = {});

}  // namespace vlp
