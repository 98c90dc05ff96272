#include "vlp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "vlp/error.hpp"

namespace vlp {

struct Expr::Node {
  Op op;
  double value = 0.0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::size_t count = 1;
  std::size_t height = 1;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

double eval(const Expr::Node& n, double t) noexcept {
  switch (n.op) {
    case Op::constant: return n.value;
    case Op::variable: return t;
    case Op::add: return eval(*n.a, t) + eval(*n.b, t);
    case Op::sub: return eval(*n.a, t) - eval(*n.b, t);
    case Op::mul: return eval(*n.a, t) * eval(*n.b, t);
    case Op::div: return eval(*n.a, t) / eval(*n.b, t);
    case Op::pow: {
      const double base = eval(*n.a, t);
      const double ex = eval(*n.b, t);
      if (base == 0.0 && ex < 0.0) return std::numeric_limits<double>::infinity();
      return std::pow(base, ex);
    }
    case Op::neg: return -eval(*n.a, t);
    case Op::ln: return std::log(eval(*n.a, t));
    case Op::exp: return std::exp(eval(*n.a, t));
    case Op::sqrt: return std::sqrt(eval(*n.a, t));
    case Op::sin: return std::sin(eval(*n.a, t));
    case Op::cos: return std::cos(eval(*n.a, t));
    case Op::abs: return std::abs(eval(*n.a, t));
    case Op::min: return std::min(eval(*n.a, t), eval(*n.b, t));
    case Op::max: return std::max(eval(*n.a, t), eval(*n.b, t));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

NodePtr make(Op op, double value, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->value = value;
  n->count = 1 + (a ? a->count : 0) + (b ? b->count : 0);
  n->height = 1 + std::max(a ? a->height : 0, b ? b->height : 0);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

NodePtr fold(Op op, NodePtr a, NodePtr b) {
  const bool ca = a && a->op == Op::constant;
  const bool cb = !b || b->op == Op::constant;
  if (ca && cb) {
    auto tmp = make(op, 0.0, a, b);
    return make(Op::constant, eval(*tmp, 0.0), nullptr, nullptr);
  }
  return make(op, 0.0, std::move(a), std::move(b));
}

void print(const Expr::Node& n, std::ostream& os) {
  switch (n.op) {
    case Op::constant: os << n.value; return;
    case Op::variable: os << "t"; return;
    case Op::neg: os << "(-"; print(*n.a, os); os << ")"; return;
    case Op::ln:
    case Op::exp:
    case Op::sqrt:
    case Op::sin:
    case Op::cos:
    case Op::abs:
      os << (n.op == Op::ln ? "ln(" : n.op == Op::exp ? "exp(" : n.op == Op::sqrt ? "sqrt(" : n.op == Op::sin ? "sin("
             : n.op == Op::cos ? "cos(" : "abs(");
      print(*n.a, os);
      os << ")";
      return;
    case Op::min:
    case Op::max:
      os << (n.op == Op::min ? "min(" : "max(");
      print(*n.a, os);
      os << ", ";
      print(*n.b, os);
      os << ")";
      return;
    default: break;
  }
  const char* sym = n.op == Op::add ? " + " : n.op == Op::sub ? " - " : n.op == Op::mul ? "*"
                    : n.op == Op::div ? "/" : "^";
  os << "(";
  print(*n.a, os);
  os << sym;
  print(*n.b, os);
  os << ")";
}

NodePtr substitute(const NodePtr& n, const NodePtr& inner) {
  if (n->op == Op::variable) return inner;
  if (n->op == Op::constant) return n;
  return fold(n->op, substitute(n->a, inner), n->b ? substitute(n->b, inner) : nullptr);
}

}  // namespace

Expr Expr::constant(double value) { return Expr(make(Op::constant, value, nullptr, nullptr)); }
Expr Expr::variable() { return Expr(make(Op::variable, 0.0, nullptr, nullptr)); }
Expr Expr::unary(Op op, const Expr& arg) { return Expr(fold(op, arg.node_, nullptr)); }
Expr Expr::binary(Op op, const Expr& lhs, const Expr& rhs) {
  return Expr(fold(op, lhs.node_, rhs.node_));
}

double Expr::operator()(double t) const noexcept { return eval(*node_, t); }
Op Expr::op() const noexcept { return node_->op; }
bool Expr::is_constant() const noexcept { return node_->op == Op::constant; }
double Expr::constant_value() const noexcept {
  return is_constant() ? node_->value : std::numeric_limits<double>::quiet_NaN();
}
std::size_t Expr::node_count() const noexcept { return node_->count; }
std::size_t Expr::depth() const noexcept { return node_->height; }
Expr Expr::compose(const Expr& inner) const { return Expr(substitute(node_, inner.node_)); }

std::string Expr::to_string() const {
  std::ostringstream os;
  os.precision(17);
  print(*node_, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParamMap& params, const std::vector<std::string>& vars,
         const ParseLimits& limits)
      : text_(text), params_(params), vars_(vars), limits_(limits) {}

  Expr parse() {
    Expr e = sum(0);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr checked(Expr e, std::size_t level) const {
    if (e.node_count() > limits_.max_nodes) throw SyntaxError("expression too large", pos_);
    if (level > limits_.max_depth) throw SyntaxError("expression nested too deeply", pos_);
    return e;
  }

  Expr sum(std::size_t level) {
    Expr lhs = product(level + 1);
    for (;;) {
      if (accept('+'))
        lhs = checked(lhs + product(level + 1), level);
      else if (accept('-'))
        lhs = checked(lhs - product(level + 1), level);
      else
        return lhs;
    }
  }

  Expr product(std::size_t level) {
    Expr lhs = unary(level + 1);
    for (;;) {
      if (accept('*'))
        lhs = checked(lhs * unary(level + 1), level);
      else if (accept('/'))
        lhs = checked(lhs / unary(level + 1), level);
      else
        return lhs;
    }
  }

  Expr unary(std::size_t level) {
    if (level > limits_.max_depth) fail("expression nested too deeply");
    if (accept('-')) return checked(-unary(level + 1), level);
    if (accept('+')) return unary(level + 1);
    return power(level + 1);
  }

  Expr power(std::size_t level) {
    Expr base = primary(level + 1);
    if (accept('^')) return checked(Expr::binary(Op::pow, base, unary(level + 1)), level);
    return base;
  }

  Expr primary(std::size_t level) {
    if (level > limits_.max_depth) fail("expression nested too deeply");
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum(level + 1);
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name(level);
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string token(text_.substr(start, pos_ - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw SyntaxError("malformed number '" + token + "'", start);
    return Expr::constant(v);
  }

  Expr name(std::size_t level) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string id(text_.substr(start, pos_ - start));

    static const std::map<std::string, Op, std::less<>> unary_fns = {
        {"ln", Op::ln}, {"log", Op::ln}, {"exp", Op::exp}, {"sqrt", Op::sqrt},
        {"sin", Op::sin}, {"cos", Op::cos}, {"abs", Op::abs}};
    static const std::map<std::string, Op, std::less<>> binary_fns = {{"min", Op::min},
                                                                       {"max", Op::max}};
    if (auto it = unary_fns.find(id); it != unary_fns.end()) {
      // `ln t` and `ln t^2` apply to the following power expression.
      if (!accept('(')) return checked(Expr::unary(it->second, power(level + 1)), level);
      Expr arg = sum(level + 1);
      expect(')');
      return checked(Expr::unary(it->second, arg), level);
    }
    if (auto it = binary_fns.find(id); it != binary_fns.end()) {
      expect('(');
      Expr a = sum(level + 1);
      expect(',');
      Expr b = sum(level + 1);
      expect(')');
      return checked(Expr::binary(it->second, a, b), level);
    }
    if (std::find(vars_.begin(), vars_.end(), id) != vars_.end()) return Expr::variable();
    if (auto it = params_.find(id); it != params_.end()) return Expr::constant(it->second);
    if (id == "e") return Expr::constant(std::numbers::e);
    if (id == "pi") return Expr::constant(std::numbers::pi);
    throw SyntaxError("unknown identifier '" + id + "'", start);
  }

  std::string_view text_;
  const ParamMap& params_;
  const std::vector<std::string>& vars_;
  ParseLimits limits_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, const ParamMap& params,
                const std::vector<std::string>& variables, const ParseLimits& limits) {
  // U+2212 MINUS SIGN is read as '-'; padding keeps byte offsets intact.
  std::string ascii(text);
  for (std::size_t at = ascii.find("\xE2\x88\x92"); at != std::string::npos; at = ascii.find("\xE2\x88\x92", at))
    ascii.replace(at, 3, "-  ");
  return Parser(ascii, params, variables, limits).parse();
}

}  // namespace vlp
