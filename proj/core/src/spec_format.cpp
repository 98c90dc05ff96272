#include "vlp/spec_format.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "vlp/error.hpp"

namespace vlp {

namespace {

std::string bare_message(const SyntaxError& e) {
  std::string msg = e.what();
  const auto cut = msg.rfind(" (at offset ");
  return cut == std::string::npos ? msg : msg.substr(0, cut);
}

// Runs `fn` and shifts any SyntaxError offset by `base`.
template <class Fn>
auto shifted(std::size_t base, Fn&& fn) {
  try {
    return fn();
  } catch (const SyntaxError& e) {
    throw SyntaxError(bare_message(e), base + e.position());
  }
}

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t a = skip_space(s, 0);
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  offset += a;
  return s.substr(a, b - a);
}

Monotonicity parse_monotone(std::string_view word, std::size_t at) {
  if (word == "inc" || word == "increasing") return Monotonicity::increasing;
  if (word == "dec" || word == "decreasing") return Monotonicity::decreasing;
  if (word == "const" || word == "constant") return Monotonicity::constant;
  if (word == "unknown") return Monotonicity::unknown;
  throw SyntaxError("monotone must be inc, dec, const or unknown, got '" + std::string(word) + "'", at);
}

double parse_bound(std::string_view text, std::size_t at, const ParamMap& params) {
  std::size_t off = at;
  std::string_view t = trim(text, off);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') {
    t = t.substr(1, t.size() - 2);
    ++off;
  }
  if (t == "inf" || t == "+inf" || t == "infinity") return kInf;
  const Expr e = shifted(off, [&] { return parse_expr(t, params, {}); });
  if (!e.is_constant()) throw SyntaxError("interval bound must be a constant", off);
  return e.constant_value();
}

struct RawPiece {
  std::string expr;
  std::size_t expr_at = 0;
  double lo = 0.0, hi = 0.0;
  bool has_span = false;
  std::optional<Monotonicity> monotone;
};

Piece finish_piece(const RawPiece& raw, const ParamMap& params) {
  Expr e = shifted(raw.expr_at, [&] { return parse_expr(raw.expr, params); });
  Monotonicity m = raw.monotone.value_or(Monotonicity::unknown);
  if (e.is_constant()) m = Monotonicity::constant;
  return Piece{{raw.lo, raw.hi}, std::move(e), m, false};
}

// `[a, b]` or `(a, b)` starting at text[i]; returns one past the closer.
std::size_t parse_pair(std::string_view text, std::size_t i, const ParamMap& params, double& lo,
                       double& hi) {
  i = skip_space(text, i);
  if (i >= text.size() || (text[i] != '[' && text[i] != '('))
    throw SyntaxError("expected '(' or '[' opening an interval", i);
  const std::size_t open = i + 1;
  int depth = 0;
  std::size_t comma = std::string_view::npos, close = std::string_view::npos;
  for (std::size_t k = open; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '(') ++depth;
    else if (c == ')' || c == ']') {
      if (depth == 0) {
        close = k;
        break;
      }
      --depth;
    } else if (c == ',' && depth == 0 && comma == std::string_view::npos) {
      comma = k;
    }
  }
  if (close == std::string_view::npos) throw SyntaxError("unterminated interval", i);
  if (comma == std::string_view::npos) throw SyntaxError("interval needs two bounds", close);
  lo = parse_bound(text.substr(open, comma - open), open, params);
  hi = parse_bound(text.substr(comma + 1, close - comma - 1), comma + 1, params);
  return close + 1;
}

struct Line {
  std::string_view text;
  std::size_t at;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    // Strip comments outside quotes.
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '"') quoted = !quoted;
      if (line[k] == '#' && !quoted) {
        line = line.substr(0, k);
        break;
      }
    }
    std::size_t at = start;
    line = trim(line, at);
    if (!line.empty()) out.push_back({line, at});
    start = end + 1;
  }
  return out;
}

std::string unquote(std::string_view v, std::size_t& at) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') {
    ++at;
    return std::string(v.substr(1, v.size() - 2));
  }
  return std::string(v);
}

PiecewiseFunction parse_document(std::string_view text, const ParamMap& extra) {
  std::string name = "p";
  std::optional<std::pair<double, double>> domain;
  std::size_t domain_at = 0;
  ParamMap params = extra;
  std::vector<RawPiece> raws;
  enum class Section { top, params, piece } section = Section::top;

  // Params must be known before bounds and expressions are parsed, so the
  // document is read in two passes.
  for (const Line& line : split_lines(text)) {
    if (line.text == "[params]") {
      section = Section::params;
      continue;
    }
    if (line.text.front() == '[') {
      section = Section::top;
      continue;
    }
    if (section != Section::params) continue;
    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos) throw SyntaxError("expected 'key = value'", line.at);
    std::size_t kat = line.at, vat = line.at + eq + 1;
    const std::string key(trim(line.text.substr(0, eq), kat));
    const std::string_view value = trim(line.text.substr(eq + 1), vat);
    const Expr e = shifted(vat, [&] { return parse_expr(value, params, {}); });
    if (!e.is_constant()) throw SyntaxError("parameter value must be constant", vat);
    params[key] = e.constant_value();
  }

  section = Section::top;
  for (const Line& line : split_lines(text)) {
    if (line.text == "[params]") {
      section = Section::params;
      continue;
    }
    if (line.text == "[[piece]]") {
      section = Section::piece;
      raws.emplace_back();
      continue;
    }
    if (line.text.front() == '[') throw SyntaxError("unknown section " + std::string(line.text), line.at);
    if (section == Section::params) continue;

    const auto eq = line.text.find('=');
    if (eq == std::string_view::npos) throw SyntaxError("expected 'key = value'", line.at);
    std::size_t kat = line.at, vat = line.at + eq + 1;
    const std::string key(trim(line.text.substr(0, eq), kat));
    const std::string_view value = trim(line.text.substr(eq + 1), vat);

    if (section == Section::top) {
      if (key == "name") {
        name = unquote(value, vat);
      } else if (key == "domain") {
        double lo = 0, hi = 0;
        const std::size_t end = parse_pair(text, vat, params, lo, hi);
        if (skip_space(text, end) < vat + value.size()) throw SyntaxError("trailing input after domain", end);
        domain = {lo, hi};
        domain_at = vat;
      } else {
        throw SyntaxError("unknown key '" + key + "'", kat);
      }
      continue;
    }

    RawPiece& raw = raws.back();
    if (key == "on") {
      parse_pair(text, vat, params, raw.lo, raw.hi);
      raw.has_span = true;
    } else if (key == "expr") {
      std::size_t at = vat;
      raw.expr = unquote(value, at);
      raw.expr_at = at;
    } else if (key == "monotone") {
      std::size_t at = vat;
      raw.monotone = parse_monotone(unquote(value, at), at);
    } else {
      throw SyntaxError("unknown piece key '" + key + "'", kat);
    }
  }

  if (!domain) throw SyntaxError("document has no domain", 0);
  if (raws.empty()) throw SyntaxError("document has no [[piece]] block", 0);
  const IntervalDomain dom = [&] {
    try {
      return IntervalDomain(domain->first, domain->second);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " (domain at offset " + std::to_string(domain_at) + ")");
    }
  }();
  std::vector<Piece> pieces;
  for (RawPiece& raw : raws) {
    if (raw.expr.empty()) throw SyntaxError("piece without expr", raw.expr_at);
    if (!raw.has_span) {
      if (raws.size() != 1) throw SyntaxError("piece without 'on' in a multi-piece document", raw.expr_at);
      raw.lo = dom.lo();
      raw.hi = dom.hi();
    }
    if (!(raw.lo < raw.hi)) throw DomainError("piece interval is empty or inverted");
    pieces.push_back(finish_piece(raw, params));
  }
  return PiecewiseFunction(dom, std::move(pieces), name);
}

PiecewiseFunction parse_inline(std::string_view text, const ParamMap& params) {
  std::string name = "p";
  std::size_t i = skip_space(text, 0);
  // Optional "name(t)=" prefix.
  const auto eq = text.find('=');
  if (eq != std::string_view::npos) {
    std::size_t at = 0;
    std::string_view head = trim(text.substr(0, eq), at);
    const auto paren = head.find('(');
    name = std::string(head.substr(0, paren));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    if (name.empty()) throw SyntaxError("missing function name before '='", at);
    i = eq + 1;
  }

  std::vector<RawPiece> raws;
  while (true) {
    const std::size_t end_piece = std::min(text.find(';', i), text.size());
    const std::string_view segment = text.substr(i, end_piece - i);
    // The last " on " at parenthesis depth zero separates expression and span.
    std::size_t on = std::string_view::npos;
    int depth = 0;
    for (std::size_t k = 0; k + 3 < segment.size(); ++k) {
      const char c = segment[k];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && std::isspace(static_cast<unsigned char>(c)) && segment.substr(k + 1, 2) == "on" &&
          k + 3 < segment.size() &&
          (std::isspace(static_cast<unsigned char>(segment[k + 3])) || segment[k + 3] == '(' ||
           segment[k + 3] == '['))
        on = k;
    }
    if (on == std::string_view::npos) throw SyntaxError("expected 'on (a, b)' after the expression", i + segment.size());
    RawPiece raw;
    std::size_t at = i;
    raw.expr = std::string(trim(segment.substr(0, on), at));
    raw.expr_at = at;
    if (raw.expr.empty()) throw SyntaxError("empty expression", i);
    const std::size_t after = parse_pair(text, i + on + 3, params, raw.lo, raw.hi);
    raw.has_span = true;
    std::size_t tat = after;
    const std::string_view tail = trim(text.substr(after, end_piece - after), tat);
    if (!tail.empty()) raw.monotone = parse_monotone(tail, tat);
    raws.push_back(std::move(raw));
    if (end_piece >= text.size()) break;
    i = end_piece + 1;
    if (skip_space(text, i) >= text.size()) break;
  }

  double lo = kInf, hi = -kInf;
  for (const auto& r : raws) {
    if (!(r.lo < r.hi)) throw DomainError("piece interval is empty or inverted");
    lo = std::min(lo, r.lo);
    hi = std::max(hi, r.hi);
  }
  const IntervalDomain dom(lo, hi);
  std::vector<Piece> pieces;
  for (const auto& r : raws) pieces.push_back(finish_piece(r, params));
  return PiecewiseFunction(dom, std::move(pieces), name);
}

bool looks_like_document(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    if (line.text == "[[piece]]" || line.text == "[params]") return true;
    if (line.text.rfind("domain", 0) == 0 || line.text.rfind("name", 0) == 0) return true;
  }
  return false;
}

std::string bound_text(double v) {
  if (std::isinf(v)) return "\"inf\"";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

PiecewiseFunction parse_function_spec(std::string_view text, const ParamMap& extra_params) {
  return looks_like_document(text) ? parse_document(text, extra_params) : parse_inline(text, extra_params);
}

ExponentFunction parse_exponent_spec(std::string_view text, const ParamMap& extra_params,
                                     const GridOptions& grid) {
  return ExponentFunction(parse_function_spec(text, extra_params), grid);
}

std::string format_function_spec(const PiecewiseFunction& f) {
  std::ostringstream os;
  os << "name = \"" << f.name() << "\"\n";
  os << "domain = [" << bound_text(f.domain().lo()) << ", " << bound_text(f.domain().hi()) << "]\n";
  for (const auto& piece : f.pieces()) {
    os << "\n[[piece]]\n";
    os << "on = [" << bound_text(piece.span.lo) << ", " << bound_text(piece.span.hi) << "]\n";
    os << "expr = \"" << piece.expr.to_string() << "\"\n";
    os << "monotone = \"" << to_string(piece.monotone) << "\"\n";
  }
  return os.str();
}

}  // namespace vlp
