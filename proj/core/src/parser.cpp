#include "cdalg/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace cdalg {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

/// Shared character cursor for both grammars.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }
  std::string_view text() const noexcept { return text_; }
  bool done() const noexcept { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const noexcept {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void advance(std::size_t n = 1) noexcept { pos_ += n; }

  void skip_ws() {
    while (!done() && is_space(peek())) advance();
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  bool at_number() const { return is_digit(peek()) || (peek() == '.' && is_digit(peek(1))); }

  bool at_basis() const {
    const char c = peek();
    if (c == 'e') return is_digit(peek(1));
    if (c == 'i' || c == 'j' || c == 'k') return !is_alpha(peek(1)) && !is_digit(peek(1));
    return false;
  }

  /// integer | integer '/' integer | decimal
  Scalar number() {
    const std::size_t start = pos_;
    while (is_digit(peek())) advance();
    if (peek() == '.') {
      advance();
      while (is_digit(peek())) advance();
      const std::string_view lit = text_.substr(start, pos_ - start);
      double v = 0;
      auto [p, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), v);
      if (ec != std::errc() || p != lit.data() + lit.size()) fail("malformed decimal literal", start);
      return v;
    }
    if (peek() == '/' && is_digit(peek(1))) {
      advance();
      while (is_digit(peek())) advance();
    }
    const std::string_view lit = text_.substr(start, pos_ - start);
    try {
      return parse_rational(lit);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), start);
    }
  }

  std::size_t basis_index() {
    const char c = peek();
    if (c == 'i' || c == 'j' || c == 'k') {
      advance();
      return c == 'i' ? 1 : (c == 'j' ? 2 : 3);
    }
    const std::size_t start = pos_;
    advance();  // 'e'
    std::size_t idx = 0;
    const char* first = text_.data() + pos_;
    while (is_digit(peek())) advance();
    auto [p, ec] = std::from_chars(first, text_.data() + pos_, idx);
    if (ec != std::errc()) fail("basis index out of range", start);
    return idx;
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (is_alpha(peek()) || is_digit(peek())) advance();
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

unsigned level_for_index(std::size_t max_index) {
  unsigned n = 0;
  while (dimension_of(n) <= max_index) ++n;
  return n;
}

Scalar negate(const Scalar& s) {
  return std::visit([](const auto& v) -> Scalar { return std::decay_t<decltype(v)>(-v); }, s);
}

}  // namespace

AnyElement parse_element(std::string_view text, std::optional<unsigned> level) {
  Cursor cur(text);
  struct Term {
    std::size_t index;
    Scalar coeff;
    std::size_t offset;
  };
  std::vector<Term> terms;
  std::optional<Backend> backend;

  cur.skip_ws();
  bool negative = false;
  if (cur.peek() == '-' || cur.peek() == '+') {
    negative = cur.peek() == '-';
    cur.advance();
  }
  for (;;) {
    cur.skip_ws();
    const std::size_t start = cur.pos();
    Scalar coeff = Rational(1);
    bool has_coeff = false;
    if (cur.at_number()) {
      coeff = cur.number();
      has_coeff = true;
      const Backend b = backend_of(coeff);
      if (backend && *backend != b) cur.fail("mixed exact and decimal literals", start);
      backend = b;
      cur.skip_ws();
    }
    std::size_t index = 0;
    if (cur.at_basis()) {
      index = cur.basis_index();
    } else if (!has_coeff) {
      cur.fail("expected a coefficient or basis element");
    }
    if (negative) coeff = negate(coeff);
    terms.push_back({index, coeff, start});

    cur.skip_ws();
    if (cur.done()) break;
    const char op = cur.peek();
    if (op != '+' && op != '-') cur.fail("expected '+' or '-'");
    negative = op == '-';
    cur.advance();
  }

  std::size_t max_index = 0;
  for (const auto& t : terms) max_index = std::max(max_index, t.index);
  unsigned n = level_for_index(max_index);
  if (level) {
    for (const auto& t : terms) {
      if (t.index >= dimension_of(*level)) {
        throw ParseError("basis index " + std::to_string(t.index) + " does not exist at level " +
                             std::to_string(*level),
                         t.offset);
      }
    }
    n = *level;
  }
  if (n > kMaxElementLevel) throw ParseError("level too large", 0);

  const Backend be = backend.value_or(Backend::Exact);
  std::vector<Scalar> coeffs(dimension_of(n));
  for (auto& c : coeffs) {
    if (be == Backend::Exact) {
      c = Rational(0);
    } else {
      c = 0.0;
    }
  }
  for (const auto& t : terms) {
    Scalar& slot = coeffs[t.index];
    if (be == Backend::Exact) {
      slot = Rational(std::get<Rational>(slot) + std::get<Rational>(t.coeff));
    } else {
      const double add = std::holds_alternative<double>(t.coeff) ? std::get<double>(t.coeff)
                                                                : std::get<Rational>(t.coeff).get_d();
      slot = std::get<double>(slot) + add;
    }
  }
  return make_element(n, coeffs);
}

// ---------------------------------------------------------------------------
// Expressions

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : cur_(text) {}

  Expr parse() {
    Expr e = expr();
    cur_.skip_ws();
    if (!cur_.done()) cur_.fail("unexpected trailing input");
    return e;
  }

 private:
  static Expr node(Expr::Kind kind, std::size_t offset, std::vector<Expr> args = {}) {
    Expr e;
    e.kind = kind;
    e.offset = offset;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      cur_.skip_ws();
      const std::size_t at = cur_.pos();
      if (cur_.accept('+')) {
        lhs = node(Expr::Kind::Add, at, {std::move(lhs), term()});
      } else if (cur_.accept('-')) {
        lhs = node(Expr::Kind::Sub, at, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      cur_.skip_ws();
      const std::size_t at = cur_.pos();
      if (!cur_.accept('*')) return lhs;
      lhs = node(Expr::Kind::Mul, at, {std::move(lhs), unary()});
    }
  }

  Expr unary() {
    cur_.skip_ws();
    const std::size_t at = cur_.pos();
    if (cur_.accept('-')) return node(Expr::Kind::Neg, at, {unary()});
    return power();
  }

  Expr power() {
    Expr base = primary();
    cur_.skip_ws();
    const std::size_t at = cur_.pos();
    if (!cur_.accept('^')) return base;
    cur_.skip_ws();
    bool neg = false;
    if (cur_.peek() == '-') {
      neg = true;
      cur_.advance();
    }
    if (!is_digit(cur_.peek())) cur_.fail("expected integer exponent");
    const std::size_t start = cur_.pos();
    while (is_digit(cur_.peek())) cur_.advance();
    Expr e = node(Expr::Kind::Pow, at, {std::move(base)});
    const std::string_view digits = cur_.text().substr(start, cur_.pos() - start);
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e.exponent);
    if (ec != std::errc()) cur_.fail("exponent out of range", start);
    if (neg) e.exponent = -e.exponent;
    return e;
  }

 private:
  Expr primary() {
    cur_.skip_ws();
    const std::size_t at = cur_.pos();
    if (cur_.at_number()) {
      Expr lit = node(Expr::Kind::Literal, at);
      lit.literal = cur_.number();
      // Juxtaposed basis: "2e1", "3/2 e1".
      Cursor save = cur_;
      cur_.skip_ws();
      if (cur_.at_basis()) {
        const std::size_t bat = cur_.pos();
        Expr b = node(Expr::Kind::Basis, bat);
        b.index = cur_.basis_index();
        return node(Expr::Kind::Mul, bat, {std::move(lit), std::move(b)});
      }
      cur_ = save;
      return lit;
    }
    if (cur_.at_basis()) {
      Expr b = node(Expr::Kind::Basis, at);
      b.index = cur_.basis_index();
      return b;
    }
    if (cur_.accept('(')) {
      Expr inner = expr();
      if (!cur_.accept(')')) cur_.fail("expected ')'");
      return inner;
    }
    if (is_alpha(cur_.peek())) {
      static const std::map<std::string_view, Expr::Kind> functions = {
          {"conj", Expr::Kind::Conj}, {"inv", Expr::Kind::Inv}, {"norm", Expr::Kind::Norm},
          {"re", Expr::Kind::Re},     {"im", Expr::Kind::Im}};
      const std::string_view name = cur_.identifier();
      auto it = functions.find(name);
      if (it == functions.end()) cur_.fail("unknown identifier '" + std::string(name) + "'", at);
      if (!cur_.accept('(')) cur_.fail("expected '(' after " + std::string(name));
      Expr arg = expr();
      if (!cur_.accept(')')) cur_.fail("expected ')'");
      return node(it->second, at, {std::move(arg)});
    }
    if (cur_.done()) cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected character '") + cur_.peek() + "'");
  }

  Cursor cur_;
};

}  // namespace

bool Expr::has_decimal() const {
  if (kind == Kind::Literal && std::holds_alternative<double>(literal)) return true;
  return std::any_of(args.begin(), args.end(), [](const Expr& a) { return a.has_decimal(); });
}

Expr parse_expression(std::string_view text) {
  return ExprParser(text).parse();
}

template <class T>
Element<T> evaluate(const Expr& e, unsigned level) {
  using E = Element<T>;
  switch (e.kind) {
    case Expr::Kind::Literal: {
      T v;
      if constexpr (ScalarTraits<T>::exact) {
        v = std::get<Rational>(e.literal);
      } else {
        v = to_double(e.literal);
      }
      return E::real(level, v);
    }
    case Expr::Kind::Basis:
      if (e.index >= dimension_of(level)) {
        throw ParseError("basis index " + std::to_string(e.index) + " does not exist at level " +
                             std::to_string(level),
                         e.offset);
      }
      return E::basis(level, e.index);
    case Expr::Kind::Neg:
      return -evaluate<T>(e.args[0], level);
    case Expr::Kind::Add:
      return evaluate<T>(e.args[0], level) + evaluate<T>(e.args[1], level);
    case Expr::Kind::Sub:
      return evaluate<T>(e.args[0], level) - evaluate<T>(e.args[1], level);
    case Expr::Kind::Mul:
      return evaluate<T>(e.args[0], level) * evaluate<T>(e.args[1], level);
    case Expr::Kind::Conj:
      return evaluate<T>(e.args[0], level).conjugate();
    case Expr::Kind::Inv:
      return inverse(evaluate<T>(e.args[0], level));
    case Expr::Kind::Pow:
      return pow(evaluate<T>(e.args[0], level), e.exponent);
    case Expr::Kind::Norm:
      return E::real(level, ScalarTraits<T>::sqrt(evaluate<T>(e.args[0], level).norm_sq()));
    case Expr::Kind::Re:
      return E::real(level, evaluate<T>(e.args[0], level).re());
    case Expr::Kind::Im:
      return evaluate<T>(e.args[0], level).im();
  }
  throw std::logic_error("unhandled expression kind");
}

template Element<Rational> evaluate<Rational>(const Expr&, unsigned);
template Element<double> evaluate<double>(const Expr&, unsigned);

AnyElement eval_expression(std::string_view text, unsigned level, std::optional<Backend> backend) {
  if (level > kMaxElementLevel) throw std::invalid_argument("level too large");
  const Expr e = parse_expression(text);
  const bool decimal = e.has_decimal();
  if (backend == Backend::Exact && decimal) {
    throw std::invalid_argument("decimal literal in an exact expression");
  }
  if (decimal || backend == Backend::Float) return evaluate<double>(e, level);
  return evaluate<Rational>(e, level);
}

}  // namespace cdalg
