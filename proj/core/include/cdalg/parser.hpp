#ifndef CDALG_PARSER_HPP
#define CDALG_PARSER_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdalg/element.hpp"

namespace cdalg {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Element literal: sums of terms "[coefficient] [basis]" where the
/// coefficient is an integer, "p/q" or a decimal and the basis is e<index>
/// (e0 is 1) or one of i, j, k for e1, e2, e3. Only the first term may
/// carry a sign. Repeated basis terms add up.
///
/// Without an explicit level the smallest level holding the largest index is
/// used. Rational literals give an exact element, decimals a float one;
/// mixing both is an error.
AnyElement parse_element(std::string_view text, std::optional<unsigned> level = std::nullopt);

/// Expression syntax tree.
struct Expr {
  enum class Kind { Literal, Basis, Neg, Add, Sub, Mul, Conj, Inv, Pow, Norm, Re, Im };

  Kind kind = Kind::Literal;
  Scalar literal = Rational(0);
  std::size_t index = 0;
  long exponent = 0;
  std::vector<Expr> args;
  std::size_t offset = 0;

  bool has_decimal() const;
};

/// expr := term (('+' | '-') term)*
/// term := unary ('*' unary)*
/// unary := '-' unary | power
/// power := primary ('^' ['-'] integer)?
/// primary := number [basis] | basis | '(' expr ')' | (conj|inv|norm|re|im) '(' expr ')'
Expr parse_expression(std::string_view text);

/// Evaluates against the cd-core operations at a fixed level. Throws
/// std::invalid_argument if a basis index does not fit the level and
/// std::domain_error on inv(0).
template <class T>
Element<T> evaluate(const Expr& expr, unsigned level);

extern template Element<Rational> evaluate<Rational>(const Expr&, unsigned);
extern template Element<double> evaluate<double>(const Expr&, unsigned);

/// Parses and evaluates. Decimal literals force the float backend for the
/// whole expression; requesting Exact for such an expression is an error.
AnyElement eval_expression(std::string_view text, unsigned level, std::optional<Backend> backend = std::nullopt);

}  // namespace cdalg

#endif  // CDALG_PARSER_HPP
