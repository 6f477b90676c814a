#ifndef CDALG_RATIONAL_HPP
#define CDALG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace cdalg {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonicalizes after every arithmetic op).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Exact square root if value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace cdalg

#endif  // CDALG_RATIONAL_HPP
