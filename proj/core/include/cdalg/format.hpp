#ifndef CDALG_FORMAT_HPP
#define CDALG_FORMAT_HPP

#include <string>

#include "cdalg/element.hpp"

namespace cdalg {

/// "p/q" (or "p"); doubles in shortest round-trip fixed notation, always
/// with a decimal point so the text reparses as a float literal.
std::string format_scalar(const Rational& v);
std::string format_scalar(double v);

/// "a0 + a1 e1 - a2 e2 ...", zero terms omitted, exact unit coefficients
/// elided.
/// Output reparses to the identical element.
template <class T>
std::string format_element(const Element<T>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.dim(); ++i) {
    const T& c = e[i];
    if (c == T(0)) continue;
    const bool negative = c < T(0);
    const T mag = negative ? T(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += format_scalar(mag);
    } else {
      if (!ScalarTraits<T>::exact || !(mag == T(1))) out += format_scalar(mag) + " ";
      out += "e" + std::to_string(i);
    }
  }
  if (out.empty()) out = format_scalar(T(0));
  return out;
}

std::string format_element(const AnyElement& e);

}  // namespace cdalg

#endif  // CDALG_FORMAT_HPP
