#ifndef CDALG_SCALAR_HPP
#define CDALG_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "cdalg/rational.hpp"

namespace cdalg {

/// Tolerances for the Float64 backend. Exact comparisons ignore these.
inline constexpr double kRelTol = 1e-10;
inline constexpr double kAbsTol = 1e-12;

enum class Backend { Exact, Float };

/// A coefficient of unknown backend, as produced by parsers and JSON input.
using Scalar = std::variant<Rational, double>;

/// Raised when an exact computation would need an irrational value
/// (typically a square root that is not a perfect rational square).
class InexactError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class T>
struct ScalarTraits;

inline Rational rational_abs(const Rational& v) { return Rational(abs(v)); }

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::Exact;
  static constexpr const char* name = "exact";

  static Rational from_int(long v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static int sign(const Rational& v) { return sgn(v); }
  static bool near(const Rational& a, const Rational& b) { return a == b; }
  static Rational abs(const Rational& v) { return rational_abs(v); }

  /// Throws InexactError unless v is a rational square.
  static Rational sqrt(const Rational& v) {
    if (sgn(v) < 0) throw std::domain_error("sqrt of negative scalar");
    auto r = exact_sqrt(v);
    if (!r) throw InexactError("square root of " + v.get_str() + " is not rational");
    return *r;
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::Float;
  static constexpr const char* name = "float";

  static double from_int(long v) { return static_cast<double>(v); }
  static double to_double(double v) { return v; }
  static bool is_zero(double v) { return std::abs(v) <= kAbsTol; }
  static int sign(double v) { return is_zero(v) ? 0 : (v < 0 ? -1 : 1); }
  static bool near(double a, double b) {
    return std::abs(a - b) <= std::max(kAbsTol, kRelTol * std::max(std::abs(a), std::abs(b)));
  }
  static double abs(double v) { return std::abs(v); }

  static double sqrt(double v) {
    if (v < 0) {
      if (v > -kAbsTol) return 0.0;
      throw std::domain_error("sqrt of negative scalar");
    }
    return std::sqrt(v);
  }
};

template <class T>
concept ScalarType = requires { ScalarTraits<T>::exact; };

inline Backend backend_of(const Scalar& s) {
  return std::holds_alternative<Rational>(s) ? Backend::Exact : Backend::Float;
}

inline double to_double(const Scalar& s) {
  return std::visit([](const auto& v) { return ScalarTraits<std::decay_t<decltype(v)>>::to_double(v); }, s);
}

}  // namespace cdalg

#endif  // CDALG_SCALAR_HPP
