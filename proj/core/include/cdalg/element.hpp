#ifndef CDALG_ELEMENT_HPP
#define CDALG_ELEMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cdalg/scalar.hpp"

namespace cdalg {

/// Largest level an Element may have. 2^20 coefficients is already far past
/// anything the O(4^n) multiplication can handle in practice.
inline constexpr unsigned kMaxElementLevel = 20;

inline constexpr std::size_t dimension_of(unsigned level) { return std::size_t{1} << level; }

class LevelMismatch : public std::invalid_argument {
 public:
  LevelMismatch(unsigned lhs, unsigned rhs)
      : std::invalid_argument("level mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

namespace detail {

template <class T>
void conjugate_into(std::span<const T> in, std::span<T> out) {
  out[0] = in[0];
  for (std::size_t i = 1; i < in.size(); ++i) out[i] = -in[i];
}

// (a', a'')(b', b'') = (a'b' - conj(b'')a'', b''a' + a''conj(b'))
// `scratch` holds at least 2 * a.size() values; each depth takes 2h of it
// and hands the rest to its (sequential) children.
template <class T>
void doubling_multiply(std::span<const T> a, std::span<const T> b, std::span<T> out, std::span<T> scratch) {
  const std::size_t n = a.size();
  if (n == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  const std::size_t h = n / 2;
  auto a_lo = a.first(h), a_hi = a.subspan(h);
  auto b_lo = b.first(h), b_hi = b.subspan(h);
  auto out_lo = out.first(h), out_hi = out.subspan(h);
  std::span<T> cb = scratch.first(h), t = scratch.subspan(h, h), rest = scratch.subspan(2 * h);

  doubling_multiply<T>(a_lo, b_lo, out_lo, rest);
  conjugate_into<T>(b_hi, cb);
  doubling_multiply<T>(cb, a_hi, t, rest);
  for (std::size_t i = 0; i < h; ++i) out_lo[i] -= t[i];

  doubling_multiply<T>(b_hi, a_lo, out_hi, rest);
  conjugate_into<T>(b_lo, cb);
  doubling_multiply<T>(a_hi, cb, t, rest);
  for (std::size_t i = 0; i < h; ++i) out_hi[i] += t[i];
}

template <class T>
void doubling_multiply(std::span<const T> a, std::span<const T> b, std::span<T> out) {
  std::vector<T> scratch(2 * a.size());
  doubling_multiply<T>(a, b, out, std::span<T>(scratch));
}

}  // namespace detail

/// An element of the 2^level-dimensional Cayley-Dickson algebra A_level,
/// stored as coefficients over the basis e_0 = 1, e_1, ..., e_{2^level - 1}.
///
/// Basis indices below 2^(level-1) are the embedded lower-level basis and
/// e_{i + 2^(level-1)} = e_i * e_{2^(level-1)}, so embedding into a higher
/// level is a zero pad.
template <class T>
class Element {
 public:
  using scalar_type = T;
  using traits = ScalarTraits<T>;

  Element() : level_(0), coeffs_(1, T(0)) {}

  /// Throws std::invalid_argument unless coeffs.size() == 2^level.
  Element(unsigned level, std::vector<T> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    if (level_ > kMaxElementLevel) {
      throw std::invalid_argument("level " + std::to_string(level_) + " exceeds maximum " +
                                  std::to_string(kMaxElementLevel));
    }
    if (coeffs_.size() != dimension_of(level_)) {
      throw std::invalid_argument("coefficient count " + std::to_string(coeffs_.size()) +
                                  " does not match level " + std::to_string(level_) + ": length must be " +
                                  std::to_string(dimension_of(level_)));
    }
  }

  static Element zero(unsigned level) { return Element(level, std::vector<T>(dimension_of(level), T(0))); }
  static Element one(unsigned level) { return real(level, T(1)); }
  static Element real(unsigned level, const T& value) {
    Element e = zero(level);
    e.coeffs_[0] = value;
    return e;
  }
  static Element basis(unsigned level, std::size_t index, const T& scale = T(1)) {
    Element e = zero(level);
    if (index >= e.dim()) {
      throw std::out_of_range("basis index " + std::to_string(index) + " out of range for level " +
                              std::to_string(level));
    }
    e.coeffs_[index] = scale;
    return e;
  }

  unsigned level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::span<const T> coeffs() const noexcept { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }

  const T& re() const { return coeffs_[0]; }
  Element im() const {
    Element r = *this;
    r.coeffs_[0] = T(0);
    return r;
  }
  Element conjugate() const {
    Element r = *this;
    for (std::size_t i = 1; i < r.dim(); ++i) r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }

  T norm_sq() const {
    T s(0);
    for (const auto& c : coeffs_) s += c * c;
    return s;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return traits::is_zero(c); });
  }
  bool is_real() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const T& c) { return traits::is_zero(c); });
  }

  /// Zero-pads into a higher-level algebra.
  Element embed(unsigned target_level) const {
    if (target_level < level_) throw std::invalid_argument("cannot embed into a lower level");
    Element r = zero(target_level);
    std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin());
    return r;
  }

  Element& operator+=(const Element& rhs) {
    check_level(rhs);
    for (std::size_t i = 0; i < dim(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  Element& operator-=(const Element& rhs) {
    check_level(rhs);
    for (std::size_t i = 0; i < dim(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  Element& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Element& operator/=(const T& s) {
    if (s == T(0)) throw std::domain_error("division by zero scalar");
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const T& s) { return lhs *= s; }
  friend Element operator*(const T& s, Element rhs) { return rhs *= s; }
  friend Element operator/(Element lhs, const T& s) { return lhs /= s; }
  friend Element operator-(Element v) {
    for (auto& c : v.coeffs_) c = -c;
    return v;
  }

  /// Cayley-Dickson product by recursive doubling.
  friend Element operator*(const Element& a, const Element& b) {
    a.check_level(b);
    Element r = zero(a.level_);
    detail::doubling_multiply<T>(a.coeffs_, b.coeffs_, r.coeffs_);
    return r;
  }

  /// Exact coefficient equality (bitwise equality for doubles).
  friend bool operator==(const Element& a, const Element& b) {
    return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_level(const Element& other) const {
    if (level_ != other.level_) throw LevelMismatch(level_, other.level_);
  }

  unsigned level_;
  std::vector<T> coeffs_;
};

using ExactElement = Element<Rational>;
using FloatElement = Element<double>;

template <class T>
Element<T> multiply(const Element<T>& a, const Element<T>& b) {
  return a * b;
}

template <class T>
Element<T> conjugate(const Element<T>& a) {
  return a.conjugate();
}

template <class T>
T norm_sq(const Element<T>& a) {
  return a.norm_sq();
}

template <class T>
double norm(const Element<T>& a) {
  return std::sqrt(ScalarTraits<T>::to_double(a.norm_sq()));
}

/// conj(a) / |a|^2; throws std::domain_error for a == 0.
template <class T>
Element<T> inverse(const Element<T>& a) {
  const T n = a.norm_sq();
  if (n == T(0)) throw std::domain_error("inverse of zero element");
  return a.conjugate() / n;
}

/// a^k by repeated squaring; negative k uses the inverse. Well defined at
/// every level because Cayley-Dickson algebras are power-associative.
template <class T>
Element<T> pow(const Element<T>& a, long k) {
  Element<T> base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
  Element<T> result = Element<T>::one(a.level());
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

/// Exact equality for the rational backend; relative kRelTol (absolute
/// kAbsTol near zero) in the Euclidean norm for doubles.
template <class T>
bool nearly_equal(const Element<T>& a, const Element<T>& b, double rel_tol = kRelTol) {
  if (a.level() != b.level()) return false;
  if constexpr (ScalarTraits<T>::exact) {
    return a == b;
  } else {
    const double diff = norm(a - b);
    return diff <= std::max(kAbsTol, rel_tol * std::max(norm(a), norm(b)));
  }
}

inline Element<double> to_float(const Element<Rational>& e) {
  std::vector<double> c;
  c.reserve(e.dim());
  for (const auto& v : e.coeffs()) c.push_back(v.get_d());
  return Element<double>(e.level(), std::move(c));
}

inline Element<double> to_float(const Element<double>& e) { return e; }

/// An element whose backend is decided at run time (parser, JSON, CLI).
using AnyElement = std::variant<ExactElement, FloatElement>;

/// Validates length and backend uniformity of a run-time coefficient list.
/// Throws std::invalid_argument on a length mismatch or mixed backends.
AnyElement make_element(unsigned level, const std::vector<Scalar>& coeffs);

inline unsigned level_of(const AnyElement& e) {
  return std::visit([](const auto& x) { return x.level(); }, e);
}

inline Backend backend_of(const AnyElement& e) {
  return std::holds_alternative<ExactElement>(e) ? Backend::Exact : Backend::Float;
}

inline FloatElement to_float(const AnyElement& e) {
  return std::visit([](const auto& x) { return to_float(x); }, e);
}

}  // namespace cdalg

#endif  // CDALG_ELEMENT_HPP
