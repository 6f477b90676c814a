#ifndef CDALG_RANDOM_HPP
#define CDALG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "cdalg/element.hpp"

namespace cdalg {

/// Seeded element generator. Only the raw 64-bit engine output is used (no
/// std distributions), so streams are identical across standard libraries.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed) : rng_(seed) {}

  /// Numerator in [-9, 9], denominator in {1, 2, 3}.
  Rational coefficient() {
    const long num = static_cast<long>(rng_() % 19) - 9;
    const long den = static_cast<long>(rng_() % 3) + 1;
    return make_rational(num, den);
  }

  ExactElement exact(unsigned level) {
    std::vector<Rational> c;
    c.reserve(dimension_of(level));
    for (std::size_t i = 0; i < dimension_of(level); ++i) c.push_back(coefficient());
    return ExactElement(level, std::move(c));
  }

  ExactElement exact_nonzero(unsigned level) {
    for (;;) {
      ExactElement e = exact(level);
      if (!e.is_zero()) return e;
    }
  }

  /// Uniform in [-1, 1).
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-52 - 1.0; }

  FloatElement real_valued(unsigned level) {
    std::vector<double> c;
    c.reserve(dimension_of(level));
    for (std::size_t i = 0; i < dimension_of(level); ++i) c.push_back(uniform());
    return FloatElement(level, std::move(c));
  }

  std::uint64_t next() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cdalg

#endif  // CDALG_RANDOM_HPP
