#include "cdalg/element.hpp"

namespace cdalg {

AnyElement make_element(unsigned level, const std::vector<Scalar>& coeffs) {
  if (level > kMaxElementLevel) {
    throw std::invalid_argument("level " + std::to_string(level) + " exceeds maximum " +
                                std::to_string(kMaxElementLevel));
  }
  if (coeffs.size() != dimension_of(level)) {
    throw std::invalid_argument("coefficient count " + std::to_string(coeffs.size()) + " does not match level " +
                                std::to_string(level) + ": length must be " + std::to_string(dimension_of(level)));
  }
  const Backend backend = backend_of(coeffs.front());
  for (const auto& c : coeffs) {
    if (backend_of(c) != backend) throw std::invalid_argument("mixed exact and float coefficients");
  }
  if (backend == Backend::Exact) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(std::get<Rational>(c));
    return ExactElement(level, std::move(v));
  }
  std::vector<double> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(std::get<double>(c));
  return FloatElement(level, std::move(v));
}

}  // namespace cdalg
