#ifndef CDALG_SUBALGEBRA_HPP
#define CDALG_SUBALGEBRA_HPP

#include <vector>

#include "cdalg/element.hpp"

namespace cdalg {

/// Linearly independent spanning set of a multiplication-closed subspace
/// containing 1.
struct SubalgebraBasis {
  unsigned ambient_level = 0;
  std::vector<ExactElement> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
  bool contains(const ExactElement& x) const;
};

/// Smallest subalgebra containing 1 and the generators, by iterated
/// closure: products escaping the current span are appended until none do.
/// Generators must share a level. Terminates since the span is at most
/// 2^level dimensional.
SubalgebraBasis subalgebra_basis(const std::vector<ExactElement>& generators);

}  // namespace cdalg

#endif  // CDALG_SUBALGEBRA_HPP
