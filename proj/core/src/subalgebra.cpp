#include "cdalg/subalgebra.hpp"

#include "cdalg/linalg.hpp"

namespace cdalg {

bool SubalgebraBasis::contains(const ExactElement& x) const {
  if (x.level() != ambient_level) return false;
  SpanTracker span(dimension_of(ambient_level));
  for (const auto& b : basis) span.add(b.coeffs());
  return span.contains(x.coeffs());
}

SubalgebraBasis subalgebra_basis(const std::vector<ExactElement>& generators) {
  const unsigned level = generators.empty() ? 0 : generators.front().level();
  for (const auto& g : generators) {
    if (g.level() != level) throw LevelMismatch(level, g.level());
  }

  SubalgebraBasis result{level, {}};
  SpanTracker span(dimension_of(level));
  auto push = [&](const ExactElement& x) {
    if (span.add(x.coeffs())) result.basis.push_back(x);
  };

  push(ExactElement::one(level));
  for (const auto& g : generators) push(g);

  // Every pair (including squares, both orders) of the current basis is
  // multiplied; stop once a full pass adds nothing.
  std::size_t checked = 0;
  while (checked < result.basis.size()) {
    const std::size_t n = result.basis.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = (i < checked ? checked : 0); j < n; ++j) {
        push(result.basis[i] * result.basis[j]);
        push(result.basis[j] * result.basis[i]);
      }
    }
    checked = n;
  }
  return result;
}

}  // namespace cdalg
