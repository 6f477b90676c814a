#ifndef CDALG_STRUCTURE_TABLE_HPP
#define CDALG_STRUCTURE_TABLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cdalg/element.hpp"

namespace cdalg {

inline constexpr unsigned kDefaultMaxTableLevel = 8;

/// e_i * e_j = sign * e_index
struct BasisProduct {
  int sign;
  std::uint32_t index;

  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// Signed multiplication table of the basis at one level.
class StructureTable {
 public:
  StructureTable(unsigned level, std::vector<BasisProduct> entries);

  unsigned level() const noexcept { return level_; }
  std::size_t dim() const noexcept { return dim_; }
  const BasisProduct& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

 private:
  unsigned level_;
  std::size_t dim_;
  std::vector<BasisProduct> entries_;
};

/// e_i * e_j computed by following the doubling formula on single basis
/// elements (O(level) per product).
BasisProduct basis_product(unsigned level, std::size_t i, std::size_t j);

/// Memoized table for `level`; built once per level, safe to call
/// concurrently. Throws std::invalid_argument if level > max_level.
const StructureTable& structure_table(unsigned level, unsigned max_level = kDefaultMaxTableLevel);

/// Product by coefficient convolution against the structure table. An
/// independent route to the same product as operator*.
template <class T>
Element<T> table_multiply(const Element<T>& a, const Element<T>& b) {
  if (a.level() != b.level()) throw LevelMismatch(a.level(), b.level());
  const StructureTable& table = structure_table(a.level());
  std::vector<T> out(a.dim(), T(0));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == T(0)) continue;
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (b[j] == T(0)) continue;
      const BasisProduct& p = table(i, j);
      if (p.sign > 0) {
        out[p.index] += a[i] * b[j];
      } else {
        out[p.index] -= a[i] * b[j];
      }
    }
  }
  return Element<T>(a.level(), std::move(out));
}

}  // namespace cdalg

#endif  // CDALG_STRUCTURE_TABLE_HPP
