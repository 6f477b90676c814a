#include "cdalg/structure_table.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cdalg {

StructureTable::StructureTable(unsigned level, std::vector<BasisProduct> entries)
    : level_(level), dim_(dimension_of(level)), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) throw std::invalid_argument("structure table has wrong size");
}

BasisProduct basis_product(unsigned level, std::size_t i, std::size_t j) {
  if (level == 0) return {1, 0};
  const std::size_t h = dimension_of(level - 1);
  const bool i_hi = i >= h;
  const bool j_hi = j >= h;
  const std::size_t il = i_hi ? i - h : i;
  const std::size_t jl = j_hi ? j - h : j;
  // conj(e_k) = e_k for k == 0, -e_k otherwise
  auto conj_sign = [](std::size_t k) { return k == 0 ? 1 : -1; };

  if (!i_hi && !j_hi) {
    // a'b'
    return basis_product(level - 1, il, jl);
  }
  if (!i_hi && j_hi) {
    // (0, b''a')
    BasisProduct p = basis_product(level - 1, jl, il);
    return {p.sign, static_cast<std::uint32_t>(p.index + h)};
  }
  if (i_hi && !j_hi) {
    // (0, a''conj(b'))
    BasisProduct p = basis_product(level - 1, il, jl);
    return {p.sign * conj_sign(jl), static_cast<std::uint32_t>(p.index + h)};
  }
  // (-conj(b'')a'', 0)
  BasisProduct p = basis_product(level - 1, jl, il);
  return {-p.sign * conj_sign(jl), p.index};
}

namespace {

constexpr unsigned kTableSlots = 16;

struct TableSlot {
  std::once_flag once;
  std::unique_ptr<StructureTable> table;
};

std::array<TableSlot, kTableSlots>& table_slots() {
  static std::array<TableSlot, kTableSlots> slots;
  return slots;
}

}  // namespace

const StructureTable& structure_table(unsigned level, unsigned max_level) {
  if (level > max_level || level >= kTableSlots) {
    throw std::invalid_argument("structure table level " + std::to_string(level) + " exceeds cap " +
                                std::to_string(std::min(max_level, kTableSlots - 1)));
  }
  TableSlot& slot = table_slots()[level];
  std::call_once(slot.once, [&slot, level] {
    const std::size_t n = dimension_of(level);
    std::vector<BasisProduct> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) entries.push_back(basis_product(level, i, j));
    }
    slot.table = std::make_unique<StructureTable>(level, std::move(entries));
  });
  return *slot.table;
}

}  // namespace cdalg
