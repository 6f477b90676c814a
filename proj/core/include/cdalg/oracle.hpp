#ifndef CDALG_ORACLE_HPP
#define CDALG_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdalg/element.hpp"
#include "cdalg/linalg.hpp"

namespace cdalg {

/// Real-linear map on the coefficients of A_level.
struct LinearOperator {
  unsigned level = 0;
  RationalMatrix matrix;

  ExactElement apply(const ExactElement& x) const;

  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
  /// Composition: (a * b)(x) = a(b(x)).
  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);
  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;
};

struct Nullspace {
  unsigned level = 0;
  std::size_t dimension = 0;
  std::vector<ExactElement> basis;
};

/// Column j is coeffs(a * e_j).
LinearOperator left_mul_matrix(const ExactElement& a);
/// Column j is coeffs(e_j * a).
LinearOperator right_mul_matrix(const ExactElement& a);
/// diag(1, -1, ..., -1)
LinearOperator conjugation_matrix(unsigned level);
LinearOperator identity_operator(unsigned level);

/// Exact kernel, basis in reduced echelon order.
Nullspace nullspace(const LinearOperator& op);

/// Solutions of a x = x b as the kernel of L_a - R_b.
Nullspace oracle_solve_sim(const ExactElement& a, const ExactElement& b);

/// Solutions of a x = conj(x) b as the kernel of L_a - R_b C. The equation is
/// not linear over the algebra but it is linear over the reals.
Nullspace oracle_solve_consim(const ExactElement& a, const ExactElement& b);

struct ZeroDivisorWitness {
  ExactElement a;
  ExactElement x;
};

/// Looks for nonzero a, x with a x = 0. First exhausts every pair of
/// candidates of the form e_i +- e_j, then tries `budget` seeded random
/// sparse a and takes the exact kernel of L_a.
std::optional<ZeroDivisorWitness> zero_divisor_search(unsigned level, std::size_t budget, std::uint64_t seed = 1);

}  // namespace cdalg

#endif  // CDALG_ORACLE_HPP
