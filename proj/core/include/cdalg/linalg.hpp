#ifndef CDALG_LINALG_HPP
#define CDALG_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cdalg/rational.hpp"

namespace cdalg {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Rational> apply(std::span<const Rational> v) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Result of fraction-free (Bareiss) elimination: the reduced row echelon
/// form, normalized back to rationals, and its pivot columns.
struct EchelonForm {
  RationalMatrix rref;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

EchelonForm row_reduce(const RationalMatrix& m);

/// Exact kernel basis, one vector per free column in ascending order, with
/// the free variable set to 1.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Rank of a list of equal-length vectors.
std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors);

/// Incrementally maintained exact span; membership by reduction against
/// the rows collected so far.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  bool contains(std::span<const Rational> v) const;

  /// Adds v if it is independent of the current span. Returns true if added.
  bool add(std::span<const Rational> v);

 private:
  std::vector<Rational> reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  // Each row is normalized with a 1 at pivots_[k] and zeros at the other pivots.
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cdalg

#endif  // CDALG_LINALG_HPP
