#include "cdalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cdalg {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      if (sgn(x) != 0 && sgn(v[c]) != 0) out[r] += x * v[c];
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  }
  return r;
}

EchelonForm row_reduce(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Clear denominators row by row so elimination runs over integers.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  // Bareiss: after step k every entry below/right of the pivot is an
  // integer minor, and the division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[pr], a[sel]);
    for (std::size_t r = pr + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = a[pr][c] * a[r][k] - a[r][c] * a[pr][k];
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[pr][c];
    pivots.push_back(c);
    ++pr;
  }

  // Back-substitute into reduced form over the rationals.
  RationalMatrix rref(rows, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) rref(r, c) = Rational(a[r][c]);
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    const Rational p = rref(r, pc);
    for (std::size_t c = 0; c < cols; ++c) rref(r, c) /= p;
    for (std::size_t above = 0; above < r; ++above) {
      const Rational f = rref(above, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) rref(above, c) -= f * rref(r, c);
    }
  }
  return {std::move(rref), std::move(pivots)};
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const EchelonForm ef = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ef.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.rref(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

std::size_t rank_of(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  SpanTracker span(vectors.front().size());
  for (const auto& v : vectors) span.add(v);
  return span.rank();
}

std::vector<Rational> SpanTracker::reduce(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("span vector has wrong dimension");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (sgn(rows_[k][c]) != 0) w[c] -= f * rows_[k][c];
    }
  }
  return w;
}

bool SpanTracker::contains(std::span<const Rational> v) const {
  for (const auto& x : reduce(v)) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool SpanTracker::add(std::span<const Rational> v) {
  std::vector<Rational> w = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && sgn(w[p]) == 0) ++p;
  if (p == dim_) return false;
  const Rational lead = w[p];
  for (auto& x : w) x /= lead;
  // Keep existing rows free of the new pivot.
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) row[c] -= f * w[c];
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

}  // namespace cdalg
