#include <doctest.h>

#include "cdalg/linalg.hpp"
#include "cdalg/random.hpp"

using namespace cdalg;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

TEST_CASE("row_reduce gives the reduced echelon form") {
  const RationalMatrix m = from_rows({{2, 4, 1}, {1, 2, 0}, {3, 6, 1}});
  const EchelonForm ef = row_reduce(m);
  CHECK(ef.rank() == 2);
  CHECK(ef.pivots == std::vector<std::size_t>{0, 2});
  CHECK(ef.rref(0, 0) == 1);
  CHECK(ef.rref(0, 1) == 2);
  CHECK(ef.rref(0, 2) == 0);
  CHECK(ef.rref(1, 2) == 1);
  CHECK(ef.rref(2, 0) == 0);
}

TEST_CASE("kernel basis is annihilated and independent") {
  RationalMatrix m(3, 5);
  ElementSampler s(6);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = s.coefficient();
  }
  const auto ker = kernel_basis(m);
  CHECK(ker.size() == 5 - rank(m));
  for (const auto& v : ker) {
    for (const auto& x : m.apply(v)) CHECK(x == 0);
  }
  CHECK(rank_of(ker) == ker.size());
}

TEST_CASE("rational entries and rank edge cases") {
  RationalMatrix m(2, 2);
  m(0, 0) = make_rational(1, 3);
  m(0, 1) = make_rational(2, 7);
  m(1, 0) = make_rational(2, 3);
  m(1, 1) = make_rational(4, 7);
  CHECK(rank(m) == 1);
  CHECK(kernel_basis(m).size() == 1);
  CHECK(rank(RationalMatrix(3, 3)) == 0);
  CHECK(rank(RationalMatrix::identity(4)) == 4);
  CHECK(kernel_basis(RationalMatrix::identity(4)).empty());
  CHECK(rank_of({}) == 0);
}

TEST_CASE("matrix algebra") {
  const RationalMatrix a = from_rows({{1, 2}, {3, 4}});
  const RationalMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a + b - b == a);
  CHECK(a * RationalMatrix::identity(2) == a);
}

TEST_CASE("span tracker") {
  SpanTracker t(3);
  const std::vector<Rational> u{1, 2, 3}, v{0, 1, 1}, w{2, 5, 7}, z{0, 0, 1};
  CHECK(t.add(u));
  CHECK(t.add(v));
  CHECK(t.contains(w));
  CHECK_FALSE(t.add(w));
  CHECK_FALSE(t.contains(z));
  CHECK(t.add(z));
  CHECK(t.rank() == 3);
  CHECK_FALSE(t.add(std::vector<Rational>{0, 0, 0}));
}
