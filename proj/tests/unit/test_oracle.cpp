#include <doctest.h>

#include "cdalg/linalg.hpp"
#include "cdalg/oracle.hpp"
#include "cdalg/random.hpp"
#include "helpers.hpp"

using namespace cdalg;
using testing::X;

namespace {

std::size_t span_rank(const std::vector<ExactElement>& es) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& e : es) rows.emplace_back(e.coeffs().begin(), e.coeffs().end());
  return rank_of(rows);
}

}  // namespace

TEST_CASE("multiplication operators") {
  CHECK(left_mul_matrix(ExactElement::one(3)) == identity_operator(3));
  CHECK(right_mul_matrix(ExactElement::one(3)) == identity_operator(3));
  CHECK(left_mul_matrix(X("e1", 2)).apply(X("e2", 2)) == X("e3", 2));

  const LinearOperator l = left_mul_matrix(X("e1", 2)), r = right_mul_matrix(X("e1", 2));
  // L_i and R_i differ exactly on the j,k block.
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 4; ++col) {
      const bool jk_block = row >= 2 && col >= 2;
      CHECK((l.matrix(row, col) != r.matrix(row, col)) == (jk_block && row != col));
    }
  }

  ElementSampler s(1);
  for (int t = 0; t < 10; ++t) {
    const ExactElement a = s.exact(4), x = s.exact(4);
    CHECK(left_mul_matrix(a).apply(x) == a * x);
    CHECK(right_mul_matrix(a).apply(x) == x * a);
  }
}

TEST_CASE("conjugation operator") {
  const LinearOperator c1 = conjugation_matrix(1);
  CHECK(c1.matrix(0, 0) == 1);
  CHECK(c1.matrix(1, 1) == -1);
  CHECK(conjugation_matrix(3) * conjugation_matrix(3) == identity_operator(3));
  ElementSampler s(2);
  for (int t = 0; t < 20; ++t) {
    const ExactElement a = s.exact(3), x = s.exact(3);
    CHECK((left_mul_matrix(a) * conjugation_matrix(3)).apply(x) == a * x.conjugate());
  }
}

TEST_CASE("nullspace") {
  const Nullspace c = nullspace(left_mul_matrix(X("e1", 2)) - right_mul_matrix(X("e1", 2)));
  CHECK(c.dimension == 2);
  CHECK(span_rank({c.basis[0], c.basis[1], X("1", 2)}) == 2);
  CHECK(span_rank({c.basis[0], c.basis[1], X("e1", 2)}) == 2);

  CHECK(nullspace(identity_operator(3) - identity_operator(3)).dimension == 8);
  const LinearOperator l1 = left_mul_matrix(X("1", 2)), r1 = right_mul_matrix(X("1", 2));
  CHECK(nullspace(l1 - r1 + identity_operator(2)).dimension == 0);
}

TEST_CASE("similarity oracle") {
  const Nullspace ns = oracle_solve_sim(X("e1", 2), X("e2", 2));
  CHECK(ns.dimension == 2);
  for (const auto& x : ns.basis) CHECK(X("e1", 2) * x == x * X("e2", 2));
  CHECK(oracle_solve_sim(X("1+e1", 2), X("2+e1", 2)).dimension == 0);

  ElementSampler s(3);
  for (int t = 0; t < 10; ++t) {
    const ExactElement a = s.exact(3);
    if (a.is_real()) continue;
    const Nullspace ker = oracle_solve_sim(a, a);
    CHECK(ker.dimension >= 2);
    SpanTracker span(8);
    for (const auto& v : ker.basis) span.add(v.coeffs());
    CHECK(span.contains(ExactElement::one(3).coeffs()));
    CHECK(span.contains(a.coeffs()));
  }
}

TEST_CASE("consimilarity oracle") {
  const ExactElement i = X("e1", 2), j = X("e2", 2);
  const Nullspace ns = oracle_solve_consim(i, j);
  SpanTracker span(4);
  for (const auto& v : ns.basis) {
    CHECK(i * v == v.conjugate() * j);
    span.add(v.coeffs());
  }
  CHECK(span.contains(X("-e1 + e2", 2).coeffs()));
  CHECK(i * X("-e1+e2", 2) == X("1 + e3", 2));

  CHECK(oracle_solve_consim(X("1", 2), X("2", 2)).dimension == 0);
  const Nullspace hyper = oracle_solve_consim(X("1", 2), X("-1", 2));
  CHECK(hyper.dimension == 3);
  for (const auto& v : hyper.basis) CHECK(v.re() == 0);
}

TEST_CASE("zero divisor search") {
  for (unsigned n = 0; n <= 3; ++n) CHECK_FALSE(zero_divisor_search(n, 20, 1).has_value());
  const auto w = zero_divisor_search(4, 0, 1);
  REQUIRE(w.has_value());
  CHECK_FALSE(w->a.is_zero());
  CHECK_FALSE(w->x.is_zero());
  CHECK((w->a * w->x).is_zero());
  const auto w5 = zero_divisor_search(5, 0, 1);
  REQUIRE(w5.has_value());
  CHECK((w5->a * w5->x).is_zero());
}
