#include <doctest.h>

#include <cmath>

#include "cdalg/element.hpp"
#include "cdalg/random.hpp"
#include "cdalg/structure_table.hpp"
#include "cdalg/subalgebra.hpp"
#include "helpers.hpp"

using namespace cdalg;
using testing::X;

TEST_CASE("make_element validates length and backend") {
  const AnyElement q = make_element(2, {Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(std::get<ExactElement>(q) == X("1 + 2e1", 2));

  const AnyElement r = make_element(0, {Rational(5)});
  CHECK(level_of(r) == 0);
  CHECK(std::get<ExactElement>(r)[0] == 5);

  try {
    make_element(2, {Rational(1), Rational(2), Rational(0)});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("length must be 4") != std::string::npos);
  }
  CHECK_THROWS_AS(make_element(1, {Rational(1), 2.0}), std::invalid_argument);
  CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("exact rationals stay canonical") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(make_rational(4, 2)) == "2");
}

TEST_CASE("addition and scalar multiplication") {
  CHECK(X("1+e1", 2) + X("2+e2", 2) == X("3 + e1 + e2", 2));
  const ExactElement a = X("3/2 - e1 + 7e3", 2);
  CHECK((a + a * Rational(-1)).is_zero());
  CHECK_THROWS_AS(X("1", 2) + X("1", 3), LevelMismatch);
  CHECK_THROWS_AS(X("e1", 2) * X("e1", 3), LevelMismatch);
}

TEST_CASE("doubling product on small examples") {
  CHECK(X("e1", 2) * X("e2", 2) == X("e3", 2));
  CHECK(X("e2", 2) * X("e1", 2) == X("-e3", 2));
  ExactElement a = X("1 - 2e1 + 1/3 e5", 3);
  CHECK(a * ExactElement::one(3) == a);
  CHECK(ExactElement::one(3) * a == a);
  CHECK(X("(1+e1)", 2) * X("1-e1", 2) == X("2", 2));
  // Basis convention: e_{i+half} = e_i * tau.
  for (unsigned n = 1; n <= 5; ++n) {
    const std::size_t half = dimension_of(n - 1);
    for (std::size_t i = 0; i < half; ++i) {
      CHECK(ExactElement::basis(n, i) * ExactElement::basis(n, half) == ExactElement::basis(n, i + half));
    }
  }
}

TEST_CASE("conjugate, re, im") {
  const ExactElement a = X("1 + 2e1", 1);
  CHECK(a.conjugate() == X("1 - 2e1", 1));
  CHECK(a.re() == 1);
  CHECK(a.im() == X("2e1", 1));
  ElementSampler s(3);
  for (int t = 0; t < 20; ++t) {
    const ExactElement x = s.exact(4), y = s.exact(4);
    CHECK(x.conjugate().conjugate() == x);
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    CHECK((x * y).conjugate() == y.conjugate() * x.conjugate());
  }
  CHECK((X("e1", 2) * X("e2", 2)).conjugate() == X("-e3", 2));
  CHECK(X("e2", 2).conjugate() * X("e1", 2).conjugate() == X("-e3", 2));
}

TEST_CASE("norms") {
  CHECK(norm(X("3 + 4e2", 2)) == doctest::Approx(5.0));
  CHECK(ExactElement::zero(3).norm_sq() == 0);
  ElementSampler s(11);
  for (int t = 0; t < 100; ++t) {
    const ExactElement a = s.exact(4);
    CHECK(a.norm_sq() == (a * a.conjugate())[0]);
    CHECK(a.norm_sq() == (a.conjugate() * a)[0]);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(X("e1", 2)) == X("-e1", 2));
  CHECK(inverse(X("1 + e1", 2)) == X("1/2 - 1/2 e1", 2));
  CHECK_THROWS_AS(inverse(ExactElement::zero(2)), std::domain_error);
  ElementSampler s(5);
  for (unsigned n = 0; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const ExactElement a = s.exact_nonzero(n);
      CHECK(a * inverse(a) == ExactElement::one(n));
      CHECK(inverse(a) * a == ExactElement::one(n));
    }
  }
  // Floats with tiny coefficients remain invertible.
  const FloatElement tiny(2, {1e-14, 0, 0, 0});
  CHECK(nearly_equal(tiny * inverse(tiny), FloatElement::one(2)));
}

TEST_CASE("pow is power-associative") {
  CHECK(pow(X("1 + e1", 2), 2) == X("2e1", 2));
  CHECK(pow(X("1 + e1", 2), 0) == ExactElement::one(2));
  CHECK(pow(X("1 + e1", 2), -1) == inverse(X("1 + e1", 2)));
  ElementSampler s(8);
  for (int t = 0; t < 10; ++t) {
    const ExactElement a = s.exact(4);
    const ExactElement a2 = a * a;
    CHECK(pow(a, 3) == a * a2);
    CHECK(pow(a, 3) == a2 * a);
    CHECK(pow(a, 4) == a2 * a2);
    CHECK(pow(a, 4) == a * (a * a2));
  }
}

TEST_CASE("quadratic identity and friends, levels 0 to 6") {
  ElementSampler s(21);
  for (unsigned n = 0; n <= 6; ++n) {
    for (int t = 0; t < 8; ++t) {
      const ExactElement a = s.exact(n), b = s.exact(n);
      CHECK((a * a - a * (a.re() * 2) + ExactElement::real(n, a.norm_sq())).is_zero());
      const ExactElement ia = a.im();
      CHECK(ia * ia == ExactElement::real(n, -ia.norm_sq()));
      CHECK((a * b).re() == (b * a).re());
      CHECK((a * b) * a == a * (b * a));
    }
  }
}

TEST_CASE("embedding is a coefficient zero-pad and a homomorphism") {
  ElementSampler s(2);
  const ExactElement a = s.exact(3), b = s.exact(3);
  CHECK((a * b).embed(5) == a.embed(5) * b.embed(5));
  CHECK(a.embed(4)[7] == a[7]);
  CHECK(a.embed(4)[8] == 0);
}

TEST_CASE("structure table invariants") {
  const StructureTable& q = structure_table(2);
  CHECK(q(1, 2) == BasisProduct{1, 3});   // ij = k
  CHECK(q(2, 1) == BasisProduct{-1, 3});  // ji = -k
  CHECK(q(2, 3) == BasisProduct{1, 1});   // jk = i
  CHECK(q(3, 2) == BasisProduct{-1, 1});
  CHECK(q(3, 1) == BasisProduct{1, 2});   // ki = j
  CHECK(q(1, 3) == BasisProduct{-1, 2});

  const StructureTable& r = structure_table(0);
  CHECK(r.dim() == 1);
  CHECK(r(0, 0) == BasisProduct{1, 0});

  for (unsigned n = 0; n <= 6; ++n) {
    const StructureTable& t = structure_table(n);
    for (std::size_t i = 0; i < t.dim(); ++i) {
      CHECK(t(0, i) == BasisProduct{1, static_cast<std::uint32_t>(i)});
      CHECK(t(i, 0) == BasisProduct{1, static_cast<std::uint32_t>(i)});
      if (i > 0) CHECK(t(i, i) == BasisProduct{-1, 0});
      for (std::size_t j = 1; j < t.dim(); ++j) {
        if (i == 0 || i == j) continue;
        CHECK(t(i, j).index == t(j, i).index);
        CHECK(t(i, j).sign == -t(j, i).sign);
      }
    }
  }
  CHECK_THROWS_AS(structure_table(9), std::invalid_argument);
  CHECK(&structure_table(3) == &structure_table(3));
}

TEST_CASE("structure table agrees with the doubling product") {
  for (unsigned n = 0; n <= 5; ++n) {
    const StructureTable& t = structure_table(n);
    for (std::size_t i = 0; i < t.dim(); ++i) {
      for (std::size_t j = 0; j < t.dim(); ++j) {
        const ExactElement p = ExactElement::basis(n, i) * ExactElement::basis(n, j);
        CHECK(p == ExactElement::basis(n, t(i, j).index, Rational(t(i, j).sign)));
      }
    }
  }
  ElementSampler s(4);
  for (int k = 0; k < 50; ++k) {
    const ExactElement a = s.exact(4), b = s.exact(4);
    CHECK(table_multiply(a, b) == a * b);
  }
}

TEST_CASE("level-4 table from the level-3 table plus doubling") {
  // Independent route: split each level-4 basis element into halves and
  // multiply the halves by convolution against the level-3 table.
  auto mul3 = [&](const ExactElement& a, const ExactElement& b) { return table_multiply(a, b); };
  const StructureTable& t4 = structure_table(4);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      const auto half = [](std::size_t k, bool high) {
        return ((k >= 8) == high) ? ExactElement::basis(3, k % 8) : ExactElement::zero(3);
      };
      const ExactElement a1 = half(i, false), a2 = half(i, true);
      const ExactElement b1 = half(j, false), b2 = half(j, true);
      const ExactElement lo = mul3(a1, b1) - mul3(b2.conjugate(), a2);
      const ExactElement hi = mul3(b2, a1) + mul3(a2, b1.conjugate());
      std::vector<Rational> c(16, Rational(0));
      for (std::size_t k = 0; k < 8; ++k) {
        c[k] = lo[k];
        c[k + 8] = hi[k];
      }
      const ExactElement expect = ExactElement::basis(4, t4(i, j).index, Rational(t4(i, j).sign));
      CHECK(ExactElement(4, c) == expect);
    }
  }
}

TEST_CASE("subalgebra closure") {
  CHECK(subalgebra_basis({X("e1", 2), X("e2", 2)}).dimension() == 4);
  CHECK(subalgebra_basis({X("e1", 2)}).dimension() == 2);
  CHECK(subalgebra_basis({X("3", 2)}).dimension() == 1);
  // Two octonions generate a quaternion subalgebra.
  ElementSampler s(9);
  for (int t = 0; t < 10; ++t) {
    const SubalgebraBasis sb = subalgebra_basis({s.exact(3), s.exact(3)});
    CHECK(sb.dimension() <= 4);
    for (const auto& u : sb.basis) {
      for (const auto& v : sb.basis) CHECK(sb.contains(u * v));
    }
  }
  // Three octonion units that do not lie in one quaternion subalgebra
  // generate everything.
  CHECK(subalgebra_basis({X("e1", 3), X("e2", 3), X("e4", 3)}).dimension() == 8);
}
