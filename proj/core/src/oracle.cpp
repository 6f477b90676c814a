#include "cdalg/oracle.hpp"

#include <random>
#include <stdexcept>

#include "cdalg/structure_table.hpp"

namespace cdalg {

namespace {

void check_op_levels(const LinearOperator& a, const LinearOperator& b) {
  if (a.level != b.level) throw LevelMismatch(a.level, b.level);
}

template <class Fn>
LinearOperator columns_from(unsigned level, Fn column) {
  const std::size_t n = dimension_of(level);
  LinearOperator op{level, RationalMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const ExactElement col = column(ExactElement::basis(level, j));
    for (std::size_t i = 0; i < n; ++i) op.matrix(i, j) = col[i];
  }
  return op;
}

}  // namespace

ExactElement LinearOperator::apply(const ExactElement& x) const {
  if (x.level() != level) throw LevelMismatch(level, x.level());
  return ExactElement(level, matrix.apply(x.coeffs()));
}

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  check_op_levels(a, b);
  return {a.level, a.matrix + b.matrix};
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  check_op_levels(a, b);
  return {a.level, a.matrix - b.matrix};
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  check_op_levels(a, b);
  return {a.level, a.matrix * b.matrix};
}

LinearOperator left_mul_matrix(const ExactElement& a) {
  return columns_from(a.level(), [&a](const ExactElement& e) { return a * e; });
}

LinearOperator right_mul_matrix(const ExactElement& a) {
  return columns_from(a.level(), [&a](const ExactElement& e) { return e * a; });
}

LinearOperator conjugation_matrix(unsigned level) {
  const std::size_t n = dimension_of(level);
  LinearOperator op{level, RationalMatrix(n, n)};
  op.matrix(0, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) op.matrix(i, i) = -1;
  return op;
}

LinearOperator identity_operator(unsigned level) {
  return {level, RationalMatrix::identity(dimension_of(level))};
}

Nullspace nullspace(const LinearOperator& op) {
  Nullspace ns{op.level, 0, {}};
  for (auto& v : kernel_basis(op.matrix)) ns.basis.emplace_back(op.level, std::move(v));
  ns.dimension = ns.basis.size();
  return ns;
}

Nullspace oracle_solve_sim(const ExactElement& a, const ExactElement& b) {
  if (a.level() != b.level()) throw LevelMismatch(a.level(), b.level());
  return nullspace(left_mul_matrix(a) - right_mul_matrix(b));
}

Nullspace oracle_solve_consim(const ExactElement& a, const ExactElement& b) {
  if (a.level() != b.level()) throw LevelMismatch(a.level(), b.level());
  return nullspace(left_mul_matrix(a) - right_mul_matrix(b) * conjugation_matrix(a.level()));
}

namespace {

struct SignedPair {
  std::size_t i;
  std::size_t j;
  int s;  // e_i + s e_j
};

ExactElement pair_element(unsigned level, const SignedPair& p) {
  ExactElement e = ExactElement::basis(level, p.i);
  return e + ExactElement::basis(level, p.j, Rational(p.s));
}

}  // namespace

std::optional<ZeroDivisorWitness> zero_divisor_search(unsigned level, std::size_t budget, std::uint64_t seed) {
  const std::size_t n = dimension_of(level);

  // The overall sign of either factor does not matter, so e_i + s e_j with
  // i < j covers every +-e_i +- e_j up to sign.
  if (level <= kDefaultMaxTableLevel) {
    const StructureTable& table = structure_table(level);
    std::vector<SignedPair> candidates;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        candidates.push_back({i, j, 1});
        candidates.push_back({i, j, -1});
      }
    }
    std::vector<int> acc(n, 0);
    for (const auto& pa : candidates) {
      for (const auto& px : candidates) {
        std::fill(acc.begin(), acc.end(), 0);
        auto add = [&](std::size_t u, std::size_t v, int sign) {
          const BasisProduct& p = table(u, v);
          acc[p.index] += sign * p.sign;
        };
        add(pa.i, px.i, 1);
        add(pa.i, px.j, px.s);
        add(pa.j, px.i, pa.s);
        add(pa.j, px.j, pa.s * px.s);
        bool zero = true;
        for (int v : acc) {
          if (v != 0) {
            zero = false;
            break;
          }
        }
        if (!zero) continue;
        ZeroDivisorWitness w{pair_element(level, pa), pair_element(level, px)};
        // Confirm through the doubling product, not the table.
        if ((w.a * w.x).is_zero()) return w;
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < budget; ++t) {
    // Sparse integer a: three random terms with coefficients in [-2, 2].
    std::vector<Rational> coeffs(n, Rational(0));
    for (int k = 0; k < 3; ++k) {
      coeffs[rng() % n] += Rational(static_cast<long>(rng() % 5) - 2);
    }
    ExactElement a(level, std::move(coeffs));
    if (a.is_zero()) continue;
    Nullspace ker = nullspace(left_mul_matrix(a));
    if (ker.dimension > 0) return ZeroDivisorWitness{a, ker.basis.front()};
  }
  return std::nullopt;
}

}  // namespace cdalg
