#ifndef CDALG_SOLVERS_HPP
#define CDALG_SOLVERS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdalg/element.hpp"
#include "cdalg/solution_set.hpp"
#include "cdalg/subalgebra.hpp"

namespace cdalg {

// Closed-form solvers for a x = x b, a x = conj(x) b, x^2 = a, x^m = a,
// conj(x) a x = b, x a x = b and the two quadratic forms.
//
// Levels 0-3 are division algebras and results carry IffCondition: an
// Empty result means there is no nonzero solution. From level 4 on the
// solvability conditions are only sufficient (zero divisors can produce
// extra solutions), and results carry SufficientOnly.

template <class T>
struct SimilarityClass {
  T real_part;
  T im_norm_sq;
  double im_norm = 0.0;

  bool matches(const SimilarityClass& other) const {
    return ScalarTraits<T>::near(real_part, other.real_part) && ScalarTraits<T>::near(im_norm_sq, other.im_norm_sq);
  }
};

template <class T>
struct CanonicalForm {
  Element<T> canonical;
  SolutionSet<T> witness;
  bool degenerate = false;
};

enum class QuadraticForm { TwoSided, OneSided };

namespace detail {

template <class T>
void require_same_level(const Element<T>& a, const Element<T>& b) {
  if (a.level() != b.level()) throw LevelMismatch(a.level(), b.level());
}

/// Basis of { x : x_i = 0 for i < first, sum_{i >= first} c_i x_i = 0 }.
template <class T>
std::vector<Element<T>> hyperplane_basis(unsigned level, const std::vector<T>& c, std::size_t first) {
  const std::size_t n = dimension_of(level);
  std::size_t pivot = n;
  for (std::size_t i = first; i < n; ++i) {
    if (ScalarTraits<T>::is_zero(c[i])) continue;
    if constexpr (ScalarTraits<T>::exact) {
      pivot = i;
      break;
    } else {
      if (pivot == n || std::abs(c[i]) > std::abs(c[pivot])) pivot = i;
    }
  }
  std::vector<Element<T>> basis;
  for (std::size_t j = first; j < n; ++j) {
    if (j == pivot) continue;
    Element<T> v = Element<T>::basis(level, j);
    if (pivot != n && !ScalarTraits<T>::is_zero(c[j])) {
      v = v - Element<T>::basis(level, pivot, T(c[j] / c[pivot]));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Keeps the vectors that are independent of the ones kept before them
/// (Gram-Schmidt test with a relative tolerance).
inline std::vector<FloatElement> independent_subset(const std::vector<FloatElement>& vs) {
  std::vector<FloatElement> kept, ortho;
  for (const auto& v : vs) {
    FloatElement r = v;
    for (const auto& q : ortho) {
      double dot = 0;
      for (std::size_t i = 0; i < r.dim(); ++i) dot += r[i] * q[i];
      r = r - q * dot;
    }
    const double nr = norm(r);
    if (nr <= 1e-9 * std::max(1.0, norm(v))) continue;
    kept.push_back(v);
    ortho.push_back(r / nr);
  }
  return kept;
}

/// Spanning set of the subalgebra generated by a and b. Exact elements use
/// the closure; floats use {1, Im a, Im b, (Im a)(Im b)}, which spans the
/// generated subalgebra whenever it is alternative (levels <= 3).
template <class T>
std::vector<Element<T>> generated_subalgebra(const Element<T>& a, const Element<T>& b) {
  if constexpr (ScalarTraits<T>::exact) {
    return subalgebra_basis({a, b}).basis;
  } else {
    const FloatElement ia = a.im(), ib = b.im();
    return independent_subset({FloatElement::one(a.level()), ia, ib, ia * ib});
  }
}

/// |Im a| |Im b| for a similar pair. Exact when both norms agree.
template <class T>
T im_norm_product(const T& nsa, const T& nsb) {
  if constexpr (ScalarTraits<T>::exact) {
    if (nsa == nsb) return nsa;
  }
  return ScalarTraits<T>::sqrt(T(nsa * nsb));
}

template <class T>
bool residual_small(const Element<T>& lhs, const Element<T>& rhs, double scale, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return lhs == rhs;
  } else {
    return norm(lhs - rhs) <= std::max(kAbsTol, tol * std::max({scale, norm(lhs), norm(rhs)}));
  }
}

}  // namespace detail

template <class T>
SimilarityClass<T> similarity_class(const Element<T>& a) {
  const T ns = a.im().norm_sq();
  return {a.re(), ns, std::sqrt(ScalarTraits<T>::to_double(ns))};
}

/// Re a = Re b and |Im a| = |Im b|.
template <class T>
bool similar(const Element<T>& a, const Element<T>& b) {
  detail::require_same_level(a, b);
  return similarity_class(a).matches(similarity_class(b));
}

/// |a| = |b|.
template <class T>
bool consimilar(const Element<T>& a, const Element<T>& b) {
  detail::require_same_level(a, b);
  return ScalarTraits<T>::near(a.norm_sq(), b.norm_sq());
}

/// Solutions of a x = x b.
template <class T>
SolutionSet<T> solve_sim(const Element<T>& a, const Element<T>& b) {
  detail::require_same_level(a, b);
  const unsigned level = a.level();
  const LevelSemantics sem = level_semantics(level);
  if (!similar(a, b)) return SolutionSet<T>::empty(sem, "not-similar");

  const Element<T> ia = a.im(), ib = b.im();
  if (ia.is_zero()) {
    // a = b real: everything commutes with a real.
    std::vector<Element<T>> all;
    for (std::size_t k = 0; k < a.dim(); ++k) all.push_back(Element<T>::basis(level, k));
    return SolutionSet<T>(AffineSubspace<T>{std::move(all)}, Completeness::General, sem, {"real-input-extension"});
  }

  if ((ia + ib).is_zero()) {
    // b = conj(a): x is imaginary and orthogonal to Im a.
    std::vector<T> c(a.coeffs().begin(), a.coeffs().end());
    auto basis = detail::hyperplane_basis<T>(level, c, 1);
    if (basis.empty()) return SolutionSet<T>::empty(sem, "conjugate-pair");
    return SolutionSet<T>(AffineSubspace<T>{std::move(basis)}, Completeness::General, sem, {"conjugate-pair"});
  }

  const Element<T> x1 = ia + ib;
  if (level >= 4) {
    return SolutionSet<T>(ScalingFamily<T>{x1}, Completeness::ParticularOnly, sem);
  }

  const T prod = detail::im_norm_product(ia.norm_sq(), ib.norm_sq());
  const Element<T> x2 = Element<T>::real(level, prod) - ia * ib;

  ParametricModule<T> module{ia, ib, ParameterDomain::FullAlgebra, {}, {x1, x2}};
  if (level <= 2) {
    for (std::size_t k = 0; k < a.dim(); ++k) module.parameter_basis.push_back(Element<T>::basis(level, k));
  } else {
    module.domain = ParameterDomain::Subalgebra;
    module.parameter_basis = detail::generated_subalgebra(a, b);
  }
  return SolutionSet<T>(std::move(module), Completeness::General, sem);
}

/// Re a + |Im a| e_1 and the solutions of a x = x (Re a + |Im a| e_1).
/// Real input (or level 1, where no rotation exists) returns a itself with
/// witness {1} and degenerate = true. Exact input needs |Im a| rational.
template <class T>
CanonicalForm<T> canonical_form(const Element<T>& a) {
  const unsigned level = a.level();
  const LevelSemantics sem = level_semantics(level);
  if (a.is_real() || level < 2) {
    return {a,
            SolutionSet<T>(FinitePoints<T>{{Element<T>::one(level)}}, Completeness::ParticularOnly, sem,
                           {a.is_real() ? "real-input-extension" : "no-rotation-in-complex"}),
            true};
  }
  const T im_norm = ScalarTraits<T>::sqrt(a.im().norm_sq());
  Element<T> c = Element<T>::real(level, a.re()) + Element<T>::basis(level, 1, im_norm);
  SolutionSet<T> witness = solve_sim(a, c);
  return {std::move(c), std::move(witness), false};
}

/// Solutions of a x = conj(x) b.
template <class T>
SolutionSet<T> solve_consim(const Element<T>& a, const Element<T>& b) {
  detail::require_same_level(a, b);
  const unsigned level = a.level();
  const LevelSemantics sem = level_semantics(level);
  if (!consimilar(a, b)) return SolutionSet<T>::empty(sem, "norms-differ");

  const Element<T> s = a.conjugate() + b;
  if (s.is_zero()) {
    // b = -conj(a): the equation reduces to Re(a x) = 0, i.e.
    // a_0 x_0 - a_1 x_1 - ... = 0.
    std::vector<T> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
    auto basis = detail::hyperplane_basis<T>(level, c, 0);
    return SolutionSet<T>(AffineSubspace<T>{std::move(basis)}, Completeness::General, sem, {"anti-conjugate-pair"});
  }
  return SolutionSet<T>(ScalingFamily<T>{s}, Completeness::ParticularOnly, sem);
}

/// p = |a| + conj(a), for which a = conj(p) (|a| p^-1). Throws
/// std::domain_error when p = 0 (a real and non-positive).
template <class T>
Element<T> consim_to_norm_witness(const Element<T>& a) {
  const T abs_a = ScalarTraits<T>::sqrt(a.norm_sq());
  Element<T> p = Element<T>::real(a.level(), abs_a) + a.conjugate();
  if (p.is_zero()) throw std::domain_error("degenerate witness: |a| + conj(a) = 0");
  return p;
}

/// conj(p) (|a| p^-1), which reproduces a for the witness above.
template <class T>
Element<T> apply_consim_witness(const Element<T>& a, const Element<T>& p) {
  const T abs_a = ScalarTraits<T>::sqrt(a.norm_sq());
  return p.conjugate() * (inverse(p) * abs_a);
}

/// Solutions of x^2 = a. Non-real a has exactly two roots
/// +-|a|^(1/2) (|a| + a) / ||a| + a|. Positive reals give +-sqrt(a);
/// negative reals give the sphere sqrt(|a|) * (unit imaginary), reported as
/// AffineSubspace with the "root-sphere" note.
template <class T>
SolutionSet<T> sqrt(const Element<T>& a) {
  using Tr = ScalarTraits<T>;
  const unsigned level = a.level();
  const LevelSemantics sem = level_semantics(level);

  if (a.is_real()) {
    const T r = a.re();
    const int sign = Tr::sign(r);
    if (sign == 0) {
      return SolutionSet<T>(FinitePoints<T>{{Element<T>::zero(level)}}, Completeness::General, sem,
                            {"real-input-extension"});
    }
    if (sign > 0) {
      const T s = Tr::sqrt(r);
      return SolutionSet<T>(FinitePoints<T>{{Element<T>::real(level, s), Element<T>::real(level, T(-s))}},
                            Completeness::General, sem, {"real-input-extension"});
    }
    if (level == 0) return SolutionSet<T>::empty(sem, "no-real-root");
    const T s = Tr::sqrt(T(-r));
    std::vector<Element<T>> sphere;
    for (std::size_t k = 1; k < a.dim(); ++k) sphere.push_back(Element<T>::basis(level, k, s));
    return SolutionSet<T>(AffineSubspace<T>{std::move(sphere)}, Completeness::General, sem,
                          {"real-input-extension", "root-sphere"});
  }

  const T abs_a = Tr::sqrt(a.norm_sq());
  const Element<T> s = Element<T>::real(level, abs_a) + a;
  const T scale = Tr::sqrt(T(abs_a / s.norm_sq()));  // |a|^(1/2) / ||a| + a|
  Element<T> x = s * scale;
  Element<T> neg = -x;
  return SolutionSet<T>(FinitePoints<T>{{std::move(x), std::move(neg)}}, Completeness::General, sem);
}

/// m-th roots of a non-real float element: rotate a to its canonical
/// complex form c = x^-1 a x, take the m complex roots of c, and transport
/// each back as x r x^-1. Only candidates with r^m = a (relative 1e-9) are
/// returned; from level 4 on this check is the only justification.
inline SolutionSet<double> nth_root(const FloatElement& a, unsigned m, double tol = 1e-9) {
  if (m == 0) throw std::invalid_argument("root degree must be positive");
  if (a.is_real()) throw std::invalid_argument("nth_root requires a non-real element");
  const unsigned level = a.level();
  const LevelSemantics sem = level_semantics(level);

  const CanonicalForm<double> cf = canonical_form(a);
  FloatElement x;
  bool found = false;
  for (const auto& r : cf.witness.representatives()) {
    if (!r.is_zero()) {
      x = r;
      found = true;
      break;
    }
  }
  if (!found) throw std::runtime_error("no rotation witness for canonical form");
  const FloatElement x_inv = inverse(x);

  const std::complex<double> z(cf.canonical[0], cf.canonical[1]);
  const double mod = std::pow(std::abs(z), 1.0 / m);
  const double arg = std::arg(z);
  std::vector<FloatElement> roots;
  for (unsigned k = 0; k < m; ++k) {
    const double theta = (arg + 2.0 * std::numbers::pi * k) / m;
    FloatElement r = FloatElement::real(level, mod * std::cos(theta)) + FloatElement::basis(level, 1, mod * std::sin(theta));
    FloatElement cand = (x * r) * x_inv;
    if (nearly_equal(pow(cand, static_cast<long>(m)), a, tol)) roots.push_back(std::move(cand));
  }
  if (roots.empty()) throw std::runtime_error("no transported root verified");
  const Completeness completeness = (level <= 3 && roots.size() == m) ? Completeness::General : Completeness::ParticularOnly;
  return SolutionSet<double>(FinitePoints<double>{std::move(roots)}, completeness, sem);
}

/// Solutions of conj(x) a x = b for non-real a, b at levels <= 3.
/// Solvable iff Re a = lambda Re b and |Im a| = lambda |Im b| for some
/// lambda > 0; then x = y / (sqrt(lambda) |y|) with
/// y = (Im a) p + lambda p (Im b), p the first candidate giving y != 0.
/// Unsolvable instances return Empty with a note.
template <class T>
SolutionSet<T> solve_conj_transform(const Element<T>& a, const Element<T>& b) {
  using Tr = ScalarTraits<T>;
  detail::require_same_level(a, b);
  const unsigned level = a.level();
  if (level >= 4) throw std::invalid_argument("conj(x) a x = b is not supported at level >= 4");
  if (a.is_real() || b.is_real()) throw std::invalid_argument("conj(x) a x = b requires non-real a and b");
  const LevelSemantics sem = level_semantics(level);

  const Element<T> ia = a.im(), ib = b.im();
  const T nia = ia.norm_sq(), nib = ib.norm_sq();
  T lambda;
  if (!Tr::is_zero(b.re())) {
    lambda = a.re() / b.re();
  } else {
    if (!Tr::is_zero(a.re())) return SolutionSet<T>::empty(sem, "inconsistent-lambda");
    lambda = Tr::sqrt(T(nia / nib));
  }
  if (Tr::sign(lambda) <= 0) return SolutionSet<T>::empty(sem, "lambda-not-positive");
  if (!Tr::near(a.re(), T(lambda * b.re())) || !Tr::near(nia, T(lambda * lambda * nib))) {
    return SolutionSet<T>::empty(sem, "inconsistent-lambda");
  }

  std::vector<Element<T>> candidates;
  if (level == 3) candidates = detail::generated_subalgebra(a, b);
  for (std::size_t k = 0; k < a.dim(); ++k) candidates.push_back(Element<T>::basis(level, k));

  for (const auto& p : candidates) {
    const Element<T> y = ia * p + (p * ib) * lambda;
    if (y.is_zero()) continue;
    Element<T> x = y / Tr::sqrt(T(lambda * y.norm_sq()));
    const Element<T> check = (x.conjugate() * a) * x;
    if (!detail::residual_small(check, b, norm(b), 1e-9)) continue;
    return SolutionSet<T>(FinitePoints<T>{{std::move(x)}}, Completeness::ParticularOnly, sem);
  }
  throw std::runtime_error("conj(x) a x = b: no parameter p gives a verified solution");
}

/// Solutions of x a x = b at levels <= 3 via (a x)^2 = a b: every square
/// root s of ab gives the candidate x = a^-1 s, kept only if x a x = b.
template <class T>
SolutionSet<T> solve_xax(const Element<T>& a, const Element<T>& b) {
  detail::require_same_level(a, b);
  const unsigned level = a.level();
  if (level >= 4) throw std::invalid_argument("x a x = b is not supported at level >= 4");
  if (a.is_zero()) throw std::domain_error("x a x = b requires invertible a");
  const LevelSemantics sem = level_semantics(level);
  const Completeness completeness = level <= 2 ? Completeness::General : Completeness::ParticularOnly;

  const Element<T> a_inv = inverse(a);
  const SolutionSet<T> roots = sqrt(a * b);
  std::vector<Element<T>> verified;
  for (const auto& s : roots.representatives()) {
    Element<T> x = a_inv * s;
    if (detail::residual_small((x * a) * x, b, norm(b), 1e-9)) verified.push_back(std::move(x));
  }
  if (verified.empty()) return SolutionSet<T>::empty(sem, "no-verified-root");
  if (roots.has_note("root-sphere")) {
    return SolutionSet<T>(AffineSubspace<T>{std::move(verified)}, completeness, sem, {"root-sphere"});
  }
  return SolutionSet<T>(FinitePoints<T>{std::move(verified)}, completeness, sem);
}

/// TwoSided: x^2 + b x + x b + c = 0, solved as (x + b)^2 = b^2 - c.
/// OneSided: x^2 + x b + c = 0 with c in A(b), solved inside A(b) as
/// x = -b/2 + sqrt(b^2/4 - c). Every returned root is verified by
/// substitution; throws std::invalid_argument if c is not in A(b).
template <class T>
SolutionSet<T> solve_quadratic(const Element<T>& b, const Element<T>& c, QuadraticForm form) {
  using Tr = ScalarTraits<T>;
  detail::require_same_level(b, c);
  const unsigned level = b.level();
  if (level > 4) throw std::invalid_argument("quadratic solver supports levels <= 4");
  const LevelSemantics sem = level_semantics(level);

  auto residual = [&](const Element<T>& x) {
    if (form == QuadraticForm::TwoSided) return x * x + b * x + x * b;
    return x * x + x * b;
  };
  auto scale_of = [&](const Element<T>& x) { return std::max({norm(x) * norm(x), norm(b) * norm(x), norm(c)}); };

  Element<T> shift;
  std::vector<Element<T>> roots;
  std::vector<std::string> notes;
  bool sphere = false;

  if (form == QuadraticForm::TwoSided) {
    shift = -b;
    const SolutionSet<T> s = sqrt(b * b - c);
    roots = s.representatives();
    sphere = s.has_note("root-sphere");
  } else {
    bool in_ab;
    if constexpr (Tr::exact) {
      in_ab = subalgebra_basis({b}).contains(c);
    } else {
      // A(b) = span{1, Im b}
      const FloatElement ib = b.im();
      FloatElement r = c.im();
      const double nib = ib.norm_sq();
      if (nib > 0) {
        double dot = 0;
        for (std::size_t i = 0; i < r.dim(); ++i) dot += r[i] * ib[i];
        r = r - ib * (dot / nib);
      }
      in_ab = norm(r) <= std::max(kAbsTol, kRelTol * std::max(norm(c), 1.0));
    }
    if (!in_ab) throw std::invalid_argument("one-sided quadratic requires c in the subalgebra generated by b");

    shift = b / T(-2);
    const Element<T> d = (b * b) / T(4) - c;
    if (d.is_real() && Tr::sign(d.re()) < 0) {
      // Stay inside A(b) = span{1, Im b} by rotating with the unit Im b / |Im b|.
      const Element<T> ib = b.im();
      const T neg = -d.re();
      Element<T> u;
      if (!ib.is_zero()) {
        u = ib * Tr::sqrt(T(neg / ib.norm_sq()));
      } else {
        u = Element<T>::basis(level, level == 0 ? 0 : 1, Tr::sqrt(neg));
        notes.push_back("root-outside-subalgebra");
        if (level == 0) return SolutionSet<T>::empty(sem, "no-real-root");
      }
      roots = {u, -u};
    } else {
      roots = sqrt(d).representatives();
    }
  }

  std::vector<Element<T>> verified;
  for (const auto& s : roots) {
    Element<T> x = shift + s;
    if (detail::residual_small(residual(x), -c, scale_of(x), 1e-9)) verified.push_back(std::move(x));
  }
  if (verified.empty()) return SolutionSet<T>::empty(sem, "no-verified-root");
  if (sphere) {
    notes.push_back("root-sphere-representatives");
    return SolutionSet<T>(FinitePoints<T>{std::move(verified)}, Completeness::ParticularOnly, sem, std::move(notes));
  }
  return SolutionSet<T>(FinitePoints<T>{std::move(verified)}, Completeness::General, sem, std::move(notes));
}

}  // namespace cdalg

#endif  // CDALG_SOLVERS_HPP
