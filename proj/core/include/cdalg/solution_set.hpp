#ifndef CDALG_SOLUTION_SET_HPP
#define CDALG_SOLUTION_SET_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cdalg/element.hpp"

namespace cdalg {

enum class Completeness { General, ParticularOnly };

/// IffCondition: the solvability condition used is necessary and sufficient.
/// SufficientOnly: an empty result makes no claim that no solution exists.
enum class LevelSemantics { IffCondition, SufficientOnly };

enum class ParameterDomain { FullAlgebra, Subalgebra };

inline LevelSemantics level_semantics(unsigned level) {
  return level <= 3 ? LevelSemantics::IffCondition : LevelSemantics::SufficientOnly;
}

template <class T>
struct EmptySet {};

template <class T>
struct FinitePoints {
  std::vector<Element<T>> points;
};

/// All real multiples of `direction`.
template <class T>
struct ScalingFamily {
  Element<T> direction;
};

/// The linear span of `basis`. Root spheres reuse this shape with the
/// "root-sphere" note: every basis vector is a root, and so is every unit
/// combination of them.
template <class T>
struct AffineSubspace {
  std::vector<Element<T>> basis;
};

/// x = im_a * p + p * im_b for p in the span of parameter_basis.
template <class T>
struct ParametricModule {
  Element<T> im_a;
  Element<T> im_b;
  ParameterDomain domain = ParameterDomain::FullAlgebra;
  std::vector<Element<T>> parameter_basis;
  std::vector<Element<T>> particular;

  Element<T> evaluate(const Element<T>& p) const { return im_a * p + p * im_b; }
};

template <class T>
class SolutionSet {
 public:
  using Variant = std::variant<EmptySet<T>, FinitePoints<T>, ScalingFamily<T>, AffineSubspace<T>, ParametricModule<T>>;

  SolutionSet(Variant value, Completeness completeness, LevelSemantics semantics, std::vector<std::string> notes = {})
      : value_(std::move(value)), completeness_(completeness), semantics_(semantics), notes_(std::move(notes)) {}

  static SolutionSet empty(LevelSemantics semantics, std::string note) {
    return SolutionSet(EmptySet<T>{}, Completeness::General, semantics, {std::move(note)});
  }

  const Variant& value() const noexcept { return value_; }
  Completeness completeness() const noexcept { return completeness_; }
  LevelSemantics semantics() const noexcept { return semantics_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  bool has_note(const std::string& n) const { return std::find(notes_.begin(), notes_.end(), n) != notes_.end(); }
  void add_note(std::string n) { notes_.push_back(std::move(n)); }

  bool is_empty() const { return std::holds_alternative<EmptySet<T>>(value_); }

  template <class V>
  bool holds() const {
    return std::holds_alternative<V>(value_);
  }
  template <class V>
  const V& get() const {
    return std::get<V>(value_);
  }

  const char* variant_name() const {
    static constexpr const char* names[] = {"Empty", "FinitePoints", "ScalingFamily", "AffineSubspace",
                                            "ParametricModule"};
    return names[value_.index()];
  }

  /// Concrete solutions extracted from the description: the points, the
  /// family direction, the subspace basis, or the module's distinguished
  /// solutions followed by the nonzero, not yet listed images of its
  /// parameter basis.
  std::vector<Element<T>> representatives() const {
    return std::visit(
        [](const auto& v) -> std::vector<Element<T>> {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, EmptySet<T>>) {
            return {};
          } else if constexpr (std::is_same_v<V, FinitePoints<T>>) {
            return v.points;
          } else if constexpr (std::is_same_v<V, ScalingFamily<T>>) {
            return {v.direction};
          } else if constexpr (std::is_same_v<V, AffineSubspace<T>>) {
            return v.basis;
          } else {
            std::vector<Element<T>> out = v.particular;
            for (const auto& p : v.parameter_basis) {
              Element<T> x = v.evaluate(p);
              if (x.is_zero() || std::find(out.begin(), out.end(), x) != out.end()) continue;
              out.push_back(std::move(x));
            }
            return out;
          }
        },
        value_);
  }

 private:
  Variant value_;
  Completeness completeness_;
  LevelSemantics semantics_;
  std::vector<std::string> notes_;
};

inline const char* to_string(Completeness c) { return c == Completeness::General ? "General" : "ParticularOnly"; }
inline const char* to_string(LevelSemantics s) {
  return s == LevelSemantics::IffCondition ? "IffCondition" : "SufficientOnly";
}
inline const char* to_string(ParameterDomain d) { return d == ParameterDomain::FullAlgebra ? "Full" : "SubalgebraBasis"; }

}  // namespace cdalg

#endif  // CDALG_SOLUTION_SET_HPP
