#ifndef CDALG_SERIALIZE_HPP
#define CDALG_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "cdalg/element.hpp"
#include "cdalg/format.hpp"
#include "cdalg/identity_lab.hpp"
#include "cdalg/oracle.hpp"
#include "cdalg/solution_set.hpp"
#include "cdalg/structure_table.hpp"

// JSON schemas
//   Element      {"level": n, "coeffs": [scalar, ...]}  exact scalars as "p/q" strings, floats as numbers
//   Nullspace    {"dimension": d, "basis": [Element, ...]}
//   SolutionSet  {"variant": ..., "completeness": ..., "level_semantics": ..., "representatives": [...], "representatives_text": [...], ...}
//   LawReport    {"law": id, "level": n, "trials": t, "verdict": ..., "claimed": bool, ...}

namespace cdalg {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& v);
Json to_json(double v);

template <class T>
Json to_json(const Element<T>& e) {
  Json coeffs = Json::array();
  for (const auto& c : e.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"level", e.level()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const AnyElement& e);

template <class T>
Json to_json(const std::vector<Element<T>>& es) {
  Json out = Json::array();
  for (const auto& e : es) out.push_back(to_json(e));
  return out;
}

/// Parses the Element schema. Strings are exact "p/q"; numbers are floats
/// (integers in JSON are treated as exact). Mixed backends are rejected.
AnyElement element_from_json(const Json& j);

template <class T>
Json to_json(const SolutionSet<T>& s) {
  Json j{{"variant", s.variant_name()},
         {"completeness", to_string(s.completeness())},
         {"level_semantics", to_string(s.semantics())},
         {"backend", ScalarTraits<T>::name}};
  std::visit(
      [&j](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, FinitePoints<T>>) {
          j["points"] = to_json(v.points);
        } else if constexpr (std::is_same_v<V, ScalingFamily<T>>) {
          j["direction"] = to_json(v.direction);
        } else if constexpr (std::is_same_v<V, AffineSubspace<T>>) {
          j["basis"] = to_json(v.basis);
        } else if constexpr (std::is_same_v<V, ParametricModule<T>>) {
          j["map"] = "x = (Im a)p + p(Im b)";
          j["im_a"] = to_json(v.im_a);
          j["im_b"] = to_json(v.im_b);
          j["parameter_domain"] = to_string(v.domain);
          j["parameter_basis"] = to_json(v.parameter_basis);
          j["particular"] = to_json(v.particular);
        }
      },
      s.value());
  const auto reps = s.representatives();
  j["representatives"] = to_json(reps);
  Json text = Json::array();
  for (const auto& r : reps) text.push_back(format_element(r));
  j["representatives_text"] = std::move(text);
  j["notes"] = s.notes();
  return j;
}

Json to_json(const Nullspace& ns);
Json to_json(const LawReport& r);
Json to_json(const StructureTable& t);
Json to_json(const SpanReport& r);

}  // namespace cdalg

#endif  // CDALG_SERIALIZE_HPP
