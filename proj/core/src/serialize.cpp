#include "cdalg/serialize.hpp"

#include <stdexcept>

#include "cdalg/format.hpp"

namespace cdalg {

Json to_json(const Rational& v) { return to_string(v); }

Json to_json(double v) { return v; }

Json to_json(const AnyElement& e) {
  return std::visit([](const auto& x) { return to_json(x); }, e);
}

AnyElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("coeffs")) {
    throw std::invalid_argument("element JSON needs \"level\" and \"coeffs\"");
  }
  const auto level = j.at("level").get<unsigned>();
  std::vector<Scalar> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) {
      coeffs.emplace_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(Rational(c.get<long>()));
    } else if (c.is_number()) {
      coeffs.emplace_back(c.get<double>());
    } else {
      throw std::invalid_argument("element coefficient must be a string or a number");
    }
  }
  return make_element(level, coeffs);
}

Json to_json(const Nullspace& ns) {
  return Json{{"level", ns.level}, {"dimension", ns.dimension}, {"basis", to_json(ns.basis)}};
}

Json to_json(const LawReport& r) {
  Json j{{"law", r.law_id},
         {"level", r.level},
         {"trials", r.trials},
         {"verdict", r.verdict == Verdict::HoldsOnSamples ? "HoldsOnSamples" : "Counterexample"},
         {"claimed", r.claimed},
         {"matches_claim", r.matches_claim()}};
  if (r.verdict == Verdict::Counterexample) {
    j["witness"] = to_json(r.witness);
    j["left"] = to_json(*r.left);
    j["right"] = to_json(*r.right);
  }
  return j;
}

Json to_json(const StructureTable& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const BasisProduct& p = t(i, j);
      row.push_back(Json{{"sign", p.sign}, {"index", p.index}});
    }
    rows.push_back(std::move(row));
  }
  return Json{{"level", t.level()}, {"entries", std::move(rows)}};
}

Json to_json(const SpanReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"trial", row.trial},
                        {"d_oracle", row.d_oracle},
                        {"d_pair", row.d_pair},
                        {"d_module", row.d_module},
                        {"equal", row.equal}});
  }
  Json witnesses = Json::array();
  for (const auto* row : r.discrepancies()) {
    witnesses.push_back(Json{{"trial", row->trial}, {"a", to_json(row->a)}, {"b", to_json(row->b)}});
  }
  return Json{{"level", r.level},
              {"trials", r.trials},
              {"rows", std::move(rows)},
              {"tally", Json{{"rows", r.rows.size()}, {"equal", r.equal_count()}, {"skipped", r.skipped}}},
              {"discrepancies", std::move(witnesses)}};
}

}  // namespace cdalg
