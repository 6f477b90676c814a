#include "cdalg/identity_lab.hpp"

#include <future>
#include <stdexcept>
#include <utility>

#include "cdalg/linalg.hpp"
#include "cdalg/oracle.hpp"
#include "cdalg/random.hpp"
#include "cdalg/subalgebra.hpp"

namespace cdalg {

namespace {

using Elems = std::span<const ExactElement>;

ExactElement scalar_at(unsigned level, const Rational& v) { return ExactElement::real(level, v); }

/// Returns the first failing clause, or the last one.
LawSides first_failure(std::initializer_list<std::function<LawSides()>> clauses) {
  LawSides last{ExactElement(), ExactElement()};
  for (const auto& clause : clauses) {
    last = clause();
    if (!(last.left == last.right)) return last;
  }
  return last;
}

std::vector<Law> build_catalog() {
  constexpr unsigned all = LevelSet::kAllLevels;
  std::vector<Law> laws;

  laws.push_back({"commutativity", "ab = ba", 2, {1}, [](Elems e) {
                    return LawSides{e[0] * e[1], e[1] * e[0]};
                  }});

  laws.push_back({"associativity", "(ab)c = a(bc)", 3, {2}, [](Elems e) {
                    return LawSides{(e[0] * e[1]) * e[2], e[0] * (e[1] * e[2])};
                  }});

  laws.push_back({"alternativity", "a(ab) = a^2 b and (ba)a = b a^2", 2, {3}, [](Elems e) {
                    const auto& a = e[0];
                    const auto& b = e[1];
                    const ExactElement a2 = a * a;
                    return first_failure({[&] { return LawSides{a * (a * b), a2 * b}; },
                                          [&] { return LawSides{(b * a) * a, b * a2}; }});
                  }});

  laws.push_back({"composition", "|ab|^2 = |a|^2 |b|^2", 2, {3}, [](Elems e) {
                    const unsigned n = e[0].level();
                    return LawSides{scalar_at(n, (e[0] * e[1]).norm_sq()),
                                    scalar_at(n, e[0].norm_sq() * e[1].norm_sq())};
                  }});

  laws.push_back({"flexibility", "(ab)a = a(ba)", 2, {all}, [](Elems e) {
                    return LawSides{(e[0] * e[1]) * e[0], e[0] * (e[1] * e[0])};
                  }});

  laws.push_back({"conjugate-flexibility", "(ab)conj(a) = a(b conj(a)) and (ab)a^-1 = a(b a^-1)", 2, {all},
                  [](Elems e) {
                    const auto& a = e[0];
                    const auto& b = e[1];
                    const ExactElement ca = a.conjugate();
                    return first_failure({[&] { return LawSides{(a * b) * ca, a * (b * ca)}; },
                                          [&] {
                                            if (a.is_zero()) return LawSides{a, a};
                                            const ExactElement ai = inverse(a);
                                            return LawSides{(a * b) * ai, a * (b * ai)};
                                          }});
                  }});

  laws.push_back({"power-associativity", "a a^2 = a^2 a and a(a a^2) = a^2 a^2", 1, {all}, [](Elems e) {
                    const auto& a = e[0];
                    const ExactElement a2 = a * a;
                    return first_failure({[&] { return LawSides{a * a2, a2 * a}; },
                                          [&] { return LawSides{a * (a * a2), a2 * a2}; }});
                  }});

  laws.push_back({"quadratic", "a^2 - 2 Re(a) a + |a|^2 = 0 and (Im a)^2 = -|Im a|^2", 1, {all}, [](Elems e) {
                    const auto& a = e[0];
                    const unsigned n = a.level();
                    return first_failure(
                        {[&] {
                           return LawSides{a * a - a * Rational(2 * a.re()) + scalar_at(n, a.norm_sq()),
                                           ExactElement::zero(n)};
                         },
                         [&] {
                           const ExactElement ia = a.im();
                           return LawSides{ia * ia, scalar_at(n, Rational(-ia.norm_sq()))};
                         }});
                  }});

  laws.push_back({"trace-symmetry", "Re(ab) = Re(ba)", 2, {all}, [](Elems e) {
                    const unsigned n = e[0].level();
                    return LawSides{scalar_at(n, (e[0] * e[1]).re()), scalar_at(n, (e[1] * e[0]).re())};
                  }});

  laws.push_back({"inverse-formula", "a (conj(a)/|a|^2) = (conj(a)/|a|^2) a = 1", 1, {all}, [](Elems e) {
                    const auto& a = e[0];
                    const ExactElement one = ExactElement::one(a.level());
                    if (a.is_zero()) return LawSides{one, one};
                    const ExactElement ai = a.conjugate() / a.norm_sq();
                    return first_failure(
                        {[&] { return LawSides{a * ai, one}; }, [&] { return LawSides{ai * a, one}; }});
                  }});

  laws.push_back({"conjugate-antihomomorphism", "conj(ab) = conj(b) conj(a)", 2, {all}, [](Elems e) {
                    return LawSides{(e[0] * e[1]).conjugate(), e[1].conjugate() * e[0].conjugate()};
                  }});

  return laws;
}

bool sweep_basis(unsigned arity, unsigned level) {
  return level <= 4 && arity <= 3;
}

std::uint64_t law_seed(std::uint64_t seed, std::size_t law_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(law_index)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

LawReport run_law(const Law& law, unsigned level, std::size_t trials, std::uint64_t seed) {
  LawReport report{law.id, level, 0, Verdict::HoldsOnSamples, {}, std::nullopt, std::nullopt,
                   law.claimed_levels.contains(level)};
  std::vector<ExactElement> tuple(law.arity);

  auto try_tuple = [&]() {
    ++report.trials;
    LawSides s = law.evaluate(tuple);
    if (s.left == s.right) return false;
    report.verdict = Verdict::Counterexample;
    report.witness = tuple;
    report.left = std::move(s.left);
    report.right = std::move(s.right);
    return true;
  };

  if (sweep_basis(law.arity, level)) {
    const std::size_t n = dimension_of(level);
    std::vector<std::size_t> idx(law.arity, 0);
    for (;;) {
      for (unsigned k = 0; k < law.arity; ++k) tuple[k] = ExactElement::basis(level, idx[k]);
      if (try_tuple()) return report;
      unsigned k = 0;
      while (k < law.arity && ++idx[k] == n) idx[k++] = 0;
      if (k == law.arity) break;
    }
  }

  ElementSampler sampler(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    for (unsigned k = 0; k < law.arity; ++k) tuple[k] = sampler.exact(level);
    if (try_tuple()) return report;
  }
  return report;
}

}  // namespace

const std::vector<Law>& law_catalog() {
  static const std::vector<Law> catalog = build_catalog();
  return catalog;
}

const Law& find_law(std::string_view id) {
  for (const auto& law : law_catalog()) {
    if (law.id == id) return law;
  }
  throw std::invalid_argument("unknown law '" + std::string(id) + "'");
}

LawReport check_law(const Law& law, std::span<const ExactElement> elements) {
  if (elements.size() != law.arity) {
    throw std::invalid_argument("law '" + law.id + "' takes " + std::to_string(law.arity) + " elements");
  }
  const unsigned level = elements.front().level();
  for (const auto& e : elements) {
    if (e.level() != level) throw LevelMismatch(level, e.level());
  }
  LawReport report{law.id, level, 1, Verdict::HoldsOnSamples, {}, std::nullopt, std::nullopt,
                   law.claimed_levels.contains(level)};
  LawSides s = law.evaluate(elements);
  if (!(s.left == s.right)) {
    report.verdict = Verdict::Counterexample;
    report.witness.assign(elements.begin(), elements.end());
    report.left = std::move(s.left);
    report.right = std::move(s.right);
  }
  return report;
}

std::vector<LawReport> scan_level(unsigned level, std::size_t trials, std::uint64_t seed) {
  const auto& catalog = law_catalog();
  std::vector<std::future<LawReport>> jobs;
  jobs.reserve(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, run_law, std::cref(catalog[i]), level, trials, law_seed(seed, i)));
  }
  std::vector<LawReport> reports;
  reports.reserve(jobs.size());
  for (auto& j : jobs) reports.push_back(j.get());
  return reports;
}

std::size_t SpanReport::equal_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.equal ? 1 : 0;
  return n;
}

std::vector<const SpanRow*> SpanReport::discrepancies() const {
  std::vector<const SpanRow*> out;
  for (const auto& r : rows) {
    if (!r.equal) out.push_back(&r);
  }
  return out;
}

SpanReport span_experiment(unsigned level, std::size_t trials, std::uint64_t seed) {
  if (level != 2 && level != 3) throw std::invalid_argument("span experiment runs at level 2 or 3");
  SpanReport report{level, trials, {}, 0};
  ElementSampler sampler(seed);

  for (std::size_t t = 0; t < trials; ++t) {
    const ExactElement a = sampler.exact(level);
    const ExactElement p = sampler.exact_nonzero(level);
    const ExactElement b = (p * a) * inverse(p);
    const ExactElement ia = a.im(), ib = b.im();
    if (ia.is_zero() || (ia + ib).is_zero()) {
      ++report.skipped;
      continue;
    }

    SpanRow row;
    row.trial = t;
    row.a = a;
    row.b = b;
    row.d_oracle = oracle_solve_sim(a, b).dimension;

    // |Im a| |Im b| = |Im a|^2 since the pair is similar.
    const ExactElement x1 = ia + ib;
    const ExactElement x2 = ExactElement::real(level, ia.norm_sq()) - ia * ib;
    row.d_pair = rank_of({std::vector<Rational>(x1.coeffs().begin(), x1.coeffs().end()),
                          std::vector<Rational>(x2.coeffs().begin(), x2.coeffs().end())});

    std::vector<ExactElement> params;
    if (level == 2) {
      for (std::size_t k = 0; k < a.dim(); ++k) params.push_back(ExactElement::basis(level, k));
    } else {
      params = subalgebra_basis({a, b}).basis;
    }
    SpanTracker image(a.dim());
    for (const auto& q : params) image.add((ia * q + q * ib).coeffs());
    row.d_module = image.rank();
    row.equal = row.d_pair == row.d_oracle;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cdalg
