#ifndef CDALG_IDENTITY_LAB_HPP
#define CDALG_IDENTITY_LAB_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdalg/element.hpp"

namespace cdalg {

/// Levels {0, ..., max_level}; max_level = kAllLevels means every level.
struct LevelSet {
  static constexpr unsigned kAllLevels = std::numeric_limits<unsigned>::max();
  unsigned max_level = kAllLevels;

  bool contains(unsigned level) const noexcept { return level <= max_level; }
  bool unbounded() const noexcept { return max_level == kAllLevels; }
};

/// Two exactly evaluated sides of an identity.
struct LawSides {
  ExactElement left;
  ExactElement right;
};

struct Law {
  std::string id;
  std::string statement;
  unsigned arity = 1;
  LevelSet claimed_levels;
  /// Evaluates both sides; for multi-clause laws, the first clause that
  /// fails (or the last clause if all hold).
  std::function<LawSides(std::span<const ExactElement>)> evaluate;

  bool check(std::span<const ExactElement> elements) const {
    const LawSides s = evaluate(elements);
    return s.left == s.right;
  }
};

enum class Verdict { HoldsOnSamples, Counterexample };

struct LawReport {
  std::string law_id;
  unsigned level = 0;
  std::size_t trials = 0;
  Verdict verdict = Verdict::HoldsOnSamples;
  std::vector<ExactElement> witness;
  std::optional<ExactElement> left;
  std::optional<ExactElement> right;
  bool claimed = false;

  bool matches_claim() const noexcept { return claimed == (verdict == Verdict::HoldsOnSamples); }
};

const std::vector<Law>& law_catalog();

/// Throws std::invalid_argument for an unknown id.
const Law& find_law(std::string_view id);

/// Evaluates one tuple. Throws std::invalid_argument on an arity or level
/// mismatch.
LawReport check_law(const Law& law, std::span<const ExactElement> elements);

/// One report per catalog law at `level`: an exhaustive sweep over basis
/// tuples up to level 4, then `trials` seeded random rational tuples. Stops a law at its
/// first counterexample. Laws run concurrently; output is deterministic for
/// fixed (level, trials, seed).
std::vector<LawReport> scan_level(unsigned level, std::size_t trials, std::uint64_t seed);

struct SpanRow {
  std::size_t trial = 0;
  std::size_t d_oracle = 0;
  std::size_t d_pair = 0;
  std::size_t d_module = 0;
  bool equal = false;
  ExactElement a;
  ExactElement b;
};

struct SpanReport {
  unsigned level = 0;
  std::size_t trials = 0;
  std::vector<SpanRow> rows;
  std::size_t skipped = 0;

  std::size_t equal_count() const;
  std::vector<const SpanRow*> discrepancies() const;
};

/// For random similar pairs b = p a p^-1 (b != conj(a), a not real):
/// compares the oracle kernel dimension of a x = x b with the span of the
/// two distinguished solutions Im a + Im b and |Im a||Im b| - (Im a)(Im b),
/// and with the image of p -> (Im a) p + p (Im b) over the full algebra
/// (level 2) or over the subalgebra generated by a and b (level 3).
SpanReport span_experiment(unsigned level, std::size_t trials, std::uint64_t seed);

}  // namespace cdalg

#endif  // CDALG_IDENTITY_LAB_HPP
