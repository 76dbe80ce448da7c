#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qosr/algebra/semiring.hpp"

namespace qosr {

struct LawViolation {
  std::string law;
  std::vector<std::string> operands;  // printed counterexample
};

struct LawSection {
  std::string name;  // e.g. "weighted x weighted"
  std::size_t samples = 0;
  std::map<std::string, std::size_t> violations_by_law;
  std::vector<LawViolation> examples;  // first few counterexamples

  [[nodiscard]] std::size_t violations() const;
};

struct LawReport {
  std::vector<LawSection> sections;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::string to_string() const;
};

// Randomised check of the c-semiring laws (commutativity, associativity,
// idempotence of choose, units, absorbing elements, distributivity and
// monotonicity) on s, on s x s, on the Hoare power domain of s and, when s
// has a single weighted or probabilistic kind, on the ordered product of
// s x s with weights `w` (uniform when absent).
LawReport law_check(const SemiringSpec& s, std::size_t samples, std::uint64_t seed,
                    const std::optional<WeightProfile>& w = std::nullopt);

// The individual sections, for callers that want only one.
LawSection check_semiring(const SemiringSpec& s, std::size_t samples, std::uint64_t seed);
LawSection check_hoare(const SemiringSpec& s, std::size_t samples, std::uint64_t seed);

}  // namespace qosr
