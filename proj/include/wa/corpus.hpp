#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wa/ambiguity.hpp"
#include "wa/function.hpp"

namespace wa::corpus {

struct Entry {
  std::string name;
  std::string description;
  SemiringTag tag;
  std::optional<WeightedAutomaton> automaton;
  // Name of the direct definition computing the same function.
  std::string oracle;
  std::optional<AmbiguityClass> expected_class;
};

// W1 W1p W2 W3 W4 W5 F6A G2 G3 G4 G5 G6
std::vector<std::string> names();
Entry build(std::string_view name);
bool has_entry(std::string_view name);

// f1..f6, g2..g6
std::vector<std::string> oracle_names();
FunctionHandle oracle(std::string_view name);
bool has_oracle(std::string_view name);

// One-state automaton counting `letter` (weight 1, other letters 0).
WeightedAutomaton counter(SemiringTag tag, char letter, std::string alphabet = "ab");

// f2 = min(|w|_a, |w|_b) as a finite min of two unambiguous counters, and
// g2 = max(|w|_a, |w|_b) as the analogous finite max.
FunctionHandle f2_finite_min();
FunctionHandle g2_finite_max();

}  // namespace wa::corpus
