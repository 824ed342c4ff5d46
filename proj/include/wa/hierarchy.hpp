#pragma once

#include <string>
#include <vector>

#include "wa/checkers.hpp"
#include "wa/corpus.hpp"

namespace wa {

// One separating example: a function computed by `automaton` (membership in
// the larger class) that violates the pumping lemma of the smaller class.
struct HierarchyRow {
  std::string semiring;
  std::string function;
  std::string automaton;
  AmbiguityClass automaton_class = AmbiguityClass::Unambiguous;
  // Membership needs the automaton to be at most this ambiguous.
  AmbiguityClass required_class = AmbiguityClass::Unambiguous;
  bool automaton_agrees = false;  // automaton equals the oracle on short words
  std::string lemma;
  std::string representation;
  std::string sets;
  Verdict verdict;
  std::string separation;  // e.g. "U-WA < FA-WA"
  std::string conclusion;

  bool as_expected() const;
};

struct HierarchyReport {
  std::vector<HierarchyRow> rows;
  // Per semiring, the separations established by rows that behaved as expected.
  bool chain_min_plus = false;
  bool chain_max_plus = false;
};

HierarchyReport run_hierarchy();

// Words of length <= max_len over the alphabet, shortest first.
std::vector<Word> all_words(const std::string& alphabet, std::size_t max_len);

}  // namespace wa
