#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wa/semiring.hpp"
#include "wa/tensor.hpp"

namespace wa {

// Letters are single characters; a word is a plain string of letters.
using Word = std::string;
using StateId = std::size_t;

// A = (Q, Sigma, {M_a}, I, F) over one semiring. States are named and keep
// their order through serialisation.
class WeightedAutomaton {
 public:
  WeightedAutomaton(SemiringTag tag, std::vector<std::string> states, std::string alphabet);

  SemiringTag tag() const noexcept { return tag_; }
  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& alphabet() const noexcept { return alphabet_; }

  std::optional<StateId> state_index(std::string_view name) const;
  std::optional<std::size_t> letter_index(char letter) const;

  // Throws ContractError for letters outside the alphabet.
  const Matrix& matrix(char letter) const;
  const std::vector<Matrix>& matrices() const noexcept { return matrices_; }
  const Vec& initial() const noexcept { return initial_; }
  const Vec& final_weights() const noexcept { return final_; }

  void set_transition(StateId p, char letter, Weight w, StateId q);
  void set_initial(StateId p, Weight w);
  void set_final(StateId p, Weight w);

  // Name-based helpers taking plain numbers for finite weights.
  void add_transition(std::string_view p, char letter, unsigned long weight, std::string_view q);
  void add_initial(std::string_view p, unsigned long weight);
  void add_final(std::string_view p, unsigned long weight);

 private:
  StateId require_state(std::string_view name) const;
  std::size_t require_letter(char letter) const;

  SemiringTag tag_;
  std::vector<std::string> states_;
  std::string alphabet_;
  std::vector<Matrix> matrices_;
  Vec initial_;
  Vec final_;
};

// An accepting run q0 -a1-> q1 ... -an-> qn with its weight.
struct Run {
  std::vector<StateId> states;
  Word word;
  Weight weight;
};

// I^T * M_w * F; zero when there is no accepting run.
Weight evaluate(const WeightedAutomaton& a, std::string_view word);

// M_{a1} * ... * M_{an}, identity for the empty word.
Matrix word_matrix(const WeightedAutomaton& a, std::string_view word);

// All accepting runs in lexicographic order of state indices. Throws
// LimitExceeded when |word| > limit.
std::vector<Run> enumerate_runs(const WeightedAutomaton& a, std::string_view word, std::size_t limit = 12);

// |Run_A(word)| by dynamic programming over the boolean structure.
Natural count_runs(const WeightedAutomaton& a, std::string_view word);

// Mask of states both accessible and co-accessible.
std::vector<bool> useful_states(const WeightedAutomaton& a);

// Restriction to useful states, order preserved. May have no states.
WeightedAutomaton trim(const WeightedAutomaton& a);

// Two-copy construction plus an automaton outputting inf on the words where
// `a` has no accepting run. Requires a tropical, unambiguous automaton.
WeightedAutomaton convert_unambiguous_to_plus_times(const WeightedAutomaton& a);

// "q0 -a-> q1 -b-> q2"
std::string format_run(const WeightedAutomaton& a, const std::vector<StateId>& states, std::string_view word);

// Text format:
//   semiring: min-plus | max-plus | plus-times
//   states: q0 q1 ...
//   alphabet: a b ...
//   init: <state> <weight>
//   final: <state> <weight>
//   trans: <src> <letter> <weight> <dst>
// A line whose first non-blank character is '#' is a comment ('#' is also a
// legal letter, so comments cannot trail other content).
WeightedAutomaton parse_automaton(std::string_view text);
std::string to_text(const WeightedAutomaton& a);
WeightedAutomaton load_automaton(const std::filesystem::path& path);

}  // namespace wa
