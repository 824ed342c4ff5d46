#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wa/automaton.hpp"
#include "wa/representation.hpp"

namespace wa {

// The finite monoid of abstracted transition matrices a refinement is taken
// against. The trivial monoid (dimension 0) makes every word idempotent.
class LetterMonoid {
 public:
  static LetterMonoid of(const WeightedAutomaton& a);
  static LetterMonoid block_diagonal(const std::vector<WeightedAutomaton>& parts);
  static LetterMonoid trivial(std::string alphabet);

  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_trivial() const noexcept { return dim_ == 0; }

  // Abstraction of M_w.
  Matrix element(std::string_view word) const;
  bool is_idempotent_word(std::string_view word) const;

 private:
  LetterMonoid(std::string alphabet, std::size_t dim, std::vector<Matrix> letters);

  std::string alphabet_;
  std::size_t dim_;
  std::vector<Matrix> letters_;
};

// Shortest idempotent infix v[i..j), smallest j first and then largest i.
// Throws NoIdempotentInfix.
std::pair<std::size_t, std::size_t> factorize_idempotent(const LetterMonoid& m, std::string_view v);
std::pair<std::size_t, std::size_t> factorize_idempotent(const WeightedAutomaton& a, std::string_view v);

// Every idempotent infix, in the order factorize_idempotent prefers them.
std::vector<FactorSplit> idempotent_infixes(const LetterMonoid& m, std::string_view v);

// Canonical refinement: each y_k is the preferred idempotent infix of v_k.
RefinedRepresentation refine_rep(const LetterMonoid& m, const PumpingRepresentation& rep);
RefinedRepresentation refine_rep(const WeightedAutomaton& a, const PumpingRepresentation& rep);

// A word function f: Sigma* -> S backed by an automaton, a finite min/max of
// automata, or a direct definition.
class FunctionHandle {
 public:
  enum class Backing { Automaton, FiniteMin, FiniteMax, Oracle };
  using Evaluator = std::function<Weight(std::string_view)>;

  static FunctionHandle automaton(WeightedAutomaton a, std::string name = "");
  static FunctionHandle finite_min(std::vector<WeightedAutomaton> parts, std::string name = "");
  static FunctionHandle finite_max(std::vector<WeightedAutomaton> parts, std::string name = "");
  static FunctionHandle oracle(std::string name, SemiringTag tag, std::string alphabet, Evaluator eval);

  Backing backing() const noexcept { return backing_; }
  SemiringTag tag() const noexcept { return tag_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  const std::vector<WeightedAutomaton>& components() const noexcept { return parts_; }

  Weight operator()(std::string_view word) const;

  // Block-diagonal abstraction of the components; trivial for oracles.
  LetterMonoid monoid() const;

  // f(w(S,i)) for i = 0..horizon.
  std::vector<Weight> pumped_values(const RefinedRepresentation& r, const PumpSet& s, std::size_t horizon) const;

 private:
  FunctionHandle(Backing backing, SemiringTag tag, std::string name, std::string alphabet,
                 std::vector<WeightedAutomaton> parts, Evaluator eval);

  Weight combine(const std::vector<Weight>& per_part) const;

  Backing backing_;
  SemiringTag tag_;
  std::string name_;
  std::string alphabet_;
  std::vector<WeightedAutomaton> parts_;
  Evaluator eval_;
};

std::string_view to_string(FunctionHandle::Backing b);

}  // namespace wa
