#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wa/automaton.hpp"

namespace wa {

enum class AmbiguityClass { Unambiguous, FinitelyAmbiguous, PolynomiallyAmbiguous, ExponentiallyAmbiguous };

std::string_view to_string(AmbiguityClass c);

// Two distinct accepting runs on the same word.
struct AmbiguityWitness {
  Word word;
  std::vector<StateId> first;
  std::vector<StateId> second;
};

// Two distinct cycles p -> p reading the same word.
struct EdaCertificate {
  StateId p;
  Word word;
  std::vector<StateId> first;
  std::vector<StateId> second;
};

// Runs p -> p, p -> q and q -> q reading the same word, p != q.
struct IdaCertificate {
  StateId p;
  StateId q;
  Word word;
  std::vector<StateId> loop_p;
  std::vector<StateId> bridge;
  std::vector<StateId> loop_q;
};

// Shortest witness found by breadth-first search in the self-product.
std::optional<AmbiguityWitness> find_ambiguity(const WeightedAutomaton& a);
bool is_unambiguous(const WeightedAutomaton& a);

// EDA and IDA are searched among useful states only.
std::optional<EdaCertificate> find_eda(const WeightedAutomaton& a);
bool has_eda(const WeightedAutomaton& a);

std::optional<IdaCertificate> find_ida(const WeightedAutomaton& a);
bool has_ida(const WeightedAutomaton& a);

struct Classification {
  AmbiguityClass cls;
  std::optional<AmbiguityWitness> ambiguity;
  std::optional<EdaCertificate> eda;
  std::optional<IdaCertificate> ida;
};

Classification classify_with_certificate(const WeightedAutomaton& a);
AmbiguityClass classify(const WeightedAutomaton& a);

}  // namespace wa
