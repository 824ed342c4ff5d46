#include <functional>
#include <map>

#include "wa/corpus.hpp"

namespace wa::corpus {
namespace {

constexpr auto kMin = SemiringTag::MinPlus;
constexpr auto kMax = SemiringTag::MaxPlus;

WeightedAutomaton w1() {
  // n0 guesses the last b; "s" handles words without b.
  WeightedAutomaton a(kMin, {"n0", "n1", "s"}, "ab");
  a.add_initial("n0", 0);
  a.add_initial("s", 0);
  a.add_final("n1", 0);
  a.add_transition("n0", 'a', 0, "n0");
  a.add_transition("n0", 'b', 0, "n0");
  a.add_transition("n0", 'b', 0, "n1");
  a.add_transition("n1", 'a', 1, "n1");
  a.add_transition("s", 'a', 1, "n1");
  return a;
}

WeightedAutomaton w1p() {
  WeightedAutomaton a(SemiringTag::PlusTimes, {"m0", "m1", "m2", "m3"}, "ab");
  a.add_initial("m0", 1);
  a.add_initial("m3", 1);
  a.add_final("m1", 1);
  a.add_final("m2", 1);
  a.set_final(3, Weight::infinity(SemiringTag::PlusTimes));
  a.add_transition("m0", 'a', 1, "m0");
  a.add_transition("m0", 'b', 1, "m0");
  a.add_transition("m0", 'a', 1, "m1");
  a.add_transition("m1", 'a', 1, "m1");
  return a;
}

WeightedAutomaton two_counters(SemiringTag tag) {
  WeightedAutomaton a(tag, {"q0", "q1"}, "ab");
  for (const char* q : {"q0", "q1"}) {
    a.add_initial(q, 0);
    a.add_final(q, 0);
  }
  a.add_transition("q0", 'a', 1, "q0");
  a.add_transition("q0", 'b', 0, "q0");
  a.add_transition("q1", 'a', 0, "q1");
  a.add_transition("q1", 'b', 1, "q1");
  return a;
}

// Counts a's in q0, then b's in q1; the switching letter costs `switch_cost`.
WeightedAutomaton a_then_b(SemiringTag tag, unsigned long switch_cost) {
  WeightedAutomaton a(tag, {"q0", "q1"}, "ab");
  a.add_initial("q0", 0);
  a.add_final("q0", 0);
  a.add_final("q1", 0);
  a.add_transition("q0", 'a', 1, "q0");
  a.add_transition("q0", 'b', 0, "q0");
  a.add_transition("q0", 'a', switch_cost, "q1");
  a.add_transition("q0", 'b', switch_cost, "q1");
  a.add_transition("q1", 'a', 0, "q1");
  a.add_transition("q1", 'b', 1, "q1");
  return a;
}

// Guesses a maximal block of b's and outputs its length.
WeightedAutomaton b_block(SemiringTag tag, std::string alphabet = "ab") {
  WeightedAutomaton a(tag, {"p5", "p0", "p1", "p2"}, std::move(alphabet));
  a.add_initial("p5", 0);
  a.add_initial("p0", 0);
  a.add_final("p1", 0);
  a.add_final("p2", 0);
  a.add_transition("p5", 'a', 0, "p5");
  a.add_transition("p5", 'b', 0, "p5");
  a.add_transition("p5", 'a', 0, "p0");
  a.add_transition("p0", 'b', 1, "p1");
  a.add_transition("p1", 'b', 1, "p1");
  a.add_transition("p1", 'a', 0, "p2");
  a.add_transition("p2", 'a', 0, "p2");
  a.add_transition("p2", 'b', 0, "p2");
  return a;
}

// Per #-separated block, count either the a's (r0) or the b's (r2).
WeightedAutomaton blockwise_counters(SemiringTag tag) {
  WeightedAutomaton a(tag, {"r0", "r1", "r2"}, "ab#");
  a.add_initial("r1", 0);
  for (const char* q : {"r0", "r1", "r2"}) a.add_final(q, 0);
  a.add_transition("r0", 'a', 1, "r0");
  a.add_transition("r0", 'b', 0, "r0");
  a.add_transition("r2", 'a', 0, "r2");
  a.add_transition("r2", 'b', 1, "r2");
  a.add_transition("r1", '#', 0, "r1");
  a.add_transition("r0", '#', 0, "r1");
  a.add_transition("r2", '#', 0, "r1");
  a.add_transition("r1", 'a', 0, "r2");
  a.add_transition("r1", 'b', 1, "r2");
  a.add_transition("r1", 'a', 1, "r0");
  a.add_transition("r1", 'b', 0, "r0");
  return a;
}

WeightedAutomaton f6_automaton() {
  WeightedAutomaton a = b_block(kMin, "ab#");
  for (const char* from : {"p1", "p2"})
    for (const char* to : {"p5", "p0"}) a.add_transition(from, '#', 0, to);
  return a;
}

WeightedAutomaton g6_automaton() {
  WeightedAutomaton a(kMax, {"q0", "q1"}, "ab#");
  a.add_initial("q0", 0);
  a.add_final("q0", 0);
  a.add_final("q1", 0);
  a.add_transition("q0", 'a', 1, "q0");
  a.add_transition("q0", 'b', 0, "q0");
  a.add_transition("q0", 'a', 1, "q1");
  a.add_transition("q0", 'b', 1, "q1");
  a.add_transition("q1", 'a', 0, "q1");
  a.add_transition("q1", 'b', 1, "q1");
  a.add_transition("q0", '#', 0, "q0");
  a.add_transition("q1", '#', 0, "q0");
  return a;
}

struct Recipe {
  std::string description;
  SemiringTag tag;
  std::function<WeightedAutomaton()> make;
  std::string oracle;
  AmbiguityClass expected;
};

const std::map<std::string, Recipe, std::less<>>& recipes() {
  using C = AmbiguityClass;
  static const std::map<std::string, Recipe, std::less<>> r = {
      {"W1", {"length of the trailing block of a's, inf on the empty word", kMin, w1, "f1", C::Unambiguous}},
      {"W1p", {"f1 over the natural numbers", SemiringTag::PlusTimes, w1p, "f1", C::PolynomiallyAmbiguous}},
      {"W2", {"min(|w|_a, |w|_b)", kMin, [] { return two_counters(kMin); }, "f2", C::FinitelyAmbiguous}},
      {"W3", {"min over splits of a's before plus b's after", kMin, [] { return a_then_b(kMin, 0); }, "f3",
              C::PolynomiallyAmbiguous}},
      {"W4", {"shortest maximal block of b's, inf if none", kMin, [] { return b_block(kMin); }, "f4",
              C::PolynomiallyAmbiguous}},
      {"W5", {"sum over #-blocks of min(|w_i|_a, |w_i|_b)", kMin, [] { return blockwise_counters(kMin); }, "f5",
              C::ExponentiallyAmbiguous}},
      {"F6A", {"sum over #-blocks of the shortest block of b's", kMin, f6_automaton, "f6",
               C::ExponentiallyAmbiguous}},
      {"G2", {"max(|w|_a, |w|_b)", kMax, [] { return two_counters(kMax); }, "g2", C::FinitelyAmbiguous}},
      {"G3", {"max over splits of a's before plus b's after", kMax, [] { return a_then_b(kMax, 1); }, "g3",
              C::PolynomiallyAmbiguous}},
      {"G4", {"longest maximal block of b's, -inf if none", kMax, [] { return b_block(kMax); }, "g4",
              C::PolynomiallyAmbiguous}},
      {"G5", {"sum over #-blocks of max(|w_i|_a, |w_i|_b)", kMax, [] { return blockwise_counters(kMax); }, "g5",
              C::ExponentiallyAmbiguous}},
      {"G6", {"sum over #-blocks of g3", kMax, g6_automaton, "g6", C::ExponentiallyAmbiguous}},
  };
  return r;
}

}  // namespace

std::vector<std::string> names() {
  return {"W1", "W1p", "W2", "W3", "W4", "W5", "F6A", "G2", "G3", "G4", "G5", "G6"};
}

bool has_entry(std::string_view name) { return recipes().count(name) > 0; }

Entry build(std::string_view name) {
  auto it = recipes().find(name);
  if (it == recipes().end()) throw ContractError("unknown corpus entry '" + std::string(name) + "'");
  const Recipe& r = it->second;
  return Entry{it->first, r.description, r.tag, r.make(), r.oracle, r.expected};
}

WeightedAutomaton counter(SemiringTag tag, char letter, std::string alphabet) {
  WeightedAutomaton a(tag, {"c"}, alphabet);
  a.add_initial("c", 0);
  a.add_final("c", 0);
  for (char c : alphabet) a.add_transition("c", c, c == letter ? 1 : 0, "c");
  return a;
}

FunctionHandle f2_finite_min() {
  return FunctionHandle::finite_min({counter(kMin, 'a'), counter(kMin, 'b')}, "f2");
}

FunctionHandle g2_finite_max() {
  return FunctionHandle::finite_max({counter(kMax, 'a'), counter(kMax, 'b')}, "g2");
}

}  // namespace wa::corpus
