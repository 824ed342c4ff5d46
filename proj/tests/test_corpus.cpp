#include <doctest.h>

#include "support.hpp"
#include "wa/hierarchy.hpp"

using namespace wa;
using namespace wa::test;

TEST_CASE("oracle values") {
  CHECK(corpus::oracle("f1")("") == inf(kMin));
  CHECK(corpus::oracle("f1")("abaa") == fin(kMin, 2));
  CHECK(corpus::oracle("f2")("aab") == fin(kMin, 1));
  CHECK(corpus::oracle("f4")("abba") == fin(kMin, 2));
  CHECK(corpus::oracle("f4")("aaa") == inf(kMin));
  CHECK(corpus::oracle("f5")("ab#aab") == fin(kMin, 2));
  CHECK(corpus::oracle("g3")("ba") == fin(kMax, 1));
  CHECK(corpus::oracle("g4")("abbbab") == fin(kMax, 3));
  CHECK(corpus::oracle("g4")("aa") == inf(kMax));
  CHECK(corpus::oracle("g2")("aab") == fin(kMax, 2));
  CHECK(corpus::oracle("f3")(repeat("bbbaaa", 3)) == fin(kMin, 6));
  CHECK_THROWS_AS(corpus::oracle("f9"), ContractError);
}

TEST_CASE("automata agree with their oracles") {
  for (const auto& name : corpus::names()) {
    const auto e = corpus::build(name);
    const auto f = corpus::oracle(e.oracle);
    const std::size_t len = e.automaton->alphabet().size() > 2 ? 5 : 7;
    for (const auto& w : all_words(e.automaton->alphabet(), len))
      CHECK_MESSAGE(same_value(evaluate(*e.automaton, w), f(w)), name << " on '" << w << "'");
  }
}

TEST_CASE("finite min and max handles") {
  const auto f2 = corpus::f2_finite_min();
  const auto g2 = corpus::g2_finite_max();
  CHECK(f2.backing() == FunctionHandle::Backing::FiniteMin);
  CHECK(g2.backing() == FunctionHandle::Backing::FiniteMax);
  for (const auto& w : all_words("ab", 6)) {
    CHECK(f2(w) == corpus::oracle("f2")(w));
    CHECK(g2(w) == corpus::oracle("g2")(w));
  }
  CHECK(f2.monoid().dim() == 2);
  CHECK(corpus::oracle("f3").monoid().is_trivial());
  CHECK_THROWS_AS(FunctionHandle::finite_min({corpus::counter(kMax, 'a')}), SemiringMismatch);
  CHECK_THROWS_AS(FunctionHandle::finite_max({corpus::counter(kMin, 'a')}), SemiringMismatch);
  CHECK_THROWS_AS(FunctionHandle::finite_min({}), ContractError);
}

TEST_CASE("unknown entries") {
  CHECK_FALSE(corpus::has_entry("W9"));
  CHECK_THROWS_AS(corpus::build("W9"), ContractError);
  CHECK(corpus::names().size() == 12);
  CHECK(corpus::oracle_names().size() == 11);
}
