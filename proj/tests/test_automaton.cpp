#include <doctest.h>

#include "support.hpp"
#include "wa/hierarchy.hpp"

using namespace wa;
using namespace wa::test;

TEST_CASE("evaluation of the corpus examples") {
  const auto w1 = corpus_automaton("W1");
  CHECK(evaluate(w1, "") == inf(kMin));
  CHECK(evaluate(w1, "baa") == fin(kMin, 2));
  CHECK(evaluate(w1, "ab") == fin(kMin, 0));
  CHECK(evaluate(corpus_automaton("W2"), "aab") == fin(kMin, 1));
  CHECK(evaluate(corpus_automaton("W2"), "ab") == fin(kMin, 1));
  CHECK(evaluate(corpus_automaton("W4"), "abba") == fin(kMin, 2));
  CHECK(evaluate(corpus_automaton("W4"), "aaa") == inf(kMin));
  CHECK(evaluate(corpus_automaton("W5"), "ab#aab") == fin(kMin, 2));
  CHECK(evaluate(corpus_automaton("G3"), "ba") == fin(kMax, 1));
  CHECK_THROWS_AS(evaluate(w1, "abc"), ContractError);
}

TEST_CASE("word matrices") {
  const auto w3 = corpus_automaton("W3");
  CHECK(word_matrix(w3, "") == Matrix::identity(kMin, w3.size()));
  CHECK(word_matrix(w3, "a") == w3.matrix('a'));
  CHECK(word_matrix(w3, "ab") == w3.matrix('a') * w3.matrix('b'));
}

TEST_CASE("run enumeration") {
  const auto w3 = corpus_automaton("W3");
  CHECK(enumerate_runs(w3, "aa").size() == 3);
  CHECK(enumerate_runs(corpus_automaton("W1"), "").empty());
  for (std::size_t n = 0; n <= 10; ++n) CHECK(count_runs(w3, repeat("a", n)) == n + 1);

  const auto w2 = corpus_automaton("W2");
  const auto runs = enumerate_runs(w2, "ab");
  Weight best = Weight::zero(kMin);
  for (const auto& r : runs) best = best + r.weight;
  CHECK(best == evaluate(w2, "ab"));
  CHECK(best == fin(kMin, 1));

  CHECK_THROWS_AS(enumerate_runs(w3, repeat("a", 13)), LimitExceeded);
  CHECK(enumerate_runs(w3, repeat("a", 13), 20).size() == 14);
}

TEST_CASE("runs are formatted state by state") {
  const auto w3 = corpus_automaton("W3");
  const auto runs = enumerate_runs(w3, "aa");
  CHECK(format_run(w3, runs.front().states, "aa") == "q0 -a-> q0 -a-> q0");
}

TEST_CASE("trimming") {
  const auto w1 = corpus_automaton("W1");
  CHECK(trim(w1).size() == w1.size());

  WeightedAutomaton a(kMin, {"p", "q", "dead"}, "a");
  a.add_initial("p", 0);
  a.add_final("q", 0);
  a.add_transition("p", 'a', 1, "q");
  a.add_transition("dead", 'a', 1, "q");
  const auto t = trim(a);
  CHECK(t.size() == 2);
  CHECK(t.states() == std::vector<std::string>{"p", "q"});
  for (const auto& w : all_words("a", 5)) CHECK(evaluate(t, w) == evaluate(a, w));
}

TEST_CASE("constructor contracts") {
  CHECK_THROWS_AS(WeightedAutomaton(kBool, {"p"}, "a"), ContractError);
  CHECK_THROWS_AS(WeightedAutomaton(kMin, {"p", "p"}, "a"), ContractError);
  CHECK_THROWS_AS(WeightedAutomaton(kMin, {"p"}, "aa"), ContractError);
  WeightedAutomaton a(kMin, {"p"}, "a");
  CHECK_THROWS_AS(a.add_transition("p", 'b', 0, "p"), ContractError);
  CHECK_THROWS_AS(a.set_transition(0, 'a', fin(kMax, 0), 0), SemiringMismatch);
}

TEST_CASE("text format round trip") {
  for (const auto& name : corpus::names()) {
    const auto a = corpus_automaton(name.c_str());
    const auto b = parse_automaton(to_text(a));
    CHECK(b.states() == a.states());
    CHECK(b.alphabet() == a.alphabet());
    CHECK(b.matrices() == a.matrices());
    CHECK(b.initial() == a.initial());
    CHECK(b.final_weights() == a.final_weights());
  }
}

TEST_CASE("parser diagnostics carry positions") {
  const std::string head = "semiring: min-plus\nstates: p q\nalphabet: a #\n";
  auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_automaton(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at(head + "trans: p a 1 r\n").first == 4);
  CHECK(error_at(head + "trans: p a 1 q\ntrans: p a 2 q\n").first == 5);
  CHECK(error_at(head + "init: p inf\n").first == 4);
  CHECK(error_at("init: p 0\nsemiring: min-plus\n").first == 1);
  CHECK(error_at("semiring: boolean\n") == std::pair<std::size_t, std::size_t>{1, 11});
  CHECK(error_at(head + "bogus\n") == std::pair<std::size_t, std::size_t>{4, 1});

  const auto a = parse_automaton("# comment\n" + head + "  # indented comment\ninit: p 0\nfinal: q 0\ntrans: p # 3 q\n");
  CHECK(evaluate(a, "#") == fin(kMin, 3));
}

TEST_CASE("conversion to the natural semiring") {
  const auto w1 = corpus_automaton("W1");
  const auto b = convert_unambiguous_to_plus_times(w1);
  CHECK(b.tag() == kNat);
  const auto w1p = corpus_automaton("W1p");
  for (const auto& w : all_words("ab", 6)) {
    const Weight t = evaluate(w1, w);
    const Weight n = evaluate(b, w);
    CHECK(n.is_infinite() == t.is_infinite());
    if (t.is_finite()) CHECK(n.value() == t.value());
    CHECK(n == evaluate(w1p, w));
  }
  CHECK_THROWS_AS(convert_unambiguous_to_plus_times(corpus_automaton("W2")), NotUnambiguous);
}

TEST_CASE("conversion of a single-state length counter") {
  WeightedAutomaton a(kMin, {"c"}, "a");
  a.add_initial("c", 0);
  a.add_final("c", 0);
  a.add_transition("c", 'a', 1, "c");
  const auto b = convert_unambiguous_to_plus_times(a);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(evaluate(b, repeat("a", n)) == fin(kNat, n));
}
