#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace wa;
using namespace wa::test;

namespace {

RefinedRepresentation canonical(const FunctionHandle& f, const std::string& rep) {
  return refine_rep(f.monoid(), PumpingRepresentation::parse(rep));
}

CheckOptions exhaustive(std::size_t n) {
  CheckOptions o;
  o.N = n;
  o.all_refinements = true;
  o.max_refinements = 100000;
  return o;
}

}  // namespace

TEST_CASE("representation syntax") {
  const auto r = PumpingRepresentation::parse("aaaa [bbb] c [d]");
  CHECK(r.n() == 2);
  CHECK(r.u(0) == "aaaa");
  CHECK(r.v(1) == "bbb");
  CHECK(r.u(1) == "c");
  CHECK(r.u(2).empty());
  CHECK(r.word() == "aaaabbbcd");
  CHECK(PumpingRepresentation::parse(r.to_string()) == r);
  CHECK_THROWS_AS(PumpingRepresentation::parse("a[]b"), ParseError);
  CHECK_THROWS_AS(PumpingRepresentation::parse("a[b"), ParseError);
  CHECK_THROWS_AS(PumpingRepresentation::parse("a]b"), ParseError);
}

TEST_CASE("pump sets and partitions") {
  CHECK(parse_sets("1,3;2,4", 4) == std::vector<PumpSet>{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(parse_sets("1,5", 4), ContractError);
  CHECK_THROWS_AS(validate_distinct_sets({{1}, {1}}, 2), ContractError);
  CHECK_THROWS_AS(validate_partition({{1, 2}, {2}}, 2), ContractError);
  CHECK_THROWS_AS(validate_partition({{1}}, 2), ContractError);
  const std::vector<PumpSet> blocks{{1, 2}, {3}, {4, 5}};
  CHECK(count_selection_sets(blocks) == 4);
  CHECK(selection_sets(blocks) == std::vector<PumpSet>{{1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}});
  CHECK_THROWS_AS(selection_sets(blocks, 3), LimitExceeded);
  CHECK(unite({1, 3}, {2, 3}) == PumpSet{1, 2, 3});
}

TEST_CASE("idempotent factorization") {
  CHECK(factorize_idempotent(corpus_automaton("W1"), "aaa") == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(factorize_idempotent(corpus_automaton("W4"), "bbb") == std::pair<std::size_t, std::size_t>{0, 1});

  const auto w3 = corpus_automaton("W3");
  CHECK(is_idempotent(word_matrix(w3, "a")));

  // A swap letter only becomes idempotent when squared.
  WeightedAutomaton swap(kMin, {"p", "q"}, "s");
  swap.add_transition("p", 's', 0, "q");
  swap.add_transition("q", 's', 0, "p");
  CHECK(factorize_idempotent(swap, "sss") == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK_THROWS_AS(factorize_idempotent(swap, "s"), NoIdempotentInfix);

  const auto infixes = idempotent_infixes(LetterMonoid::of(swap), "sss");
  CHECK(infixes == std::vector<FactorSplit>{{0, 2}, {1, 2}});
}

TEST_CASE("refinement of a representation") {
  const auto r = refine_rep(corpus_automaton("W2"), PumpingRepresentation::parse("aaaa[bbb]"));
  CHECK(r.y(1) == "b");
  CHECK(r.x(1).size() + r.z(1).size() == 2);
  CHECK(pump_word(r, {1}, 1) == "aaaabbb");

  const auto s = RefinedRepresentation(PumpingRepresentation::parse("aaaa[b]"), {{0, 1}});
  CHECK(pump_word(s, {1}, 3) == "aaaabbb");
  CHECK(pump_word(s, {1}, 0) == "aaaa");
  CHECK(s.u_prime(0) == "aaaa");

  WeightedAutomaton swap(kMin, {"p", "q"}, "s");
  swap.add_transition("p", 's', 0, "q");
  swap.add_transition("q", 's', 0, "p");
  try {
    refine_rep(swap, PumpingRepresentation::parse("[ss][s]"));
    FAIL("expected NoIdempotentInfix");
  } catch (const NoIdempotentInfix& e) {
    CHECK(e.factor() == 2);
  }
}

TEST_CASE("Ramsey bound") {
  CHECK(ramsey_bound(1) >= 2);
  CHECK(ramsey_bound(2) >= 6);
  CHECK(ramsey_bound(4) == 72);
}

TEST_CASE("growth of idempotent plus-times matrices") {
  const Vec one(kNat, std::vector<Weight>{fin(kNat, 1)});
  CHECK(idempotent_growth(Vec::unit(kNat, 2, 0), Matrix::identity(kNat, 2), Vec::unit(kNat, 2, 0)).trend ==
        Trend::Equal);
  CHECK(idempotent_growth(one, matrix(kNat, {{fin(kNat, 2)}}), one).trend == Trend::StrictIncrease);
  const auto zero = idempotent_growth(Vec::unit(kNat, 2, 0), Matrix::identity(kNat, 2), Vec::unit(kNat, 2, 1));
  CHECK(zero.trend == Trend::Equal);
  CHECK(zero.values.back() == fin(kNat, 0));
  const Matrix upper = matrix(kNat, {{fin(kNat, 1), fin(kNat, 1)}, {fin(kNat, 0), fin(kNat, 1)}});
  CHECK(idempotent_growth(Vec::unit(kNat, 2, 0), upper * upper, Vec::unit(kNat, 2, 1)).trend ==
        Trend::StrictIncrease);
  CHECK_THROWS_AS(idempotent_growth(one, matrix(kNat, {{inf(kNat)}}), one), ContractError);
}

TEST_CASE("linear constants of idempotent min-plus matrices") {
  const auto w4 = corpus_automaton("W4");
  const Matrix b = w4.matrix('b');
  const StateId p1 = *w4.state_index("p1");
  const auto lc = linear_constants(b, p1, p1);
  CHECK(lc.b == 0);
  CHECK(lc.c == fin(kMin, 1));
  CHECK(lc.d == fin(kMin, 0));

  const auto id = linear_constants(Matrix::identity(kMin, 3), 1, 1);
  CHECK(id.c == fin(kMin, 0));
  CHECK(id.d == fin(kMin, 0));

  const auto never = linear_constants(Matrix::identity(kMin, 2), 0, 1);
  CHECK(never.c == inf(kMin));
  CHECK(never.d == inf(kMin));

  const Matrix m = matrix(kMin, {{fin(kMin, 3), fin(kMin, 1)}, {inf(kMin), fin(kMin, 2)}});
  const auto lc2 = linear_constants(m, 0, 1);
  for (std::size_t i = 0; i <= 50; ++i) {
    const Weight expected = fin(kMin, 0) * lc2.d * Weight::finite(kMin, lc2.c.value() * i);
    CHECK(mat_pow(m, lc2.b + i).at(0, 1) == expected);
  }
}

TEST_CASE("eventual behaviour of pumped values") {
  const auto f2 = corpus::oracle("f2");
  const auto r = canonical(f2, "aaaa[b]");
  const auto e = eventual_behavior(f2, r, {1});
  CHECK(e.trend == Trend::Equal);
  CHECK(e.onset == 4);
  CHECK(e.slope == Natural(0));
  for (std::size_t i = 0; i <= 8; ++i) CHECK(e.values[i] == fin(kMin, std::min<std::size_t>(4, i)));

  const auto f1 = corpus::oracle("f1");
  const auto t = RefinedRepresentation(PumpingRepresentation::parse("b[aaa]"), {{0, 2}});
  const auto g = eventual_behavior(f1, t, {1});
  CHECK(g.trend == Trend::StrictIncrease);
  CHECK(g.slope == Natural(2));

  CHECK(eventual_behavior(f2, canonical(f2, "[ab]"), {1}).trend == Trend::Equal);
  const RefinedRepresentation whole(PumpingRepresentation::parse("[ab]"), {{0, 2}});
  CHECK(eventual_behavior(f2, whole, {1}).trend == Trend::StrictIncrease);

  const auto ignored = FunctionHandle::oracle("first", kMin, "ab", [](std::string_view w) {
    return Weight::finite(kMin, !w.empty() && w[0] == 'a');
  });
  const auto k = eventual_behavior(ignored, canonical(ignored, "a[b]"), {1});
  CHECK(k.trend == Trend::Equal);
  CHECK(k.onset == 0);
}

TEST_CASE("tail reading") {
  std::vector<Weight> affine, jump, geometric;
  for (unsigned long i = 0; i < 20; ++i) {
    affine.push_back(fin(kMin, 3 * i + 1));
    jump.push_back(fin(kMin, i % 2 == 0 ? i : i + 5));
    geometric.push_back(fin(kNat, 1UL << i));
  }
  CHECK(classify_tail(affine, 8, TailMode::Slope).slope == Natural(3));
  CHECK(classify_tail(jump, 8, TailMode::Slope).trend == Trend::NotStabilized);
  CHECK(classify_tail(geometric, 8, TailMode::Slope).trend == Trend::NotStabilized);
  CHECK(classify_tail(geometric, 8, TailMode::Comparison).trend == Trend::StrictIncrease);
  CHECK(classify_tail(std::vector<Weight>(20, inf(kMin)), 8, TailMode::Slope).trend == Trend::Equal);
  std::vector<Weight> mixed(20, fin(kMin, 1));
  mixed[17] = inf(kMin);
  CHECK(classify_tail(mixed, 8, TailMode::Slope).trend == Trend::NotStabilized);
}

TEST_CASE("slopes and decomposability for the max-plus split function") {
  const auto g3 = corpus::oracle("g3");
  const auto rep = PumpingRepresentation::parse("[aaaa][bbbb][aaaa][bbbb]");
  const RefinedRepresentation r(rep, {{0, 2}, {1, 3}, {0, 1}, {0, 1}});
  CHECK(delta(g3, r, {1}) == 2);
  CHECK(delta(g3, r, {2}) == 3);
  CHECK(delta(g3, r, {1, 2}) == 5);
  CHECK(is_decomposable(g3, r, {1, 2}));
  CHECK(delta(g3, r, {2, 3}) == 3);
  CHECK_FALSE(is_decomposable(g3, r, {2, 3}));

  const auto ignored = FunctionHandle::oracle("zero", kMax, "ab", [](std::string_view) { return fin(kMax, 0); });
  const auto s = canonical(ignored, "[ab][ba]");
  CHECK(delta(ignored, s, {1, 2}) == 0);
  CHECK(is_decomposable(ignored, s, {1, 2}));
}

TEST_CASE("phi from an ambiguity polynomial") {
  CHECK(phi_unbounded()(5) == 1);
  const auto phi = phi_from_polynomial({Natural(1), Natural(1)});
  CHECK(phi(1) == 1);
  // 2^m > 1 + 2m first holds at m = 3.
  CHECK(phi(2) == 3);
}

TEST_CASE("natural semiring lemma") {
  const auto w1p = FunctionHandle::automaton(corpus_automaton("W1p"));
  CheckOptions o = exhaustive(3);
  CHECK(check_nat_plus_times(w1p, "b", "aaa", "", o).kind == VerdictKind::HoldsStrict);
  CHECK(check_nat_plus_times(w1p, "a", "bbb", "a", o).kind == VerdictKind::HoldsEqual);

  const auto constant =
      FunctionHandle::oracle("seven", kNat, "ab", [](std::string_view) { return fin(kNat, 7); });
  CHECK(check_nat_plus_times(constant, "ab", "aba", "b", o).kind == VerdictKind::HoldsEqual);

  o.horizon = 40;
  const auto v = check_nat_plus_times(corpus::oracle("f2"), repeat("a", 16), "bbb", "", o);
  CHECK(v.kind == VerdictKind::Violated);
  CHECK(v.exhaustive);
  REQUIRE_FALSE(v.witnesses.empty());
  for (const auto& w : v.witnesses) {
    REQUIRE_FALSE(w.evidence.empty());
    CHECK(w.evidence.front().index.has_value());
  }

  CHECK_THROWS_AS(check_nat_plus_times(w1p, "", "aa", "", exhaustive(3)), ContractError);
}

TEST_CASE("finite-min lemma") {
  const auto o = exhaustive(3);
  const auto f4 = check_finite_min(corpus::oracle("f4"), PumpingRepresentation::parse("[bbb]a[bbb]a[bbb]a"),
                                   parse_sets("2,3;1,3;1,2", 3), o);
  CHECK(f4.kind == VerdictKind::Violated);
  CHECK(f4.refinements_checked == 27);
  CHECK(f4.witnesses.size() == o.max_witnesses);
  CHECK_FALSE(f4.tables.empty());
  CHECK(f4.tables.front().values.size() == o.horizon + 1);

  const auto f2 = corpus::f2_finite_min();
  const auto held = check_finite_min(f2, PumpingRepresentation::parse("aa[aab]b[bba][bbb]"), parse_sets("1;2;3", 3), o);
  CHECK(holds(held.kind));

  CHECK_THROWS_AS(check_finite_min(f2, PumpingRepresentation::parse("[ab][ba]"), parse_sets("1;2", 2), o),
                  ContractError);
}

TEST_CASE("min-plus partition lemma") {
  const auto w3 = FunctionHandle::automaton(corpus_automaton("W3"));
  const auto rep = PumpingRepresentation::parse("[a][b]");
  CHECK(holds(check_pa_minplus(w3, rep, parse_sets("1;2", 2)).kind));
  // A single block is below the bound on the number of blocks, and the
  // conclusion indeed fails there.
  CHECK(check_pa_minplus(w3, rep, parse_sets("1,2", 2)).kind == VerdictKind::Violated);
  CheckOptions bounded;
  bounded.phi = phi_from_polynomial({Natural(1), Natural(1)});
  CHECK_THROWS_AS(check_pa_minplus(w3, rep, parse_sets("1,2", 2), bounded), ContractError);
}

TEST_CASE("max-plus lemmas") {
  const auto o = exhaustive(3);
  const auto g4 = check_fa_maxplus(corpus::oracle("g4"), PumpingRepresentation::parse("[bbbb]a[bbbb]a[bbbb]a[bbbb]a"),
                                   parse_sets("1;2;3;4", 4), o);
  CHECK(g4.kind == VerdictKind::Violated);
  CHECK(g4.exhaustive);

  const auto g2 = corpus::g2_finite_max();
  CHECK(holds(check_fa_maxplus(g2, PumpingRepresentation::parse("[aab]a[bba]b[bbb]"), parse_sets("1;2;3", 3), o).kind));

  const auto g3 = FunctionHandle::automaton(corpus_automaton("G3"));
  CHECK(holds(check_pa_maxplus(g3, PumpingRepresentation::parse("[ab][ba]"), parse_sets("1;2", 2)).kind));
}

TEST_CASE("max-plus checkers do not define away -inf") {
  const auto g4 = corpus::oracle("g4");
  const auto v = check_fa_maxplus(g4, PumpingRepresentation::parse("[aaa][aaa][aaa]"), parse_sets("1;2;3", 3),
                                  exhaustive(3));
  CHECK(v.kind == VerdictKind::NotStabilized);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("strict growth of unambiguous components is carried by single factors") {
  std::mt19937_64 rng(20240611);
  const std::vector<WeightedAutomaton> parts{corpus_automaton("W1"), corpus::counter(kMin, 'a'),
                                             corpus::counter(kMin, 'b')};
  const auto f = FunctionHandle::finite_min(parts);
  std::size_t cases = 0, attempts = 0;
  while (cases < 200 && attempts++ < 5000) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Word> u(n + 1), v(n);
    auto random_word = [&](std::size_t len) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) w += "ab"[rng() % 2];
      return w;
    };
    for (auto& x : u) x = random_word(rng() % 3);
    for (auto& x : v) x = random_word(1 + rng() % 3);
    std::optional<RefinedRepresentation> r;
    try {
      r = refine_rep(f.monoid(), PumpingRepresentation(u, v));
    } catch (const NoIdempotentInfix&) {
      continue;
    }
    PumpSet s;
    for (std::size_t k = 1; k <= n; ++k)
      if (rng() % 2) s.push_back(k);
    if (s.empty()) s.push_back(1 + rng() % n);
    ++cases;
    for (const auto& part : parts) {
      const auto h = FunctionHandle::automaton(part);
      const bool strict = eventual_behavior(h, *r, s, 40).trend == Trend::StrictIncrease;
      bool single = false;
      for (std::size_t k : s) single = single || eventual_behavior(h, *r, {k}, 40).trend == Trend::StrictIncrease;
      CHECK_MESSAGE(strict == single, r->to_string() << " S=" << to_string(s));
    }
  }
  CHECK(cases == 200);
}
