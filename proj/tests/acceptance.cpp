// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "wa/corpus.hpp"
#include "wa/hierarchy.hpp"
#include "wa/properties.hpp"
#include "wa/pumping.hpp"

using namespace wa;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

Word repeat(const Word& w, std::size_t times) {
  Word out;
  for (std::size_t i = 0; i < times; ++i) out += w;
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t words = 0;
  for (const auto& name : corpus::names()) {
    const auto e = corpus::build(name);
    const auto f = corpus::oracle(e.oracle);
    const auto& a = *e.automaton;
    const std::size_t len = a.alphabet().size() > 2 ? 6 : 8;
    for (const auto& w : all_words(a.alphabet(), len)) {
      ++words;
      const Weight value = evaluate(a, w);
      Weight aggregate = Weight::zero(a.tag());
      for (const auto& run : enumerate_runs(a, w)) aggregate = aggregate + run.weight;
      if (!same_value(value, f(w))) o.fail(name + " vs oracle on '" + w + "'");
      if (!(value == aggregate)) o.fail(name + " vs runs on '" + w + "'");
    }
  }
  o.detail << corpus::names().size() << " automata, " << words << " words";
  return o;
}

Outcome ambiguity_labels() {
  Outcome o;
  const std::vector<std::pair<const char*, AmbiguityClass>> expected{
      {"W1", AmbiguityClass::Unambiguous},
      {"W2", AmbiguityClass::FinitelyAmbiguous},
      {"W3", AmbiguityClass::PolynomiallyAmbiguous},
      {"W4", AmbiguityClass::PolynomiallyAmbiguous},
      {"W5", AmbiguityClass::ExponentiallyAmbiguous},
  };
  for (const auto& [name, cls] : expected) {
    const auto got = classify(*corpus::build(name).automaton);
    o.detail << name << "=" << to_string(got) << " ";
    if (got != cls) o.fail(std::string(name) + " classified " + std::string(to_string(got)));
  }
  return o;
}

Outcome linear_constant_check() {
  Outcome o;
  std::size_t matrices = 0, entries = 0;
  for (const char* name : {"W3", "W4"}) {
    const auto a = *corpus::build(name).automaton;
    for (const auto& w : all_words(a.alphabet(), 4)) {
      const Matrix d = word_matrix(a, w);
      if (!is_idempotent(d)) continue;
      ++matrices;
      std::vector<Matrix> powers{Matrix::identity(a.tag(), a.size())};
      for (std::size_t k = 1; k <= 300; ++k) powers.push_back(powers.back() * d);
      for (StateId p = 0; p < a.size(); ++p)
        for (StateId q = 0; q < a.size(); ++q) {
          ++entries;
          const auto lc = linear_constants(d, p, q);
          for (std::size_t i = 0; i <= 50; ++i) {
            const Weight scaled =
                lc.c.is_infinite() ? lc.c : Weight::finite(a.tag(), lc.c.value() * Natural(i));
            if (!(powers.at(lc.b + i).at(p, q) == scaled * lc.d)) {
              o.fail(std::string(name) + " word '" + w + "' entry (" + std::to_string(p) + "," + std::to_string(q) +
                     ") at i=" + std::to_string(i));
              break;
            }
          }
        }
    }
  }
  o.detail << matrices << " idempotent matrices, " << entries << " entries, i in [0,50]";
  return o;
}

Outcome value_anchor() {
  Outcome o;
  const Word w = repeat("bbbaaa", 3);
  const Weight by_automaton = evaluate(*corpus::build("W3").automaton, w);
  const Weight by_oracle = corpus::oracle("f3")(w);
  o.detail << "W3=" << by_automaton.to_string() << " f3=" << by_oracle.to_string();
  if (!(by_automaton == Weight::finite(SemiringTag::MinPlus, 6))) o.fail("W3 value");
  if (!(by_oracle == Weight::finite(SemiringTag::MinPlus, 6))) o.fail("oracle value");
  return o;
}

bool has_concrete_witness(const Verdict& v) {
  if (v.witnesses.empty()) return false;
  for (const auto& w : v.witnesses) {
    if (w.splits.empty()) return false;
    bool indexed = false;
    for (const auto& e : w.evidence) indexed = indexed || e.index.has_value();
    if (!indexed) return false;
  }
  return true;
}

Outcome falsification() {
  Outcome o;
  CheckOptions opt;
  opt.N = 3;
  opt.all_refinements = true;
  opt.max_refinements = 100000;

  struct Case {
    const char* label;
    std::function<Verdict()> run;
  };
  const std::string f5rep = "[aaa][bbb]#[aaa][bbb]#[aaa][bbb]#[aaa][bbb]#";
  const std::string pairs = "1,2;3,4;5,6;7,8";
  auto rep = [](const std::string& s) { return PumpingRepresentation::parse(s); };
  const std::vector<Case> cases{
      {"f2",
       [&] {
         CheckOptions o40 = opt;
         o40.horizon = 40;
         return check_nat_plus_times(corpus::oracle("f2"), repeat("a", 16), "bbb", "", o40);
       }},
      {"f3",
       [&] {
         return check_finite_min(corpus::oracle("f3"), rep("[bbb][aaa][bbb][aaa][bbb][aaa]"),
                                 parse_sets("1,2;3,4;5,6", 6), opt);
       }},
      {"f4",
       [&] {
         return check_finite_min(corpus::oracle("f4"), rep("[bbb]a[bbb]a[bbb]a"), parse_sets("2,3;1,3;1,2", 3), opt);
       }},
      {"f5", [&] { return check_pa_minplus(corpus::oracle("f5"), rep(f5rep), parse_sets(pairs, 8), opt); }},
      {"f6",
       [&] {
         return check_pa_minplus(corpus::oracle("f6"), rep("[bbb]a[bbb]#[bbb]a[bbb]#[bbb]a[bbb]#[bbb]a[bbb]"),
                                 parse_sets(pairs, 8), opt);
       }},
      {"g3",
       [&] {
         return check_fa_maxplus(corpus::oracle("g3"), rep("[aaaa][bbbb][aaaa][bbbb][aaaa][bbbb][aaaa][bbbb]"),
                                 parse_sets(pairs, 8), opt);
       }},
      {"g4",
       [&] {
         return check_fa_maxplus(corpus::oracle("g4"), rep("[bbbb]a[bbbb]a[bbbb]a[bbbb]a"),
                                 parse_sets("1;2;3;4", 4), opt);
       }},
      {"g5", [&] { return check_pa_maxplus(corpus::oracle("g5"), rep(f5rep), parse_sets(pairs, 8), opt); }},
      {"g6",
       [&] {
         return check_pa_maxplus(corpus::oracle("g6"), rep("[bbb][aaa]#[bbb][aaa]#[bbb][aaa]#[bbb][aaa]#"),
                                 parse_sets(pairs, 8), opt);
       }},
  };
  for (const auto& c : cases) {
    const Verdict v = c.run();
    o.detail << c.label << ":" << to_string(v.kind) << "(" << v.refinements_checked << ") ";
    if (v.kind != VerdictKind::Violated) o.fail(std::string(c.label) + " gave " + std::string(to_string(v.kind)));
    else if (!has_concrete_witness(v)) o.fail(std::string(c.label) + " lacks witnesses");
    else if (!v.exhaustive) o.fail(std::string(c.label) + " refinements not exhausted");
  }
  return o;
}

// Every (u, v, w) with |uvw| <= 10 and |v| >= 3.
std::size_t positive_nat(Outcome& o) {
  const auto f = FunctionHandle::automaton(*corpus::build("W1p").automaton, "W1p");
  CheckOptions opt;
  opt.N = 3;
  opt.all_refinements = true;
  std::size_t checks = 0;
  for (const auto& word : all_words("ab", 10))
    for (std::size_t i = 0; i <= word.size(); ++i)
      for (std::size_t j = i + 3; j <= word.size(); ++j) {
        ++checks;
        const auto v = check_nat_plus_times(f, word.substr(0, i), word.substr(i, j - i), word.substr(j), opt);
        if (v.kind == VerdictKind::Violated)
          o.fail("W1p on " + word.substr(0, i) + "[" + word.substr(i, j - i) + "]" + word.substr(j));
      }
  return checks;
}

// f2 only sees letter counts, so the unpumped context is a^A b^B in front and
// each pumped factor ranges over all words of length 2..4.
std::size_t positive_finite_min(Outcome& o) {
  const auto f = corpus::f2_finite_min();
  CheckOptions opt;
  opt.N = 2;
  opt.all_refinements = true;
  const auto factors = [] {
    std::vector<Word> out;
    for (const auto& w : all_words("ab", 4))
      if (w.size() >= 2) out.push_back(w);
    return out;
  }();
  std::size_t checks = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<PumpSet> sets;
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      PumpSet s;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) s.push_back(k + 1);
      sets.push_back(s);
    }
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::size_t pumped = 0;
      std::vector<Word> v;
      for (std::size_t k = 0; k < n; ++k) {
        v.push_back(factors[idx[k]]);
        pumped += v.back().size();
      }
      for (std::size_t rest = 0; pumped + rest <= 12; ++rest)
        for (std::size_t a = 0; a <= rest; ++a) {
          std::vector<Word> u(n + 1);
          u[0] = Word(a, 'a') + Word(rest - a, 'b');
          ++checks;
          const PumpingRepresentation rep(u, v);
          if (check_finite_min(f, rep, sets, opt).kind == VerdictKind::Violated) o.fail("f2 on " + rep.to_string());
        }
      // Next non-decreasing index tuple: the set family is symmetric.
      std::size_t k = n;
      while (k > 0 && idx[k - 1] + 1 == factors.size()) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t m = k; m < n; ++m) idx[m] = idx[k - 1];
    }
  }
  return checks;
}

// All representations with n <= 3 factors of length 1..2 and gaps of length
// 0..1, under every partition whose size respects phi for W3.
std::size_t positive_partition(Outcome& o) {
  const auto a = *corpus::build("W3").automaton;
  const auto f = FunctionHandle::automaton(a, "W3");
  CheckOptions opt;
  opt.phi = phi_from_polynomial({Natural(1), Natural(1)});
  const auto factors = all_words("ab", 2);
  const std::vector<Word> gaps{"", "a", "b"};
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<PumpSet> singletons;
    for (std::size_t k = 1; k <= n; ++k) singletons.push_back({k});
    std::vector<std::size_t> vi(n, 1), ui(n + 1, 0);
    std::function<void(std::size_t)> over_gaps = [&](std::size_t slot) {
      if (slot == n + 1) {
        std::vector<Word> u, v;
        for (auto i : ui) u.push_back(gaps[i]);
        for (auto i : vi) v.push_back(factors[i]);
        const PumpingRepresentation rep(u, v);
        ++checks;
        if (check_pa_minplus(f, rep, singletons, opt).kind == VerdictKind::Violated)
          o.fail("W3 on " + rep.to_string());
        return;
      }
      for (ui[slot] = 0; ui[slot] < gaps.size(); ++ui[slot]) over_gaps(slot + 1);
    };
    std::function<void(std::size_t)> over_factors = [&](std::size_t k) {
      if (k == n) return over_gaps(0);
      for (vi[k] = 1; vi[k] < factors.size(); ++vi[k]) over_factors(k + 1);
    };
    over_factors(0);
  }
  return checks;
}

Outcome positive_suite() {
  Outcome o;
  const std::size_t nat = positive_nat(o);
  const std::size_t finmin = positive_finite_min(o);
  const std::size_t partition = positive_partition(o);
  o.detail << "W1p " << nat << " decompositions, f2 finite min " << finmin << " representations, W3 " << partition
           << " representations";
  return o;
}

Outcome property_batteries() {
  Outcome o;
  for (const auto& r : run_properties(20240611, 200)) {
    o.detail << r.name << " " << r.cases - r.failures << "/" << r.cases << "; ";
    if (r.failures != 0 || r.cases != 200) o.fail(r.name + ": " + r.first_failure);
  }
  return o;
}

Outcome hierarchy() {
  Outcome o;
  const auto h = run_hierarchy();
  for (const auto& r : h.rows) {
    o.detail << r.function << ":" << to_string(r.verdict.kind) << " ";
    if (!r.as_expected()) o.fail(r.function + " row not as expected");
  }
  if (!h.chain_min_plus) o.fail("min-plus chain");
  if (!h.chain_max_plus) o.fail("max-plus chain");
  o.detail << "chains min-plus=" << h.chain_min_plus << " max-plus=" << h.chain_max_plus;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"ambiguity labels", ambiguity_labels},
      {"linear constants of idempotent powers", linear_constant_check},
      {"value anchor f3((b^3 a^3)^3) = 6", value_anchor},
      {"falsification suite", falsification},
      {"positive suite", positive_suite},
      {"property batteries", property_batteries},
      {"strict hierarchy", hierarchy},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " [" << o.detail.str()
              << "] (" << secs << " s)" << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
