#include "wa/hierarchy.hpp"

#include <map>
#include <set>

namespace wa {

std::vector<Word> all_words(const std::string& alphabet, std::size_t max_len) {
  std::vector<Word> out{""};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i)
      for (char c : alphabet) out.push_back(out[i] + c);
    level_start = level_end;
  }
  return out;
}

bool HierarchyRow::as_expected() const {
  return automaton_agrees && automaton_class <= required_class && verdict.kind == VerdictKind::Violated;
}

namespace {

struct Example {
  std::string semiring;
  std::string function;
  std::string automaton;
  std::string lemma;
  std::string rep;
  std::string sets;
  std::string separation;
  AmbiguityClass needed;  // the automaton must be at most this ambiguous
};

bool agrees(const corpus::Entry& e) {
  const auto f = corpus::oracle(e.oracle);
  const std::size_t len = e.automaton->alphabet().size() > 2 ? 6 : 8;
  for (const auto& w : all_words(e.automaton->alphabet(), len))
    if (!same_value(evaluate(*e.automaton, w), f(w))) return false;
  return true;
}

}  // namespace

HierarchyReport run_hierarchy() {
  const std::vector<Example> examples = {
      {"min-plus", "f2", "W2", "nat", "aaaaaaaaaaaaaaaa[bbb]", "", "U-WA < FA-WA", AmbiguityClass::FinitelyAmbiguous},
      {"min-plus", "f3", "W3", "finmin", "[bbb][aaa][bbb][aaa][bbb][aaa]", "1,2;3,4;5,6", "FA-WA < PA-WA",
       AmbiguityClass::PolynomiallyAmbiguous},
      {"min-plus", "f4", "W4", "finmin", "[bbb]a[bbb]a[bbb]a", "2,3;1,3;1,2", "FA-WA < PA-WA",
       AmbiguityClass::PolynomiallyAmbiguous},
      {"min-plus", "f5", "W5", "pa-min", "[aaa][bbb]#[aaa][bbb]#[aaa][bbb]#[aaa][bbb]#", "1,2;3,4;5,6;7,8",
       "PA-WA < WA", AmbiguityClass::ExponentiallyAmbiguous},
      {"min-plus", "f6", "F6A", "pa-min", "[bbb]a[bbb]#[bbb]a[bbb]#[bbb]a[bbb]#[bbb]a[bbb]", "1,2;3,4;5,6;7,8",
       "PA-WA < WA", AmbiguityClass::ExponentiallyAmbiguous},
      {"max-plus", "g2", "G2", "nat", "aaaaaaaaaaaaaaaa[bbb]", "", "U-WA < FA-WA", AmbiguityClass::FinitelyAmbiguous},
      {"max-plus", "g3", "G3", "fa-max", "[aaaa][bbbb][aaaa][bbbb][aaaa][bbbb][aaaa][bbbb]", "1,2;3,4;5,6;7,8",
       "FA-WA < PA-WA", AmbiguityClass::PolynomiallyAmbiguous},
      {"max-plus", "g4", "G4", "fa-max", "[bbbb]a[bbbb]a[bbbb]a[bbbb]a", "1;2;3;4", "FA-WA < PA-WA",
       AmbiguityClass::PolynomiallyAmbiguous},
      {"max-plus", "g5", "G5", "pa-max", "[aaa][bbb]#[aaa][bbb]#[aaa][bbb]#[aaa][bbb]#", "1,2;3,4;5,6;7,8",
       "PA-WA < WA", AmbiguityClass::ExponentiallyAmbiguous},
      {"max-plus", "g6", "G6", "pa-max", "[bbb][aaa]#[bbb][aaa]#[bbb][aaa]#[bbb][aaa]#", "1,2;3,4;5,6;7,8",
       "PA-WA < WA", AmbiguityClass::ExponentiallyAmbiguous},
  };

  HierarchyReport report;
  std::set<std::pair<std::string, std::string>> established;
  for (const auto& ex : examples) {
    const auto entry = corpus::build(ex.automaton);
    const auto f = corpus::oracle(ex.function);
    const auto rep = PumpingRepresentation::parse(ex.rep);

    CheckOptions opt;
    opt.N = 3;
    opt.all_refinements = true;
    opt.max_refinements = 100000;

    HierarchyRow row;
    row.semiring = ex.semiring;
    row.function = ex.function;
    row.automaton = ex.automaton;
    row.automaton_class = classify(trim(*entry.automaton));
    row.automaton_agrees = agrees(entry);
    row.lemma = ex.lemma;
    row.representation = rep.to_string();
    row.sets = ex.sets;
    row.separation = ex.separation;
    row.required_class = ex.needed;

    if (ex.lemma == "nat") {
      opt.horizon = 40;
      row.verdict = check_nat_plus_times(f, rep.u(0), rep.v(1), rep.u(1), opt);
    } else {
      const auto sets = parse_sets(ex.sets, rep.n());
      if (ex.lemma == "finmin") row.verdict = check_finite_min(f, rep, sets, opt);
      if (ex.lemma == "pa-min") row.verdict = check_pa_minplus(f, rep, sets, opt);
      if (ex.lemma == "fa-max") row.verdict = check_fa_maxplus(f, rep, sets, opt);
      if (ex.lemma == "pa-max") row.verdict = check_pa_maxplus(f, rep, sets, opt);
    }

    static const std::map<std::string, std::string> outside = {
        {"nat", "not recognisable over the natural numbers, hence not U-WA"},
        {"finmin", "not finite-min recognisable, hence not FA-WA"},
        {"pa-min", "not PA-WA"},
        {"fa-max", "not FA-WA"},
        {"pa-max", "not PA-WA"}};
    row.conclusion = ex.function + " violates the " + ex.lemma + " lemma: " + outside.at(ex.lemma) + "; " +
                     ex.automaton + " computes it with class " + std::string(to_string(row.automaton_class)) +
                     " => " + ex.separation;
    if (row.as_expected()) established.insert({ex.semiring, ex.separation});
    report.rows.push_back(std::move(row));
  }
  auto chain = [&](const std::string& s) {
    return established.count({s, "U-WA < FA-WA"}) && established.count({s, "FA-WA < PA-WA"}) &&
           established.count({s, "PA-WA < WA"});
  };
  report.chain_min_plus = chain("min-plus");
  report.chain_max_plus = chain("max-plus");
  return report;
}

}  // namespace wa
