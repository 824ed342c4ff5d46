#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wa/corpus.hpp"
#include "wa/hierarchy.hpp"
#include "wa/properties.hpp"
#include "wa/pumping.hpp"

namespace wa::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) hash_ = (hash_ ^ c) * 1099511628211ULL;
    hash_ = (hash_ ^ 0xff) * 1099511628211ULL;
  }
  std::string hex() const {
    std::ostringstream s;
    s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << hash_;
    return s.str();
  }

 private:
  std::uint64_t hash_ = 1469598103934665603ULL;
};

Json weight_json(const Weight& w) {
  if (w.is_infinite()) return "inf";
  if (w.value() <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(w.value());
  return w.value().str();
}

Json weights_json(const std::vector<Weight>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(weight_json(w));
  return a;
}

Json set_json(const PumpSet& s) { return Json(std::vector<std::size_t>(s.begin(), s.end())); }

struct Context {
  std::ostream& out;
  std::ostream& err;
  Digest digest;
  bool pretty = false;
};

WeightedAutomaton resolve_automaton(Context& ctx, const std::string& ref) {
  ctx.digest.add(ref);
  if (corpus::has_entry(ref)) return *corpus::build(ref).automaton;
  std::ifstream in(ref, std::ios::binary);
  if (!in) throw ContractError("'" + ref + "' is neither a corpus entry nor a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  ctx.digest.add(buf.str());
  return parse_automaton(buf.str());
}

Json run_json(const WeightedAutomaton& a, const std::vector<StateId>& states, const Word& word) {
  Json states_json = Json::array();
  for (StateId q : states) states_json.push_back(a.states()[q]);
  return Json{{"path", format_run(a, states, word)}, {"states", states_json}};
}

void emit(Context& ctx, const std::string& command, Json result, std::chrono::steady_clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["inputs_digest"] = ctx.digest.hex();
  report["result"] = std::move(result);
  report["timing_ms"] = std::round(ms * 1000.0) / 1000.0;
  ctx.out << report.dump(2) << "\n";
}

// ----- pump-check -----

struct PumpArgs {
  std::string automaton;
  std::string oracle;
  std::vector<std::string> min_parts;
  std::vector<std::string> max_parts;
  std::string rep;
  std::string sets;
  std::string partition;
  std::string phi;
  std::string mode;
  std::size_t horizon = 64;
  std::size_t window = 8;
  std::size_t n_constant = 1;
  bool all_refinements = false;
  std::size_t max_refinements = 10000;
};

FunctionHandle resolve_function(Context& ctx, const PumpArgs& a) {
  const int sources = !a.automaton.empty() + !a.oracle.empty() + !a.min_parts.empty() + !a.max_parts.empty();
  if (sources != 1) throw ContractError("give exactly one of: an automaton, --oracle, --min ..., --max ...");
  if (!a.oracle.empty()) {
    ctx.digest.add("oracle:" + a.oracle);
    return corpus::oracle(a.oracle);
  }
  if (!a.automaton.empty()) return FunctionHandle::automaton(resolve_automaton(ctx, a.automaton), a.automaton);
  const bool is_min = !a.min_parts.empty();
  std::vector<WeightedAutomaton> parts;
  std::string name = is_min ? "min(" : "max(";
  for (const auto& ref : is_min ? a.min_parts : a.max_parts) {
    parts.push_back(resolve_automaton(ctx, ref));
    name += (name.back() == '(' ? "" : ",") + ref;
  }
  name += ")";
  return is_min ? FunctionHandle::finite_min(std::move(parts), name)
                : FunctionHandle::finite_max(std::move(parts), name);
}

Json splits_json(const PumpingRepresentation& rep, const std::vector<FactorSplit>& splits) {
  Json a = Json::array();
  for (std::size_t k = 0; k < splits.size(); ++k)
    a.push_back(Json{{"factor", k + 1},
                     {"offset", splits[k].offset},
                     {"length", splits[k].length},
                     {"y", rep.v(k + 1).substr(splits[k].offset, splits[k].length)}});
  return a;
}

Json report_json(const PumpingRepresentation& rep, const RefinementReport& r) {
  Json evidence = Json::array();
  for (const auto& w : r.evidence) {
    Json e{{"clause", w.clause}, {"set", set_json(w.set)}};
    if (w.index) {
      e["i"] = *w.index;
      e["values"] = weights_json(w.values);
    }
    if (w.delta) e["delta"] = w.delta->str();
    if (w.delta_sum) e["delta_sum"] = w.delta_sum->str();
    if (!w.note.empty()) e["note"] = w.note;
    evidence.push_back(std::move(e));
  }
  return Json{{"splits", splits_json(rep, r.splits)}, {"refined", r.refined}, {"evidence", evidence}};
}

Json verdict_json(const PumpingRepresentation& rep, const Verdict& v) {
  Json j;
  j["verdict"] = std::string(to_string(v.kind));
  j["holds"] = holds(v.kind);
  if (!v.indices.empty()) j["indices"] = v.indices;
  if (!v.selection.empty()) j["selection"] = set_json(v.selection);
  j["refinements"] = Json{
      {"checked", v.refinements_checked}, {"total", v.refinements_total.str()}, {"exhaustive", v.exhaustive}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.refinement) j["refinement"] = report_json(rep, *v.refinement);
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(report_json(rep, w));
  j["witnesses"] = witnesses;
  Json tables = Json::array();
  for (const auto& t : v.tables) tables.push_back(Json{{"set", set_json(t.set)}, {"values", weights_json(t.values)}});
  j["tables"] = tables;
  return j;
}

int verdict_exit(VerdictKind k) {
  if (k == VerdictKind::Violated) return kViolated;
  if (k == VerdictKind::NotStabilized) return kNotStabilized;
  return kOk;
}

void pretty_verdict(std::ostream& err, const std::string& lemma, const Verdict& v) {
  err << "lemma " << lemma << ": " << to_string(v.kind) << " (" << v.refinements_checked << " of "
      << v.refinements_total.str() << " refinements" << (v.exhaustive ? ", exhaustive" : "") << ")\n";
  const RefinementReport* shown = v.refinement ? &*v.refinement : (v.witnesses.empty() ? nullptr : &v.witnesses[0]);
  if (shown) {
    err << "  refinement " << shown->refined << "\n";
    for (const auto& w : shown->evidence) {
      err << "  " << std::setw(28) << std::left << w.clause << " " << to_string(w.set);
      if (w.index) err << "  i=" << *w.index << "  f=" << w.values[0].to_string() << "," << w.values[1].to_string();
      if (w.delta) err << "  delta=" << w.delta->str() << " sum=" << w.delta_sum->str();
      if (!w.note.empty()) err << "  " << w.note;
      err << "\n";
    }
  }
  if (!v.reason.empty()) err << "  reason: " << v.reason << "\n";
}

int pump_check(Context& ctx, const std::string& variant, const PumpArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("pump-check " + variant);
  const FunctionHandle f = resolve_function(ctx, a);
  if (a.rep.empty()) throw ContractError("--rep is required");
  const auto rep = PumpingRepresentation::parse(a.rep);
  CheckOptions opt;
  opt.horizon = a.horizon;
  opt.window = a.window;
  opt.N = a.n_constant;
  opt.all_refinements = a.all_refinements;
  opt.max_refinements = a.max_refinements;
  if (!a.mode.empty()) {
    if (a.mode == "slope")
      opt.mode = TailMode::Slope;
    else if (a.mode == "comparison")
      opt.mode = TailMode::Comparison;
    else
      throw ContractError("--mode must be 'slope' or 'comparison'");
  }
  if (!a.phi.empty()) {
    std::vector<Natural> coefficients;
    std::stringstream s(a.phi);
    for (std::string item; std::getline(s, item, ',');) coefficients.push_back(Natural(item));
    opt.phi = phi_from_polynomial(coefficients);
  }
  for (const auto& text : {a.rep, a.sets, a.partition, a.phi, a.mode}) ctx.digest.add(text);
  ctx.digest.add(std::to_string(a.horizon) + "/" + std::to_string(a.window) + "/" + std::to_string(a.n_constant) +
                 "/" + std::to_string(a.all_refinements) + "/" + std::to_string(a.max_refinements));

  Verdict v;
  Json sets_json = Json::array();
  if (variant == "nat") {
    if (rep.n() != 1) throw ContractError("the nat lemma takes a representation with exactly one pumped factor");
    v = check_nat_plus_times(f, rep.u(0), rep.v(1), rep.u(1), opt);
  } else {
    const bool partitioned = variant == "pa-min" || variant == "pa-max";
    const std::string& text = partitioned ? a.partition : a.sets;
    if (text.empty()) throw ContractError(partitioned ? "--partition is required" : "--sets is required");
    const auto sets = parse_sets(text, rep.n());
    for (const auto& s : sets) sets_json.push_back(set_json(s));
    if (variant == "finmin") v = check_finite_min(f, rep, sets, opt);
    if (variant == "pa-min") v = check_pa_minplus(f, rep, sets, opt);
    if (variant == "fa-max") v = check_fa_maxplus(f, rep, sets, opt);
    if (variant == "pa-max") v = check_pa_maxplus(f, rep, sets, opt);
  }

  Json result;
  result["lemma"] = variant;
  result["function"] = Json{{"name", f.name()},
                            {"backing", std::string(to_string(f.backing()))},
                            {"semiring", std::string(to_string(f.tag()))}};
  result["representation"] = rep.to_string();
  if (!sets_json.empty()) result["sets"] = sets_json;
  result["options"] = Json{{"horizon", opt.horizon},
                           {"window", opt.window},
                           {"N", opt.N},
                           {"all_refinements", opt.all_refinements},
                           {"max_refinements", opt.max_refinements}};
  result.update(verdict_json(rep, v));
  if (ctx.pretty) pretty_verdict(ctx.err, variant, v);
  emit(ctx, "pump-check " + variant, std::move(result), start);
  return verdict_exit(v.kind);
}

// ----- other commands -----

int cmd_eval(Context& ctx, const std::string& ref, const std::string& word) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("eval");
  const auto a = resolve_automaton(ctx, ref);
  ctx.digest.add(word);
  const Weight value = evaluate(a, word);
  if (ctx.pretty) ctx.err << ref << "('" << word << "') = " << value.to_string() << "\n";
  emit(ctx, "eval",
       Json{{"automaton", ref}, {"semiring", std::string(to_string(a.tag()))}, {"word", word},
            {"value", weight_json(value)}},
       start);
  return kOk;
}

int cmd_runs(Context& ctx, const std::string& ref, const std::string& word, std::size_t limit) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("runs");
  const auto a = resolve_automaton(ctx, ref);
  ctx.digest.add(word + "/" + std::to_string(limit));
  const auto runs = enumerate_runs(a, word, limit);
  Json list = Json::array();
  for (const auto& r : runs) {
    Json j = run_json(a, r.states, word);
    j["weight"] = weight_json(r.weight);
    list.push_back(std::move(j));
    if (ctx.pretty) ctx.err << format_run(a, r.states, word) << "  weight " << r.weight.to_string() << "\n";
  }
  emit(ctx, "runs",
       Json{{"automaton", ref},
            {"word", word},
            {"count", count_runs(a, word).str()},
            {"value", weight_json(evaluate(a, word))},
            {"runs", list}},
       start);
  return kOk;
}

int cmd_classify(Context& ctx, const std::string& ref) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("classify");
  const auto a = resolve_automaton(ctx, ref);
  const auto t = trim(a);
  const auto c = classify_with_certificate(t);
  Json result{{"automaton", ref},
              {"states", a.size()},
              {"trimmed_states", t.size()},
              {"class", std::string(to_string(c.cls))}};
  Json cert = nullptr;
  if (c.eda) {
    cert = Json{{"kind", "eda"},
                {"state", t.states()[c.eda->p]},
                {"word", c.eda->word},
                {"runs", {format_run(t, c.eda->first, c.eda->word), format_run(t, c.eda->second, c.eda->word)}}};
  } else if (c.ida) {
    cert = Json{{"kind", "ida"},
                {"p", t.states()[c.ida->p]},
                {"q", t.states()[c.ida->q]},
                {"word", c.ida->word},
                {"runs",
                 {format_run(t, c.ida->loop_p, c.ida->word), format_run(t, c.ida->bridge, c.ida->word),
                  format_run(t, c.ida->loop_q, c.ida->word)}}};
  } else if (c.ambiguity) {
    cert = Json{{"kind", "two-runs"},
                {"word", c.ambiguity->word},
                {"runs",
                 {format_run(t, c.ambiguity->first, c.ambiguity->word),
                  format_run(t, c.ambiguity->second, c.ambiguity->word)}}};
  }
  result["certificate"] = cert;
  if (ctx.pretty) {
    ctx.err << ref << ": " << to_string(c.cls) << "\n";
    if (!cert.is_null())
      for (const auto& r : cert["runs"]) ctx.err << "  " << r.get<std::string>() << "\n";
  }
  emit(ctx, "classify", std::move(result), start);
  return kOk;
}

int cmd_factorize(Context& ctx, const std::string& ref, const std::string& oracle, const std::string& word) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("factorize");
  if (ref.empty() == oracle.empty()) throw ContractError("give either an automaton or --oracle");
  LetterMonoid m = LetterMonoid::trivial("");
  if (!oracle.empty()) {
    ctx.digest.add("oracle:" + oracle);
    m = corpus::oracle(oracle).monoid();
  } else {
    m = LetterMonoid::of(resolve_automaton(ctx, ref));
  }
  ctx.digest.add(word);
  const auto [i, j] = factorize_idempotent(m, word);
  Json all = Json::array();
  for (const auto& s : idempotent_infixes(m, word)) all.push_back({s.offset, s.offset + s.length});
  Json result{{"source", ref.empty() ? oracle : ref},
              {"word", word},
              {"i", i},
              {"j", j},
              {"x", word.substr(0, i)},
              {"y", word.substr(i, j - i)},
              {"z", word.substr(j)},
              {"monoid_dimension", m.dim()},
              {"idempotent_infixes", all}};
  if (ctx.pretty) ctx.err << word.substr(0, i) << "(" << word.substr(i, j - i) << ")" << word.substr(j) << "\n";
  emit(ctx, "factorize", std::move(result), start);
  return kOk;
}

int cmd_hierarchy(Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("hierarchy");
  const auto h = run_hierarchy();
  Json rows = Json::array();
  bool unstable = false, unexpected = false;
  for (const auto& r : h.rows) {
    const auto rep = PumpingRepresentation::parse(r.representation);
    Json row{{"semiring", r.semiring},
             {"function", r.function},
             {"automaton", r.automaton},
             {"automaton_class", std::string(to_string(r.automaton_class))},
             {"automaton_agrees_with_oracle", r.automaton_agrees},
             {"lemma", r.lemma},
             {"representation", r.representation},
             {"sets", r.sets},
             {"verdict", std::string(to_string(r.verdict.kind))},
             {"expected", "Violated"},
             {"as_expected", r.as_expected()},
             {"separation", r.separation},
             {"conclusion", r.conclusion},
             {"refinements",
              {{"checked", r.verdict.refinements_checked},
               {"total", r.verdict.refinements_total.str()},
               {"exhaustive", r.verdict.exhaustive}}}};
    Json witnesses = Json::array();
    for (const auto& w : r.verdict.witnesses) {
      witnesses.push_back(report_json(rep, w));
      if (witnesses.size() == 2) break;
    }
    row["witnesses"] = witnesses;
    rows.push_back(std::move(row));
    unstable = unstable || r.verdict.kind == VerdictKind::NotStabilized;
    unexpected = unexpected || !r.as_expected();
  }
  if (ctx.pretty) {
    ctx.err << std::left << std::setw(10) << "semiring" << std::setw(5) << "f" << std::setw(5) << "WA" << std::setw(24)
            << "class" << std::setw(8) << "lemma" << std::setw(11) << "verdict" << "separation\n";
    for (const auto& r : h.rows)
      ctx.err << std::setw(10) << r.semiring << std::setw(5) << r.function << std::setw(5) << r.automaton
              << std::setw(24) << to_string(r.automaton_class) << std::setw(8) << r.lemma << std::setw(11)
              << to_string(r.verdict.kind) << r.separation << (r.as_expected() ? "" : "  (unexpected)") << "\n";
    ctx.err << "min-plus chain U-WA < FA-WA < PA-WA < WA: " << (h.chain_min_plus ? "established" : "NOT established")
            << "\nmax-plus chain U-WA < FA-WA < PA-WA < WA: " << (h.chain_max_plus ? "established" : "NOT established")
            << "\n";
  }
  emit(ctx, "hierarchy",
       Json{{"rows", rows},
            {"chain", {{"min-plus", h.chain_min_plus}, {"max-plus", h.chain_max_plus}}},
            {"statement", "U-WA < FA-WA < PA-WA < WA"}},
       start);
  if (unstable) return kNotStabilized;
  if (unexpected || !h.chain_min_plus || !h.chain_max_plus) return kUnexpectedHolds;
  return kOk;
}

int cmd_corpus_list(Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("corpus list");
  Json entries = Json::array();
  for (const auto& name : corpus::names()) {
    const auto e = corpus::build(name);
    entries.push_back(Json{{"name", e.name},
                           {"semiring", std::string(to_string(e.tag))},
                           {"states", e.automaton->size()},
                           {"alphabet", e.automaton->alphabet()},
                           {"oracle", e.oracle},
                           {"expected_class", std::string(to_string(*e.expected_class))},
                           {"description", e.description}});
    if (ctx.pretty) ctx.err << std::left << std::setw(5) << e.name << " " << e.description << "\n";
  }
  emit(ctx, "corpus list", Json{{"entries", entries}, {"oracles", corpus::oracle_names()}}, start);
  return kOk;
}

int cmd_properties(Context& ctx, std::uint64_t seed, std::size_t cases) {
  const auto start = std::chrono::steady_clock::now();
  ctx.digest.add("properties " + std::to_string(seed) + "/" + std::to_string(cases));
  Json list = Json::array();
  std::size_t failures = 0;
  for (const auto& r : run_properties(seed, cases)) {
    Json j{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    list.push_back(std::move(j));
    failures += r.failures;
    if (ctx.pretty)
      ctx.err << std::left << std::setw(28) << r.name << r.cases - r.failures << "/" << r.cases << " passed\n";
  }
  emit(ctx, "properties", Json{{"seed", seed}, {"properties", list}, {"failures", failures}}, start);
  return failures == 0 ? kOk : kViolated;
}

std::string command_path(const CLI::App& app) {
  std::string path;
  for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
    a = a->get_subcommands().front();
    path += (path.empty() ? "" : " ") + a->get_name();
  }
  return path;
}

void emit_error(Context& ctx, const CLI::App& app, const std::string& kind, const std::string& message,
                std::optional<std::size_t> line = std::nullopt, std::optional<std::size_t> column = std::nullopt) {
  ctx.err << kind << ": " << message << "\n";
  Json error{{"kind", kind}, {"message", message}};
  if (line) {
    error["line"] = *line;
    error["column"] = *column;
  }
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command_path(app);
  report["inputs_digest"] = ctx.digest.hex();
  report["error"] = std::move(error);
  ctx.out << report.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted automata over tropical and natural semirings: evaluation, ambiguity, pumping checks"};
  app.require_subcommand(1);
  Context ctx{out, err, {}, false};
  app.add_flag("--pretty", ctx.pretty, "Human-readable tables on standard error");

  std::string automaton, word, oracle;
  std::size_t limit = 12;
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  PumpArgs pump;

  auto* eval = app.add_subcommand("eval", "Evaluate an automaton on a word");
  eval->add_option("automaton", automaton, "Automaton file or corpus name")->required();
  eval->add_option("word", word, "Input word (may be empty)")->required();

  auto* runs = app.add_subcommand("runs", "Enumerate accepting runs");
  runs->add_option("automaton", automaton, "Automaton file or corpus name")->required();
  runs->add_option("word", word, "Input word")->required();
  runs->add_option("--limit", limit, "Maximal word length for enumeration")->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Ambiguity class of the trimmed automaton");
  cls->add_option("automaton", automaton, "Automaton file or corpus name")->required();

  auto* fact = app.add_subcommand("factorize", "Shortest idempotent infix of a word");
  fact->add_option("automaton", automaton, "Automaton file or corpus name");
  fact->add_option("--word", word, "Word to factorize")->required();
  fact->add_option("--oracle", oracle, "Use the trivial monoid of an oracle");

  auto* pc = app.add_subcommand("pump-check", "Run one of the pumping lemma checkers");
  pc->require_subcommand(1);
  for (const char* variant : {"nat", "finmin", "pa-min", "fa-max", "pa-max"}) {
    auto* s = pc->add_subcommand(variant);
    s->add_option("automaton", pump.automaton, "Automaton file or corpus name");
    s->add_option("--oracle", pump.oracle, "Native definition (f1..f6, g2..g6)");
    s->add_option("--min", pump.min_parts, "Component of a finite min (repeatable)");
    s->add_option("--max", pump.max_parts, "Component of a finite max (repeatable)");
    s->add_option("--rep", pump.rep, "Representation, e.g. 'aaaa [bbb]'")->required();
    s->add_option("--sets", pump.sets, "Sets such as '1,3;2,4'");
    s->add_option("--partition", pump.partition, "Partition such as '1,2;3,4'");
    s->add_option("--phi", pump.phi, "Ambiguity polynomial coefficients (constant first) defining phi");
    s->add_option("--mode", pump.mode, "Tail reading: slope or comparison");
    s->add_option("--horizon", pump.horizon, "Largest pumping exponent")->capture_default_str();
    s->add_option("--window", pump.window, "Tail window")->capture_default_str();
    s->add_option("--N", pump.n_constant, "Lemma constant N")->capture_default_str();
    s->add_flag("--all-refinements", pump.all_refinements, "Quantify over all idempotent refinements");
    s->add_option("--max-refinements", pump.max_refinements, "Refinement cap")->capture_default_str();
  }

  auto* hier = app.add_subcommand("hierarchy", "Run the separating examples of the ambiguity hierarchy");

  auto* corp = app.add_subcommand("corpus", "Built-in automata");
  corp->require_subcommand(1);
  auto* list = corp->add_subcommand("list", "List corpus entries");
  auto* emit_cmd = corp->add_subcommand("emit", "Print an entry in the automaton file format");
  emit_cmd->add_option("name", automaton, "Corpus name")->required();

  auto* props = app.add_subcommand("properties", "Randomised property batteries");
  props->add_option("--seed", seed, "Random seed")->capture_default_str();
  props->add_option("--cases", cases, "Cases per property")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    for (int i = 1; i < argc; ++i) ctx.digest.add(argv[i]);
    if (*eval) return cmd_eval(ctx, automaton, word);
    if (*runs) return cmd_runs(ctx, automaton, word, limit);
    if (*cls) return cmd_classify(ctx, automaton);
    if (*fact) return cmd_factorize(ctx, automaton, oracle, word);
    if (*pc)
      for (auto* s : pc->get_subcommands()) return pump_check(ctx, s->get_name(), pump);
    if (*hier) return cmd_hierarchy(ctx);
    if (*list) return cmd_corpus_list(ctx);
    if (*emit_cmd) {
      out << to_text(*corpus::build(automaton).automaton);
      return kOk;
    }
    if (*props) return cmd_properties(ctx, seed, cases);
  } catch (const ParseError& e) {
    emit_error(ctx, app, "parse-error", e.what(), e.line(), e.column());
    return kParseError;
  } catch (const NotStabilized& e) {
    emit_error(ctx, app, "not-stabilized", e.what());
    return kNotStabilized;
  } catch (const Error& e) {
    emit_error(ctx, app, "contract-error", e.what());
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace wa::cli
