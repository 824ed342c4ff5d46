#include "wa/checkers.hpp"

#include <map>
#include <set>

namespace wa {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::HoldsEqual: return "HoldsEqual";
    case VerdictKind::HoldsStrict: return "HoldsStrict";
    case VerdictKind::HoldsStrictSingle: return "HoldsStrictSingle";
    case VerdictKind::HoldsEqualUnion: return "HoldsEqualUnion";
    case VerdictKind::HoldsEqualBlock: return "HoldsEqualBlock";
    case VerdictKind::HoldsStrictSelection: return "HoldsStrictSelection";
    case VerdictKind::HoldsNonDecomposable: return "HoldsNonDecomposable";
    case VerdictKind::HoldsCrossDecomposable: return "HoldsCrossDecomposable";
    case VerdictKind::HoldsDecomposableBlock: return "HoldsDecomposableBlock";
    case VerdictKind::HoldsNonDecompSelection: return "HoldsNonDecompSelection";
    case VerdictKind::Violated: return "Violated";
    case VerdictKind::NotStabilized: return "NotStabilized";
  }
  return "?";
}

bool holds(VerdictKind k) { return k != VerdictKind::Violated && k != VerdictKind::NotStabilized; }

std::vector<std::vector<FactorSplit>> refinement_options(const LetterMonoid& m, const PumpingRepresentation& rep,
                                                         bool all) {
  std::vector<std::vector<FactorSplit>> out;
  for (std::size_t k = 1; k <= rep.n(); ++k) {
    const Word& v = rep.v(k);
    auto infixes = idempotent_infixes(m, v);
    if (infixes.empty())
      throw NoIdempotentInfix(k, "pumped factor " + std::to_string(k) + " ('" + v + "') has no idempotent infix");
    if (!all) infixes.resize(1);
    std::vector<FactorSplit> kept;
    std::set<Word> keys;
    for (const auto& s : infixes) {
      const Word y = v.substr(s.offset, s.length);
      if (keys.insert(v.substr(0, s.offset) + y + y + v.substr(s.offset + s.length)).second) kept.push_back(s);
    }
    out.push_back(std::move(kept));
  }
  return out;
}

namespace {

enum class Status { Holds, Violated, Undetermined };

struct Outcome {
  Status status = Status::Violated;
  VerdictKind kind = VerdictKind::Violated;
  std::vector<std::size_t> indices;
  PumpSet selection;
  std::vector<ClauseWitness> evidence;
  std::string reason;

  void undetermined(const std::string& why) {
    if (status == Status::Violated) {
      status = Status::Undetermined;
      reason = why;
    }
  }
};

// Walks the refinement space and memoises the eventual behaviour of each set,
// keyed by the splits of the factors the set pumps (the others stay intact).
class Engine {
 public:
  Engine(const FunctionHandle& f, const PumpingRepresentation& rep, const CheckOptions& opt, TailMode mode)
      : f_(f), rep_(rep), opt_(opt), mode_(mode) {
    if (opt.window < 2 || opt.horizon < opt.window) throw ContractError("require horizon >= window >= 2");
    options_ = refinement_options(f.monoid(), rep, opt.all_refinements);
    total_ = 1;
    for (const auto& o : options_) total_ *= o.size();
    choice_.assign(rep.n(), 0);
  }

  const Natural& total() const { return total_; }

  void select(std::size_t index) {
    for (std::size_t k = rep_.n(); k-- > 0;) {
      choice_[k] = index % options_[k].size();
      index /= options_[k].size();
    }
  }

  std::vector<FactorSplit> splits() const {
    std::vector<FactorSplit> s;
    for (std::size_t k = 0; k < rep_.n(); ++k) s.push_back(options_[k][choice_[k]]);
    return s;
  }

  RefinedRepresentation refined() const { return RefinedRepresentation(rep_, splits()); }

  const EventualBehavior& behavior(const PumpSet& s) {
    std::vector<std::size_t> key_choice;
    for (std::size_t k : s) key_choice.push_back(choice_[k - 1]);
    auto key = std::make_pair(s, key_choice);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      auto values = f_.pumped_values(refined(), s, opt_.horizon);
      it = cache_.emplace(key, classify_tail(std::move(values), opt_.window, mode_)).first;
    }
    return it->second;
  }

  const CheckOptions& options() const { return opt_; }
  SemiringTag tag() const { return f_.tag(); }

 private:
  const FunctionHandle& f_;
  const PumpingRepresentation& rep_;
  const CheckOptions& opt_;
  TailMode mode_;
  std::vector<std::vector<FactorSplit>> options_;
  Natural total_;
  std::vector<std::size_t> choice_;
  std::map<std::pair<PumpSet, std::vector<std::size_t>>, EventualBehavior> cache_;
};

ClauseWitness witness_at(std::string clause, const PumpSet& s, const EventualBehavior& b) {
  ClauseWitness w;
  w.clause = std::move(clause);
  w.set = s;
  if (b.trend != Trend::NotStabilized) {
    const std::size_t i = std::min(b.onset, b.horizon - 1);
    w.index = i;
    w.values = {b.values[i], b.values[i + 1]};
  } else {
    w.note = b.reason;
  }
  return w;
}

// Undetermined reading of a max-plus behaviour, if any.
std::optional<std::string> maxplus_problem(const EventualBehavior& b, const PumpSet& s) {
  if (b.values.back().is_zero()) return "set " + to_string(s) + ": f returns -inf on pumped words";
  if (b.trend == Trend::NotStabilized) return "set " + to_string(s) + " is not linear at this horizon: " + b.reason;
  return std::nullopt;
}

void require_long_factors(const PumpingRepresentation& rep, std::size_t n) {
  for (std::size_t k = 1; k <= rep.n(); ++k)
    if (rep.v(k).size() < n)
      throw ContractError("pumped factor " + std::to_string(k) + " is shorter than N = " + std::to_string(n));
}

template <typename Eval>
Verdict drive(std::string lemma, Engine& engine, Eval eval) {
  const CheckOptions& opt = engine.options();
  Verdict v;
  v.lemma = std::move(lemma);
  v.refinements_total = engine.total();
  const Natural cap = opt.max_refinements;
  const std::size_t count = static_cast<std::size_t>(engine.total() < cap ? engine.total() : cap);
  v.exhaustive = Natural(count) == engine.total();

  std::optional<RefinementReport> undetermined;
  std::string undetermined_reason;
  std::optional<std::vector<ValueTable>> first_tables;

  auto tables_for = [&](const std::vector<ClauseWitness>& evidence) {
    std::vector<ValueTable> tables;
    std::set<PumpSet> seen;
    for (const auto& w : evidence)
      if (seen.insert(w.set).second) tables.push_back(ValueTable{w.set, engine.behavior(w.set).values});
    return tables;
  };

  for (std::size_t r = 0; r < count; ++r) {
    engine.select(r);
    Outcome out = eval(engine);
    RefinementReport report{engine.splits(), engine.refined().to_string(), out.evidence};
    if (out.status == Status::Holds) {
      v.kind = out.kind;
      v.indices = out.indices;
      v.selection = out.selection;
      v.tables = tables_for(out.evidence);
      v.refinement = std::move(report);
      v.refinements_checked = r + 1;
      return v;
    }
    if (!first_tables) first_tables = tables_for(out.evidence);
    if (out.status == Status::Undetermined) {
      if (!undetermined) {
        undetermined = std::move(report);
        undetermined_reason = out.reason;
      }
    } else if (v.witnesses.size() < opt.max_witnesses) {
      v.witnesses.push_back(std::move(report));
    }
  }
  v.refinements_checked = count;
  if (first_tables) v.tables = std::move(*first_tables);
  if (undetermined) {
    v.kind = VerdictKind::NotStabilized;
    v.refinement = std::move(undetermined);
    v.reason = undetermined_reason;
  } else {
    v.kind = VerdictKind::Violated;
  }
  return v;
}

bool strictly_less(const Weight& a, const Weight& b) { return !sr_leq(b, a); }

std::size_t max_block(const std::vector<PumpSet>& blocks) {
  std::size_t l = 0;
  for (const auto& b : blocks) l = std::max(l, b.size());
  return l;
}

void require_phi(const CheckOptions& opt, const std::vector<PumpSet>& partition) {
  const std::size_t l = max_block(partition);
  const std::size_t need = opt.phi(l);
  if (partition.size() < need)
    throw ContractError("partition has " + std::to_string(partition.size()) + " blocks; phi(" + std::to_string(l) +
                        ") = " + std::to_string(need) + " are required");
}

}  // namespace

Verdict check_nat_plus_times(const FunctionHandle& f, const Word& u, const Word& v, const Word& w,
                             const CheckOptions& opt) {
  if (v.empty()) throw ContractError("the pumped factor must be non-empty");
  if (v.size() < opt.N) throw ContractError("|v| must be at least N = " + std::to_string(opt.N));
  if (opt.horizon <= opt.N) throw ContractError("horizon must exceed N");
  PumpingRepresentation rep({u, w}, {v});
  Engine engine(f, rep, opt, TailMode::Comparison);
  const PumpSet s{1};
  return drive("nat", engine, [&](Engine& e) {
    Outcome out;
    const auto& b = e.behavior(s);
    const auto& vals = b.values;
    std::optional<std::size_t> equal_fail, strict_fail;
    for (std::size_t i = opt.N; i < opt.horizon; ++i) {
      if (!equal_fail && !(vals[i] == vals[i + 1])) equal_fail = i;
      if (!strict_fail && !strictly_less(vals[i], vals[i + 1])) strict_fail = i;
    }
    auto evidence = [&](const char* clause, std::optional<std::size_t> at) {
      ClauseWitness cw;
      cw.clause = clause;
      cw.set = s;
      if (at) {
        cw.index = *at;
        cw.values = {vals[*at], vals[*at + 1]};
      }
      return cw;
    };
    if (!equal_fail) {
      out.status = Status::Holds;
      out.kind = VerdictKind::HoldsEqual;
      out.evidence.push_back(evidence("equal", std::nullopt));
      return out;
    }
    if (!strict_fail) {
      out.status = Status::Holds;
      out.kind = VerdictKind::HoldsStrict;
      out.evidence.push_back(evidence("strict", std::nullopt));
      return out;
    }
    out.evidence.push_back(evidence("equal", equal_fail));
    out.evidence.push_back(evidence("strict", strict_fail));
    if (b.trend == Trend::NotStabilized) out.undetermined("tail not stabilized: " + b.reason);
    return out;
  });
}

Verdict check_finite_min(const FunctionHandle& f, const PumpingRepresentation& rep, const std::vector<PumpSet>& sets,
                         const CheckOptions& opt) {
  validate_distinct_sets(sets, rep.n());
  if (sets.size() < opt.N) throw ContractError("at least N = " + std::to_string(opt.N) + " sets are required");
  require_long_factors(rep, opt.N);
  Engine engine(f, rep, opt, opt.mode.value_or(TailMode::Comparison));
  return drive("finmin", engine, [&](Engine& e) {
    Outcome out;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const auto& b = e.behavior(sets[j]);
      if (b.trend == Trend::StrictIncrease) {
        out.status = Status::Holds;
        out.kind = VerdictKind::HoldsStrictSingle;
        out.indices = {j + 1};
        out.evidence = {witness_at("strict-single", sets[j], b)};
        return out;
      }
      if (b.trend == Trend::NotStabilized) out.undetermined("set " + to_string(sets[j]) + ": " + b.reason);
      out.evidence.push_back(witness_at("strict-single", sets[j], b));
    }
    for (std::size_t j1 = 0; j1 < sets.size(); ++j1)
      for (std::size_t j2 = j1 + 1; j2 < sets.size(); ++j2) {
        const PumpSet s = unite(sets[j1], sets[j2]);
        const auto& b = e.behavior(s);
        ClauseWitness w = witness_at("equal-union", s, b);
        w.note = "S" + std::to_string(j1 + 1) + " u S" + std::to_string(j2 + 1);
        if (b.trend == Trend::Equal) {
          out = Outcome{};
          out.status = Status::Holds;
          out.kind = VerdictKind::HoldsEqualUnion;
          out.indices = {j1 + 1, j2 + 1};
          out.evidence = {w};
          return out;
        }
        if (b.trend == Trend::NotStabilized) out.undetermined("set " + to_string(s) + ": " + b.reason);
        out.evidence.push_back(w);
      }
    return out;
  });
}

Verdict check_pa_minplus(const FunctionHandle& f, const PumpingRepresentation& rep,
                         const std::vector<PumpSet>& partition, const CheckOptions& opt) {
  validate_partition(partition, rep.n());
  require_phi(opt, partition);
  require_long_factors(rep, opt.N);
  const auto selections = selection_sets(partition);
  Engine engine(f, rep, opt, opt.mode.value_or(TailMode::Slope));
  return drive("pa-min", engine, [&](Engine& e) {
    Outcome out;
    for (std::size_t j = 0; j < partition.size(); ++j) {
      const auto& b = e.behavior(partition[j]);
      if (b.trend == Trend::Equal) {
        out.status = Status::Holds;
        out.kind = VerdictKind::HoldsEqualBlock;
        out.indices = {j + 1};
        out.evidence = {witness_at("equal-block", partition[j], b)};
        return out;
      }
      if (b.trend == Trend::NotStabilized) out.undetermined("block " + to_string(partition[j]) + ": " + b.reason);
      out.evidence.push_back(witness_at("equal-block", partition[j], b));
    }
    for (const auto& s : selections) {
      const auto& b = e.behavior(s);
      if (b.trend == Trend::StrictIncrease) {
        out = Outcome{};
        out.status = Status::Holds;
        out.kind = VerdictKind::HoldsStrictSelection;
        out.selection = s;
        out.evidence = {witness_at("strict-selection", s, b)};
        return out;
      }
      if (b.trend == Trend::NotStabilized) out.undetermined("selection " + to_string(s) + ": " + b.reason);
      out.evidence.push_back(witness_at("strict-selection", s, b));
    }
    return out;
  });
}

namespace {

// Delta of S and the sum of its singleton deltas, or the reason they are
// unavailable.
struct Decomposition {
  std::optional<std::string> problem;
  Natural delta = 0;
  Natural sum = 0;
  bool decomposable() const { return delta == sum; }
};

Decomposition decompose(Engine& e, const PumpSet& s) {
  Decomposition d;
  const auto& b = e.behavior(s);
  if (auto p = maxplus_problem(b, s)) {
    d.problem = p;
    return d;
  }
  d.delta = *b.slope;
  for (std::size_t k : s) {
    const auto& bk = e.behavior({k});
    if (auto p = maxplus_problem(bk, {k})) {
      d.problem = p;
      return d;
    }
    d.sum += *bk.slope;
  }
  return d;
}

ClauseWitness decomposition_witness(std::string clause, Engine& e, const PumpSet& s, const Decomposition& d) {
  ClauseWitness w = witness_at(std::move(clause), s, e.behavior(s));
  if (d.problem) {
    w.note = *d.problem;
  } else {
    w.delta = d.delta;
    w.delta_sum = d.sum;
  }
  return w;
}

void require_maxplus(const FunctionHandle& f) {
  if (f.tag() != SemiringTag::MaxPlus) throw ContractError("the max-plus lemmas need a max-plus function");
}

}  // namespace

Verdict check_fa_maxplus(const FunctionHandle& f, const PumpingRepresentation& rep, const std::vector<PumpSet>& sets,
                         const CheckOptions& opt) {
  require_maxplus(f);
  validate_distinct_sets(sets, rep.n());
  if (sets.size() < opt.N) throw ContractError("at least N = " + std::to_string(opt.N) + " sets are required");
  if (rep.n() < opt.N) throw ContractError("at least N = " + std::to_string(opt.N) + " pumped factors are required");
  require_long_factors(rep, opt.N);
  Engine engine(f, rep, opt, TailMode::Slope);
  return drive("fa-max", engine, [&](Engine& e) {
    Outcome out;
    for (std::size_t j = 0; j < sets.size(); ++j) {
      auto d = decompose(e, sets[j]);
      auto w = decomposition_witness("non-decomposable", e, sets[j], d);
      if (!d.problem && !d.decomposable()) {
        out.status = Status::Holds;
        out.kind = VerdictKind::HoldsNonDecomposable;
        out.indices = {j + 1};
        out.evidence = {w};
        return out;
      }
      if (d.problem) out.undetermined(*d.problem);
      out.evidence.push_back(w);
    }
    for (std::size_t j1 = 0; j1 < sets.size(); ++j1)
      for (std::size_t j2 = j1 + 1; j2 < sets.size(); ++j2) {
        std::optional<ClauseWitness> failure;
        std::optional<std::string> problem;
        std::vector<ClauseWitness> checked;
        for (std::size_t l1 : sets[j1]) {
          for (std::size_t l2 : sets[j2]) {
            if (l1 == l2) continue;
            const PumpSet pair = make_pump_set({l1, l2}, rep.n());
            auto d = decompose(e, pair);
            auto w = decomposition_witness("cross-decomposable", e, pair, d);
            w.note = "S" + std::to_string(j1 + 1) + " x S" + std::to_string(j2 + 1);
            if (d.problem) {
              if (!problem) problem = d.problem;
            } else if (!d.decomposable()) {
              failure = w;
              break;
            }
            checked.push_back(w);
          }
          if (failure) break;
        }
        if (!failure && !problem) {
          out = Outcome{};
          out.status = Status::Holds;
          out.kind = VerdictKind::HoldsCrossDecomposable;
          out.indices = {j1 + 1, j2 + 1};
          out.evidence = checked;
          return out;
        }
        if (failure) {
          out.evidence.push_back(*failure);
        } else {
          out.undetermined(*problem);
        }
      }
    return out;
  });
}

Verdict check_pa_maxplus(const FunctionHandle& f, const PumpingRepresentation& rep,
                         const std::vector<PumpSet>& partition, const CheckOptions& opt) {
  require_maxplus(f);
  validate_partition(partition, rep.n());
  require_phi(opt, partition);
  require_long_factors(rep, opt.N);
  const auto selections = selection_sets(partition);
  Engine engine(f, rep, opt, TailMode::Slope);
  return drive("pa-max", engine, [&](Engine& e) {
    Outcome out;
    for (std::size_t j = 0; j < partition.size(); ++j) {
      auto d = decompose(e, partition[j]);
      auto w = decomposition_witness("decomposable-block", e, partition[j], d);
      if (!d.problem && d.decomposable()) {
        out.status = Status::Holds;
        out.kind = VerdictKind::HoldsDecomposableBlock;
        out.indices = {j + 1};
        out.evidence = {w};
        return out;
      }
      if (d.problem) out.undetermined(*d.problem);
      out.evidence.push_back(w);
    }
    for (const auto& s : selections) {
      auto d = decompose(e, s);
      auto w = decomposition_witness("non-decomposable-selection", e, s, d);
      if (!d.problem && !d.decomposable()) {
        out = Outcome{};
        out.status = Status::Holds;
        out.kind = VerdictKind::HoldsNonDecompSelection;
        out.selection = s;
        out.evidence = {w};
        return out;
      }
      if (d.problem) out.undetermined(*d.problem);
      out.evidence.push_back(w);
    }
    return out;
  });
}

}  // namespace wa
