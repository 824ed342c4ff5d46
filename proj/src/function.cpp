#include "wa/function.hpp"

namespace wa {

LetterMonoid::LetterMonoid(std::string alphabet, std::size_t dim, std::vector<Matrix> letters)
    : alphabet_(std::move(alphabet)), dim_(dim), letters_(std::move(letters)) {}

LetterMonoid LetterMonoid::of(const WeightedAutomaton& a) { return block_diagonal({a}); }

LetterMonoid LetterMonoid::block_diagonal(const std::vector<WeightedAutomaton>& parts) {
  if (parts.empty()) throw ContractError("a monoid needs at least one automaton");
  const std::string& alphabet = parts.front().alphabet();
  for (const auto& p : parts)
    if (p.alphabet() != alphabet) throw ContractError("components disagree on the alphabet");
  std::vector<Matrix> letters;
  for (char c : alphabet) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(abstract_matrix(p.matrix(c)));
    letters.push_back(wa::block_diagonal(blocks));
  }
  const std::size_t dim = letters.front().dim();
  return LetterMonoid(alphabet, dim, std::move(letters));
}

LetterMonoid LetterMonoid::trivial(std::string alphabet) {
  std::vector<Matrix> letters(alphabet.size(), Matrix(SemiringTag::Bool, 0));
  return LetterMonoid(std::move(alphabet), 0, std::move(letters));
}

Matrix LetterMonoid::element(std::string_view word) const {
  const SemiringTag tag = letters_.empty() ? SemiringTag::Bool : letters_.front().tag();
  Matrix m = Matrix::identity(tag, dim_);
  for (char c : word) {
    auto pos = alphabet_.find(c);
    if (pos == std::string::npos) throw ContractError(std::string("letter '") + c + "' is not in the alphabet");
    m = mat_mul(m, letters_[pos]);
  }
  return m;
}

bool LetterMonoid::is_idempotent_word(std::string_view word) const {
  if (is_trivial()) return true;
  return is_idempotent(element(word));
}

std::vector<FactorSplit> idempotent_infixes(const LetterMonoid& m, std::string_view v) {
  std::vector<FactorSplit> out;
  for (std::size_t j = 1; j <= v.size(); ++j) {
    // Grow the infix leftwards: P = M_{v[i]} * P.
    Matrix p = m.element("");
    for (std::size_t i = j; i-- > 0;) {
      p = mat_mul(m.element(v.substr(i, 1)), p);
      if (m.is_trivial() || is_idempotent(p)) out.push_back(FactorSplit{i, j - i});
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> factorize_idempotent(const LetterMonoid& m, std::string_view v) {
  if (v.empty()) throw ContractError("cannot factorize the empty word");
  for (std::size_t j = 1; j <= v.size(); ++j) {
    Matrix p = m.element("");
    for (std::size_t i = j; i-- > 0;) {
      p = mat_mul(m.element(v.substr(i, 1)), p);
      if (m.is_trivial() || is_idempotent(p)) return {i, j};
    }
  }
  throw NoIdempotentInfix(0, "'" + std::string(v) + "' has no idempotent infix");
}

std::pair<std::size_t, std::size_t> factorize_idempotent(const WeightedAutomaton& a, std::string_view v) {
  return factorize_idempotent(LetterMonoid::of(a), v);
}

RefinedRepresentation refine_rep(const LetterMonoid& m, const PumpingRepresentation& rep) {
  std::vector<FactorSplit> splits;
  for (std::size_t k = 1; k <= rep.n(); ++k) {
    try {
      auto [i, j] = factorize_idempotent(m, rep.v(k));
      splits.push_back(FactorSplit{i, j - i});
    } catch (const NoIdempotentInfix&) {
      throw NoIdempotentInfix(k, "pumped factor " + std::to_string(k) + " ('" + rep.v(k) +
                                     "') has no idempotent infix");
    }
  }
  return RefinedRepresentation(rep, std::move(splits));
}

RefinedRepresentation refine_rep(const WeightedAutomaton& a, const PumpingRepresentation& rep) {
  return refine_rep(LetterMonoid::of(a), rep);
}

std::string_view to_string(FunctionHandle::Backing b) {
  switch (b) {
    case FunctionHandle::Backing::Automaton: return "automaton";
    case FunctionHandle::Backing::FiniteMin: return "finite-min";
    case FunctionHandle::Backing::FiniteMax: return "finite-max";
    case FunctionHandle::Backing::Oracle: return "oracle";
  }
  return "?";
}

FunctionHandle::FunctionHandle(Backing backing, SemiringTag tag, std::string name, std::string alphabet,
                               std::vector<WeightedAutomaton> parts, Evaluator eval)
    : backing_(backing),
      tag_(tag),
      name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      parts_(std::move(parts)),
      eval_(std::move(eval)) {}

FunctionHandle FunctionHandle::automaton(WeightedAutomaton a, std::string name) {
  SemiringTag tag = a.tag();
  std::string alphabet = a.alphabet();
  return FunctionHandle(Backing::Automaton, tag, std::move(name), std::move(alphabet), {std::move(a)}, {});
}

namespace {

void check_components(const std::vector<WeightedAutomaton>& parts, SemiringTag required) {
  if (parts.empty()) throw ContractError("a finite min/max needs at least one automaton");
  for (const auto& p : parts) {
    if (p.tag() != required)
      throw SemiringMismatch("component over " + std::string(to_string(p.tag())) + ", expected " +
                             std::string(to_string(required)));
    if (p.alphabet() != parts.front().alphabet()) throw ContractError("components disagree on the alphabet");
  }
}

}  // namespace

FunctionHandle FunctionHandle::finite_min(std::vector<WeightedAutomaton> parts, std::string name) {
  check_components(parts, SemiringTag::MinPlus);
  SemiringTag tag = parts.front().tag();
  std::string alphabet = parts.front().alphabet();
  return FunctionHandle(Backing::FiniteMin, tag, std::move(name), std::move(alphabet), std::move(parts), {});
}

FunctionHandle FunctionHandle::finite_max(std::vector<WeightedAutomaton> parts, std::string name) {
  check_components(parts, SemiringTag::MaxPlus);
  SemiringTag tag = parts.front().tag();
  std::string alphabet = parts.front().alphabet();
  return FunctionHandle(Backing::FiniteMax, tag, std::move(name), std::move(alphabet), std::move(parts), {});
}

FunctionHandle FunctionHandle::oracle(std::string name, SemiringTag tag, std::string alphabet, Evaluator eval) {
  return FunctionHandle(Backing::Oracle, tag, std::move(name), std::move(alphabet), {}, std::move(eval));
}

Weight FunctionHandle::combine(const std::vector<Weight>& per_part) const {
  Weight best = per_part.front();
  for (std::size_t i = 1; i < per_part.size(); ++i) {
    const bool take = backing_ == Backing::FiniteMax ? sr_leq(best, per_part[i]) : sr_leq(per_part[i], best);
    if (take) best = per_part[i];
  }
  return best;
}

Weight FunctionHandle::operator()(std::string_view word) const {
  if (backing_ == Backing::Oracle) {
    for (char c : word)
      if (alphabet_.find(c) == std::string::npos)
        throw ContractError(std::string("letter '") + c + "' is not in the alphabet");
    return eval_(word);
  }
  std::vector<Weight> values;
  for (const auto& p : parts_) values.push_back(evaluate(p, word));
  return combine(values);
}

LetterMonoid FunctionHandle::monoid() const {
  if (backing_ == Backing::Oracle) return LetterMonoid::trivial(alphabet_);
  return LetterMonoid::block_diagonal(parts_);
}

std::vector<Weight> FunctionHandle::pumped_values(const RefinedRepresentation& r, const PumpSet& s,
                                                  std::size_t horizon) const {
  std::vector<Weight> out;
  out.reserve(horizon + 1);
  if (backing_ == Backing::Oracle) {
    for (std::size_t i = 0; i <= horizon; ++i) out.push_back((*this)(pump_word(r, s, i)));
    return out;
  }
  std::vector<std::vector<Weight>> per_part;
  for (const auto& a : parts_) {
    // Segment matrices M_{u'_k} and D_k = M_{y_k}; D_k^i kept incrementally.
    std::vector<Matrix> segments, loops, powers;
    for (std::size_t k = 0; k <= r.n(); ++k) segments.push_back(word_matrix(a, r.u_prime(k)));
    for (std::size_t k = 1; k <= r.n(); ++k) loops.push_back(word_matrix(a, r.y(k)));
    powers.assign(r.n(), Matrix::identity(a.tag(), a.size()));
    std::vector<Weight> values;
    for (std::size_t i = 0; i <= horizon; ++i) {
      Vec x = row_times(a.initial(), segments[0]);
      for (std::size_t k = 1; k <= r.n(); ++k) {
        x = row_times(x, contains(s, k) ? powers[k - 1] : loops[k - 1]);
        x = row_times(x, segments[k]);
      }
      values.push_back(dot(x, a.final_weights()));
      for (std::size_t k = 1; k <= r.n(); ++k)
        if (contains(s, k)) powers[k - 1] = mat_mul(powers[k - 1], loops[k - 1]);
    }
    per_part.push_back(std::move(values));
  }
  for (std::size_t i = 0; i <= horizon; ++i) {
    std::vector<Weight> at;
    for (const auto& v : per_part) at.push_back(v[i]);
    out.push_back(combine(at));
  }
  return out;
}

}  // namespace wa
