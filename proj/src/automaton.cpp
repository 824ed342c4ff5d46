#include "wa/automaton.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace wa {

WeightedAutomaton::WeightedAutomaton(SemiringTag tag, std::vector<std::string> states, std::string alphabet)
    : tag_(tag),
      states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      initial_(tag, states_.size()),
      final_(tag, states_.size()) {
  if (is_boolean(tag)) throw ContractError("automata are defined over min-plus, max-plus or plus-times");
  std::unordered_set<std::string> seen;
  for (const auto& s : states_) {
    if (s.empty()) throw ContractError("empty state name");
    if (!seen.insert(s).second) throw ContractError("duplicate state '" + s + "'");
  }
  std::unordered_set<char> letters;
  for (char c : alphabet_) {
    if (!letters.insert(c).second) throw ContractError(std::string("duplicate letter '") + c + "'");
  }
  matrices_.assign(alphabet_.size(), Matrix(tag, states_.size()));
}

std::optional<StateId> WeightedAutomaton::state_index(std::string_view name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

std::optional<std::size_t> WeightedAutomaton::letter_index(char letter) const {
  auto pos = alphabet_.find(letter);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

StateId WeightedAutomaton::require_state(std::string_view name) const {
  auto id = state_index(name);
  if (!id) throw ContractError("unknown state '" + std::string(name) + "'");
  return *id;
}

std::size_t WeightedAutomaton::require_letter(char letter) const {
  auto id = letter_index(letter);
  if (!id) throw ContractError(std::string("letter '") + letter + "' is not in the alphabet");
  return *id;
}

const Matrix& WeightedAutomaton::matrix(char letter) const { return matrices_[require_letter(letter)]; }

void WeightedAutomaton::set_transition(StateId p, char letter, Weight w, StateId q) {
  matrices_[require_letter(letter)].set(p, q, std::move(w));
}

void WeightedAutomaton::set_initial(StateId p, Weight w) { initial_.set(p, std::move(w)); }

void WeightedAutomaton::set_final(StateId p, Weight w) { final_.set(p, std::move(w)); }

void WeightedAutomaton::add_transition(std::string_view p, char letter, unsigned long weight, std::string_view q) {
  set_transition(require_state(p), letter, Weight::finite(tag_, weight), require_state(q));
}

void WeightedAutomaton::add_initial(std::string_view p, unsigned long weight) {
  set_initial(require_state(p), Weight::finite(tag_, weight));
}

void WeightedAutomaton::add_final(std::string_view p, unsigned long weight) {
  set_final(require_state(p), Weight::finite(tag_, weight));
}

Weight evaluate(const WeightedAutomaton& a, std::string_view word) {
  Vec x = a.initial();
  for (char c : word) x = row_times(x, a.matrix(c));
  return dot(x, a.final_weights());
}

Matrix word_matrix(const WeightedAutomaton& a, std::string_view word) {
  Matrix m = Matrix::identity(a.tag(), a.size());
  for (char c : word) m = mat_mul(m, a.matrix(c));
  return m;
}

std::vector<Run> enumerate_runs(const WeightedAutomaton& a, std::string_view word, std::size_t limit) {
  if (word.size() > limit)
    throw LimitExceeded("word length " + std::to_string(word.size()) + " exceeds the run enumeration limit " +
                        std::to_string(limit));
  std::vector<const Matrix*> steps;
  for (char c : word) steps.push_back(&a.matrix(c));

  std::vector<Run> runs;
  std::vector<StateId> path;
  std::function<void(std::size_t, const Weight&)> extend = [&](std::size_t depth, const Weight& acc) {
    const StateId here = path.back();
    if (depth == steps.size()) {
      const Weight& f = a.final_weights()[here];
      if (!f.is_zero()) runs.push_back(Run{path, Word(word), sr_mul(acc, f)});
      return;
    }
    for (StateId next = 0; next < a.size(); ++next) {
      const Weight& s = steps[depth]->at(here, next);
      if (s.is_zero()) continue;
      path.push_back(next);
      extend(depth + 1, sr_mul(acc, s));
      path.pop_back();
    }
  };
  for (StateId q0 = 0; q0 < a.size(); ++q0) {
    if (a.initial()[q0].is_zero()) continue;
    path.assign(1, q0);
    extend(0, a.initial()[q0]);
  }
  return runs;
}

Natural count_runs(const WeightedAutomaton& a, std::string_view word) {
  const std::size_t n = a.size();
  std::vector<Natural> count(n, 0);
  for (StateId q = 0; q < n; ++q)
    if (!a.initial()[q].is_zero()) count[q] = 1;
  for (char c : word) {
    const Matrix& m = a.matrix(c);
    std::vector<Natural> next(n, 0);
    for (StateId p = 0; p < n; ++p) {
      if (count[p] == 0) continue;
      for (StateId q = 0; q < n; ++q)
        if (!m.at(p, q).is_zero()) next[q] += count[p];
    }
    count = std::move(next);
  }
  Natural total = 0;
  for (StateId q = 0; q < n; ++q)
    if (!a.final_weights()[q].is_zero()) total += count[q];
  return total;
}

std::vector<bool> useful_states(const WeightedAutomaton& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<StateId>> succ(n), pred(n);
  for (const auto& m : a.matrices())
    for (StateId p = 0; p < n; ++p)
      for (StateId q = 0; q < n; ++q)
        if (!m.at(p, q).is_zero()) {
          succ[p].push_back(q);
          pred[q].push_back(p);
        }
  auto closure = [n](std::vector<bool> seed, const std::vector<std::vector<StateId>>& edges) {
    std::vector<StateId> stack;
    for (StateId q = 0; q < n; ++q)
      if (seed[q]) stack.push_back(q);
    while (!stack.empty()) {
      StateId p = stack.back();
      stack.pop_back();
      for (StateId q : edges[p])
        if (!seed[q]) {
          seed[q] = true;
          stack.push_back(q);
        }
    }
    return seed;
  };
  std::vector<bool> init(n), fin(n);
  for (StateId q = 0; q < n; ++q) {
    init[q] = !a.initial()[q].is_zero();
    fin[q] = !a.final_weights()[q].is_zero();
  }
  auto accessible = closure(init, succ);
  auto coaccessible = closure(fin, pred);
  std::vector<bool> useful(n);
  for (StateId q = 0; q < n; ++q) useful[q] = accessible[q] && coaccessible[q];
  return useful;
}

WeightedAutomaton trim(const WeightedAutomaton& a) {
  const auto useful = useful_states(a);
  std::vector<StateId> keep;
  std::vector<std::string> names;
  for (StateId q = 0; q < a.size(); ++q)
    if (useful[q]) {
      keep.push_back(q);
      names.push_back(a.states()[q]);
    }
  WeightedAutomaton out(a.tag(), names, a.alphabet());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.set_initial(i, a.initial()[keep[i]]);
    out.set_final(i, a.final_weights()[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j)
      for (char c : a.alphabet()) out.set_transition(i, c, a.matrix(c).at(keep[i], keep[j]), j);
  }
  return out;
}

std::string format_run(const WeightedAutomaton& a, const std::vector<StateId>& states, std::string_view word) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) {
      out += " -";
      out += word[i - 1];
      out += "-> ";
    }
    out += a.states()[states[i]];
  }
  return out;
}

}  // namespace wa
