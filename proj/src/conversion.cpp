#include <map>
#include <set>

#include "wa/ambiguity.hpp"
#include "wa/automaton.hpp"

namespace wa {
namespace {

std::string unique_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += '\'';
  return base;
}

}  // namespace

WeightedAutomaton convert_unambiguous_to_plus_times(const WeightedAutomaton& a) {
  if (a.tag() != SemiringTag::MinPlus && a.tag() != SemiringTag::MaxPlus)
    throw ContractError("conversion expects a min-plus or max-plus automaton");
  if (auto w = find_ambiguity(a))
    throw NotUnambiguous("automaton has two accepting runs on '" + w->word + "'");

  const std::size_t n = a.size();
  const auto pt = SemiringTag::PlusTimes;
  const Weight one = Weight::one(pt);

  // Subsets reachable in the boolean abstraction, explored breadth first.
  using Subset = std::vector<bool>;
  std::vector<Subset> subsets;
  std::map<Subset, std::size_t> subset_index;
  std::vector<std::vector<std::size_t>> subset_next;
  Subset start(n);
  for (StateId q = 0; q < n; ++q) start[q] = !a.initial()[q].is_zero();
  subset_index[start] = 0;
  subsets.push_back(start);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<std::size_t> row;
    for (const auto& m : a.matrices()) {
      Subset next(n);
      for (StateId p = 0; p < n; ++p)
        if (subsets[i][p])
          for (StateId q = 0; q < n; ++q)
            if (!m.at(p, q).is_zero()) next[q] = true;
      auto [it, inserted] = subset_index.emplace(next, subsets.size());
      if (inserted) subsets.push_back(next);
      row.push_back(it->second);
    }
    subset_next.push_back(std::move(row));
  }

  std::set<std::string> taken(a.states().begin(), a.states().end());
  std::vector<std::string> names;
  for (int copy = 1; copy <= 2; ++copy)
    for (const auto& s : a.states()) {
      names.push_back(unique_name(s + "_" + std::to_string(copy), taken));
      taken.insert(names.back());
    }
  for (const auto& sub : subsets) {
    std::string label = "d{";
    bool first = true;
    for (StateId q = 0; q < n; ++q)
      if (sub[q]) {
        if (!first) label += ',';
        label += a.states()[q];
        first = false;
      }
    label += '}';
    names.push_back(unique_name(label, taken));
    taken.insert(names.back());
  }

  auto as_plus_times = [pt](const Weight& w) { return Weight::finite(pt, w.value()); };
  WeightedAutomaton b(pt, names, a.alphabet());
  for (StateId p = 0; p < n; ++p) {
    if (!a.initial()[p].is_zero()) {
      b.set_initial(p, one);
      b.set_initial(n + p, as_plus_times(a.initial()[p]));
    }
    if (!a.final_weights()[p].is_zero()) {
      b.set_final(n + p, one);
      b.set_final(p, as_plus_times(a.final_weights()[p]));
    }
    for (char c : a.alphabet())
      for (StateId q = 0; q < n; ++q) {
        const Weight& s = a.matrix(c).at(p, q);
        if (s.is_zero()) continue;
        b.set_transition(p, c, one, q);
        b.set_transition(n + p, c, one, n + q);
        b.set_transition(p, c, as_plus_times(s), n + q);
      }
  }
  const std::size_t base = 2 * n;
  b.set_initial(base, one);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    bool accepts = false;
    for (StateId q = 0; q < n; ++q) accepts = accepts || (subsets[i][q] && !a.final_weights()[q].is_zero());
    if (!accepts) b.set_final(base + i, Weight::infinity(pt));
    for (std::size_t l = 0; l < a.alphabet().size(); ++l)
      b.set_transition(base + i, a.alphabet()[l], one, base + subset_next[i][l]);
  }
  return b;
}

}  // namespace wa
