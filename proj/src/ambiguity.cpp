#include "wa/ambiguity.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

namespace wa {

std::string_view to_string(AmbiguityClass c) {
  switch (c) {
    case AmbiguityClass::Unambiguous: return "Unambiguous";
    case AmbiguityClass::FinitelyAmbiguous: return "FinitelyAmbiguous";
    case AmbiguityClass::PolynomiallyAmbiguous: return "PolynomiallyAmbiguous";
    case AmbiguityClass::ExponentiallyAmbiguous: return "ExponentiallyAmbiguous";
  }
  return "?";
}

namespace {

// Adjacency of the boolean abstraction: succ[letter][p] lists q with M_a(p,q) != 0.
using Adjacency = std::vector<std::vector<std::vector<StateId>>>;

Adjacency adjacency(const WeightedAutomaton& a) {
  Adjacency adj(a.alphabet().size(), std::vector<std::vector<StateId>>(a.size()));
  for (std::size_t l = 0; l < a.alphabet().size(); ++l)
    for (StateId p = 0; p < a.size(); ++p)
      for (StateId q = 0; q < a.size(); ++q)
        if (!a.matrices()[l].at(p, q).is_zero()) adj[l][p].push_back(q);
  return adj;
}

// Breadth-first search over K-tuples of states (plus a flag bit) reading a
// common word. Returns the word and the K state sequences of the first goal
// node reached.
template <std::size_t K>
struct ProductSearch {
  using Node = std::pair<std::array<StateId, K>, bool>;

  struct Path {
    Word word;
    std::array<std::vector<StateId>, K> runs;
  };

  template <typename Flag, typename Goal>
  static std::optional<Path> run(const WeightedAutomaton& a, const Adjacency& adj, const std::vector<Node>& starts,
                                 Flag flag, Goal goal) {
    std::map<Node, std::pair<Node, char>> parent;
    std::deque<Node> queue;
    for (const auto& s : starts)
      if (parent.emplace(s, std::pair{s, '\0'}).second) queue.push_back(s);

    auto rebuild = [&](Node n) {
      Path path;
      std::vector<Node> nodes{n};
      while (true) {
        const auto& [prev, letter] = parent.at(nodes.back());
        if (letter == '\0') break;
        path.word.push_back(letter);
        nodes.push_back(prev);
      }
      std::reverse(path.word.begin(), path.word.end());
      std::reverse(nodes.begin(), nodes.end());
      for (std::size_t k = 0; k < K; ++k)
        for (const auto& node : nodes) path.runs[k].push_back(node.first[k]);
      return path;
    };

    while (!queue.empty()) {
      Node cur = queue.front();
      queue.pop_front();
      const bool is_start = parent.at(cur).second == '\0';
      if (!is_start && goal(cur)) return rebuild(cur);
      for (std::size_t l = 0; l < adj.size(); ++l) {
        std::array<StateId, K> next{};
        // Enumerate the product successors of every coordinate.
        auto expand = [&](auto&& self, std::size_t k) -> void {
          if (k == K) {
            Node n{next, cur.second || flag(next)};
            if (parent.emplace(n, std::pair{cur, a.alphabet()[l]}).second) queue.push_back(n);
            return;
          }
          for (StateId q : adj[l][cur.first[k]]) {
            next[k] = q;
            self(self, k + 1);
          }
        };
        expand(expand, 0);
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<AmbiguityWitness> find_ambiguity(const WeightedAutomaton& a) {
  const auto adj = adjacency(a);
  using Search = ProductSearch<2>;
  std::vector<Search::Node> starts;
  for (StateId p = 0; p < a.size(); ++p)
    for (StateId q = 0; q < a.size(); ++q)
      if (!a.initial()[p].is_zero() && !a.initial()[q].is_zero()) starts.push_back({{p, q}, p != q});
  auto accepting = [&](const Search::Node& n) {
    return n.second && !a.final_weights()[n.first[0]].is_zero() && !a.final_weights()[n.first[1]].is_zero();
  };
  // The empty word is handled separately since the search skips start nodes.
  for (const auto& s : starts)
    if (accepting(s)) return AmbiguityWitness{"", {s.first[0]}, {s.first[1]}};
  auto path = Search::run(a, adj, starts, [](const auto& t) { return t[0] != t[1]; }, accepting);
  if (!path) return std::nullopt;
  return AmbiguityWitness{path->word, path->runs[0], path->runs[1]};
}

bool is_unambiguous(const WeightedAutomaton& a) { return !find_ambiguity(a).has_value(); }

std::optional<EdaCertificate> find_eda(const WeightedAutomaton& a) {
  const auto adj = adjacency(a);
  const auto useful = useful_states(a);
  using Search = ProductSearch<2>;
  for (StateId p = 0; p < a.size(); ++p) {
    if (!useful[p]) continue;
    auto path = Search::run(
        a, adj, {{{p, p}, false}}, [](const auto& t) { return t[0] != t[1]; },
        [p](const Search::Node& n) { return n.second && n.first[0] == p && n.first[1] == p; });
    if (path) return EdaCertificate{p, path->word, path->runs[0], path->runs[1]};
  }
  return std::nullopt;
}

bool has_eda(const WeightedAutomaton& a) { return find_eda(a).has_value(); }

std::optional<IdaCertificate> find_ida(const WeightedAutomaton& a) {
  const auto adj = adjacency(a);
  const auto useful = useful_states(a);
  using Search = ProductSearch<3>;
  for (StateId p = 0; p < a.size(); ++p) {
    if (!useful[p]) continue;
    for (StateId q = 0; q < a.size(); ++q) {
      if (q == p || !useful[q]) continue;
      auto path = Search::run(
          a, adj, {{{p, p, q}, false}}, [](const auto&) { return false; },
          [p, q](const Search::Node& n) { return n.first[0] == p && n.first[1] == q && n.first[2] == q; });
      if (path) return IdaCertificate{p, q, path->word, path->runs[0], path->runs[1], path->runs[2]};
    }
  }
  return std::nullopt;
}

bool has_ida(const WeightedAutomaton& a) { return find_ida(a).has_value(); }

Classification classify_with_certificate(const WeightedAutomaton& a) {
  Classification c{AmbiguityClass::Unambiguous, std::nullopt, std::nullopt, std::nullopt};
  c.ambiguity = find_ambiguity(a);
  if (!c.ambiguity) return c;
  c.eda = find_eda(a);
  if (c.eda) {
    c.cls = AmbiguityClass::ExponentiallyAmbiguous;
    return c;
  }
  c.ida = find_ida(a);
  c.cls = c.ida ? AmbiguityClass::PolynomiallyAmbiguous : AmbiguityClass::FinitelyAmbiguous;
  return c;
}

AmbiguityClass classify(const WeightedAutomaton& a) { return classify_with_certificate(a).cls; }

}  // namespace wa
