#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wa/automaton.hpp"

namespace wa {

// w = u0 [v1] u1 [v2] ... [vn] un with every v_k non-empty.
class PumpingRepresentation {
 public:
  PumpingRepresentation(std::vector<Word> u, std::vector<Word> v);

  // Bracket syntax "aaaa [bbb]"; whitespace is ignored.
  static PumpingRepresentation parse(std::string_view text);

  std::size_t n() const noexcept { return v_.size(); }
  const Word& u(std::size_t k) const { return u_.at(k); }  // 0..n
  const Word& v(std::size_t k) const { return v_.at(k - 1); }  // 1..n
  Word word() const;
  std::string to_string() const;

  bool operator==(const PumpingRepresentation&) const = default;

 private:
  std::vector<Word> u_;
  std::vector<Word> v_;
};

// Position of y inside v = x y z.
struct FactorSplit {
  std::size_t offset = 0;
  std::size_t length = 0;

  auto operator<=>(const FactorSplit&) const = default;
};

class RefinedRepresentation {
 public:
  RefinedRepresentation(PumpingRepresentation base, std::vector<FactorSplit> splits);

  const PumpingRepresentation& base() const noexcept { return base_; }
  const std::vector<FactorSplit>& splits() const noexcept { return splits_; }
  std::size_t n() const noexcept { return base_.n(); }

  Word x(std::size_t k) const;
  Word y(std::size_t k) const;
  Word z(std::size_t k) const;
  // u'_k = z_k u_k x_{k+1}, with z_0 = x_{n+1} = empty.
  Word u_prime(std::size_t k) const;

  std::string to_string() const;  // "u'0 (y1) u'1 ..."

 private:
  PumpingRepresentation base_;
  std::vector<FactorSplit> splits_;
};

// Non-empty subset of {1..n}, kept sorted.
using PumpSet = std::vector<std::size_t>;

PumpSet make_pump_set(std::vector<std::size_t> members, std::size_t n);
PumpSet unite(const PumpSet& a, const PumpSet& b);
bool contains(const PumpSet& s, std::size_t k);
std::string to_string(const PumpSet& s);

// "1,3;2,4" -> {{1,3},{2,4}}
std::vector<PumpSet> parse_sets(std::string_view text, std::size_t n);

// Non-empty, pairwise different subsets.
void validate_distinct_sets(const std::vector<PumpSet>& sets, std::size_t n);
// Pairwise disjoint blocks covering {1..n}.
void validate_partition(const std::vector<PumpSet>& blocks, std::size_t n);

// Number of selection sets of a partition.
Natural count_selection_sets(const std::vector<PumpSet>& blocks);
// Selection sets in lexicographic order of the chosen members.
std::vector<PumpSet> selection_sets(const std::vector<PumpSet>& blocks, std::size_t cap = 1000000);

// w(S,i): y_k repeated i times for k in S, once otherwise.
Word pump_word(const RefinedRepresentation& r, const PumpSet& s, std::size_t i);

}  // namespace wa
