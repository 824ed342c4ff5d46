#include "wa/representation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace wa {

PumpingRepresentation::PumpingRepresentation(std::vector<Word> u, std::vector<Word> v)
    : u_(std::move(u)), v_(std::move(v)) {
  if (u_.size() != v_.size() + 1) throw ContractError("a representation with n pumped factors needs n+1 separators");
  if (v_.empty()) throw ContractError("a representation needs at least one pumped factor");
  for (std::size_t k = 0; k < v_.size(); ++k)
    if (v_[k].empty()) throw ContractError("pumped factor " + std::to_string(k + 1) + " is empty");
}

PumpingRepresentation PumpingRepresentation::parse(std::string_view text) {
  std::vector<Word> u{""};
  std::vector<Word> v;
  bool inside = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '[') {
      if (inside) throw ParseError(1, i + 1, "nested '['");
      inside = true;
      v.emplace_back();
    } else if (c == ']') {
      if (!inside) throw ParseError(1, i + 1, "unbalanced ']'");
      if (v.back().empty()) throw ParseError(1, i + 1, "pumped factor is empty");
      inside = false;
      u.emplace_back();
    } else if (inside) {
      v.back() += c;
    } else {
      u.back() += c;
    }
  }
  if (inside) throw ParseError(1, text.size() + 1, "missing ']'");
  if (v.empty()) throw ParseError(1, 1, "no pumped factor; mark one with [..]");
  return PumpingRepresentation(std::move(u), std::move(v));
}

Word PumpingRepresentation::word() const {
  Word w = u_[0];
  for (std::size_t k = 0; k < v_.size(); ++k) w += v_[k] + u_[k + 1];
  return w;
}

std::string PumpingRepresentation::to_string() const {
  std::string s = u_[0];
  for (std::size_t k = 0; k < v_.size(); ++k) s += "[" + v_[k] + "]" + u_[k + 1];
  return s;
}

RefinedRepresentation::RefinedRepresentation(PumpingRepresentation base, std::vector<FactorSplit> splits)
    : base_(std::move(base)), splits_(std::move(splits)) {
  if (splits_.size() != base_.n()) throw ContractError("one split per pumped factor is required");
  for (std::size_t k = 1; k <= base_.n(); ++k) {
    const auto& s = splits_[k - 1];
    if (s.length == 0 || s.offset + s.length > base_.v(k).size())
      throw ContractError("split of factor " + std::to_string(k) + " is out of range");
  }
}

Word RefinedRepresentation::x(std::size_t k) const { return base_.v(k).substr(0, splits_.at(k - 1).offset); }

Word RefinedRepresentation::y(std::size_t k) const {
  const auto& s = splits_.at(k - 1);
  return base_.v(k).substr(s.offset, s.length);
}

Word RefinedRepresentation::z(std::size_t k) const {
  const auto& s = splits_.at(k - 1);
  return base_.v(k).substr(s.offset + s.length);
}

Word RefinedRepresentation::u_prime(std::size_t k) const {
  Word w;
  if (k >= 1) w += z(k);
  w += base_.u(k);
  if (k < n()) w += x(k + 1);
  return w;
}

std::string RefinedRepresentation::to_string() const {
  std::string s = u_prime(0);
  for (std::size_t k = 1; k <= n(); ++k) s += "(" + y(k) + ")" + u_prime(k);
  return s;
}

PumpSet make_pump_set(std::vector<std::size_t> members, std::size_t n) {
  if (members.empty()) throw ContractError("pump sets must be non-empty");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw ContractError("pump set lists an index twice");
  if (members.front() < 1 || members.back() > n)
    throw ContractError("pump set index outside 1.." + std::to_string(n));
  return members;
}

PumpSet unite(const PumpSet& a, const PumpSet& b) {
  PumpSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const PumpSet& s, std::size_t k) { return std::binary_search(s.begin(), s.end(), k); }

std::string to_string(const PumpSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<PumpSet> parse_sets(std::string_view text, std::size_t n) {
  std::vector<PumpSet> sets;
  std::vector<std::size_t> current;
  std::string number;
  std::size_t column = 0;
  auto flush_number = [&] {
    if (number.empty()) throw ParseError(1, column + 1, "expected an index");
    current.push_back(std::stoul(number));
    number.clear();
  };
  for (; column < text.size(); ++column) {
    char c = text[column];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      number += c;
    } else if (c == ',') {
      flush_number();
    } else if (c == ';') {
      flush_number();
      sets.push_back(make_pump_set(std::move(current), n));
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ParseError(1, column + 1, std::string("unexpected character '") + c + "'");
    }
  }
  flush_number();
  sets.push_back(make_pump_set(std::move(current), n));
  return sets;
}

void validate_distinct_sets(const std::vector<PumpSet>& sets, std::size_t n) {
  if (sets.empty()) throw ContractError("at least one set is required");
  std::set<PumpSet> seen;
  for (const auto& s : sets) {
    make_pump_set(s, n);
    if (!seen.insert(s).second) throw ContractError("set " + to_string(s) + " is listed twice");
  }
}

void validate_partition(const std::vector<PumpSet>& blocks, std::size_t n) {
  if (blocks.empty()) throw ContractError("a partition needs at least one block");
  std::vector<bool> covered(n + 1, false);
  for (const auto& b : blocks) {
    make_pump_set(b, n);
    for (std::size_t k : b) {
      if (covered[k]) throw ContractError("index " + std::to_string(k) + " appears in two blocks");
      covered[k] = true;
    }
  }
  for (std::size_t k = 1; k <= n; ++k)
    if (!covered[k]) throw ContractError("index " + std::to_string(k) + " is not covered by the partition");
}

Natural count_selection_sets(const std::vector<PumpSet>& blocks) {
  Natural total = 1;
  for (const auto& b : blocks) total *= b.size();
  return total;
}

std::vector<PumpSet> selection_sets(const std::vector<PumpSet>& blocks, std::size_t cap) {
  if (count_selection_sets(blocks) > cap)
    throw LimitExceeded("partition has more than " + std::to_string(cap) + " selection sets");
  std::vector<PumpSet> out;
  std::vector<std::size_t> choice(blocks.size(), 0);
  while (true) {
    PumpSet s;
    for (std::size_t b = 0; b < blocks.size(); ++b) s.push_back(blocks[b][choice[b]]);
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    std::size_t b = blocks.size();
    while (b > 0) {
      --b;
      if (++choice[b] < blocks[b].size()) break;
      choice[b] = 0;
      if (b == 0) return out;
    }
    if (blocks.empty()) return out;
  }
}

Word pump_word(const RefinedRepresentation& r, const PumpSet& s, std::size_t i) {
  Word w = r.u_prime(0);
  for (std::size_t k = 1; k <= r.n(); ++k) {
    const Word y = r.y(k);
    const std::size_t e = contains(s, k) ? i : 1;
    for (std::size_t t = 0; t < e; ++t) w += y;
    w += r.u_prime(k);
  }
  return w;
}

}  // namespace wa
