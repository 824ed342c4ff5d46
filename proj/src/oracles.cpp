#include <algorithm>
#include <functional>
#include <map>

#include "wa/corpus.hpp"

namespace wa::corpus {
namespace {

using Fn = std::function<Weight(std::string_view)>;

std::size_t count(std::string_view w, char c) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), c)); }

std::vector<std::string_view> blocks(std::string_view w) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t hash = w.find('#', start);
    if (hash == std::string_view::npos) {
      out.push_back(w.substr(start));
      return out;
    }
    out.push_back(w.substr(start, hash - start));
    start = hash + 1;
  }
}

// Lengths of the maximal runs of b.
std::vector<std::size_t> b_blocks(std::string_view w) {
  std::vector<std::size_t> out;
  std::size_t run = 0;
  for (char c : w) {
    if (c == 'b') {
      ++run;
    } else if (run > 0) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run > 0) out.push_back(run);
  return out;
}

// |a_1..a_i|_a + |a_{i+1}..a_n|_b for i = 0..n.
std::vector<std::size_t> split_scores(std::string_view w) {
  std::vector<std::size_t> out;
  std::size_t prefix_a = 0, suffix_b = count(w, 'b');
  out.push_back(suffix_b);
  for (char c : w) {
    if (c == 'a') ++prefix_a;
    if (c == 'b') --suffix_b;
    out.push_back(prefix_a + suffix_b);
  }
  return out;
}

std::size_t f3_value(std::string_view w) {
  auto s = split_scores(w);
  return *std::min_element(s.begin(), s.end());
}

std::size_t g3_value(std::string_view w) {
  auto s = split_scores(w);
  return *std::max_element(s.begin(), s.end());
}

const auto kMin = SemiringTag::MinPlus;
const auto kMax = SemiringTag::MaxPlus;

Weight fin(SemiringTag tag, std::size_t v) { return Weight::finite(tag, v); }

struct OracleDef {
  SemiringTag tag;
  std::string alphabet;
  Fn fn;
};

const std::map<std::string, OracleDef, std::less<>>& table() {
  static const std::map<std::string, OracleDef, std::less<>> t = {
      {"f1", {kMin, "ab", [](std::string_view w) {
                if (w.empty()) return Weight::infinity(kMin);
                std::size_t k = 0;
                while (k < w.size() && w[w.size() - 1 - k] == 'a') ++k;
                return fin(kMin, k);
              }}},
      {"f2", {kMin, "ab", [](std::string_view w) { return fin(kMin, std::min(count(w, 'a'), count(w, 'b'))); }}},
      {"g2", {kMax, "ab", [](std::string_view w) { return fin(kMax, std::max(count(w, 'a'), count(w, 'b'))); }}},
      {"f3", {kMin, "ab", [](std::string_view w) { return fin(kMin, f3_value(w)); }}},
      {"g3", {kMax, "ab", [](std::string_view w) { return fin(kMax, g3_value(w)); }}},
      {"f4", {kMin, "ab", [](std::string_view w) {
                auto b = b_blocks(w);
                if (b.empty()) return Weight::infinity(kMin);
                return fin(kMin, *std::min_element(b.begin(), b.end()));
              }}},
      {"g4", {kMax, "ab", [](std::string_view w) {
                auto b = b_blocks(w);
                if (b.empty()) return Weight::infinity(kMax);
                return fin(kMax, *std::max_element(b.begin(), b.end()));
              }}},
      {"f5", {kMin, "ab#", [](std::string_view w) {
                std::size_t sum = 0;
                for (auto blk : blocks(w)) sum += std::min(count(blk, 'a'), count(blk, 'b'));
                return fin(kMin, sum);
              }}},
      {"g5", {kMax, "ab#", [](std::string_view w) {
                std::size_t sum = 0;
                for (auto blk : blocks(w)) sum += std::max(count(blk, 'a'), count(blk, 'b'));
                return fin(kMax, sum);
              }}},
      {"f6", {kMin, "ab#", [](std::string_view w) {
                std::size_t sum = 0;
                for (auto blk : blocks(w)) {
                  auto b = b_blocks(blk);
                  if (b.empty()) return Weight::infinity(kMin);
                  sum += *std::min_element(b.begin(), b.end());
                }
                return fin(kMin, sum);
              }}},
      {"g6", {kMax, "ab#", [](std::string_view w) {
                std::size_t sum = 0;
                for (auto blk : blocks(w)) sum += g3_value(blk);
                return fin(kMax, sum);
              }}},
  };
  return t;
}

}  // namespace

std::vector<std::string> oracle_names() {
  return {"f1", "f2", "f3", "f4", "f5", "f6", "g2", "g3", "g4", "g5", "g6"};
}

bool has_oracle(std::string_view name) { return table().count(name) > 0; }

FunctionHandle oracle(std::string_view name) {
  auto it = table().find(name);
  if (it == table().end()) throw ContractError("unknown oracle '" + std::string(name) + "'");
  return FunctionHandle::oracle(it->first, it->second.tag, it->second.alphabet, it->second.fn);
}

}  // namespace wa::corpus
