#pragma once

#include <string>

#include "wa/corpus.hpp"
#include "wa/pumping.hpp"

namespace wa::test {

inline constexpr SemiringTag kMin = SemiringTag::MinPlus;
inline constexpr SemiringTag kMax = SemiringTag::MaxPlus;
inline constexpr SemiringTag kNat = SemiringTag::PlusTimes;
inline constexpr SemiringTag kBool = SemiringTag::Bool;
inline constexpr SemiringTag kBoolInf = SemiringTag::BoolInf;

inline Weight fin(SemiringTag t, unsigned long v) { return Weight::finite(t, v); }
inline Weight inf(SemiringTag t) { return Weight::infinity(t); }

inline Matrix matrix(SemiringTag t, std::initializer_list<std::initializer_list<Weight>> rows) {
  Matrix m(t, rows.size());
  std::size_t p = 0;
  for (const auto& row : rows) {
    std::size_t q = 0;
    for (const auto& w : row) m.set(p, q++, w);
    ++p;
  }
  return m;
}

inline Word repeat(const Word& w, std::size_t times) {
  Word out;
  for (std::size_t i = 0; i < times; ++i) out += w;
  return out;
}

inline WeightedAutomaton corpus_automaton(const char* name) { return *corpus::build(name).automaton; }

}  // namespace wa::test
