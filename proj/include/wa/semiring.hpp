#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "wa/errors.hpp"

namespace wa {

// Unbounded non-negative integers. PlusTimes products grow like 2^|w|.
using Natural = boost::multiprecision::cpp_int;

// MinPlus   (N u {+inf}, min, +, +inf, 0)
// MaxPlus   (N u {-inf}, max, +, -inf, 0)
// PlusTimes (N u {inf},  +,   *, 0,    1)
// Bool      ({0,1},      or,  and, 0,  1)
// BoolInf   ({0,1,inf},  or,  and, 0,  1), inf absorbing for or
enum class SemiringTag { MinPlus, MaxPlus, PlusTimes, Bool, BoolInf };

std::string_view to_string(SemiringTag tag);

// Accepts the file-format spellings "min-plus", "max-plus", "plus-times"
// (and "bool", "bool-inf").
std::optional<SemiringTag> parse_semiring(std::string_view name);

bool is_boolean(SemiringTag tag);

// Target of the abstraction homomorphism: Bool for the tropical semirings,
// BoolInf for PlusTimes.
SemiringTag abstraction_of(SemiringTag tag);

// An element of one tagged semiring. The infinity is +inf under
// MinPlus/PlusTimes/BoolInf and -inf under MaxPlus; Bool has none.
class Weight {
 public:
  static Weight finite(SemiringTag tag, Natural value);
  static Weight infinity(SemiringTag tag);
  static Weight zero(SemiringTag tag);
  static Weight one(SemiringTag tag);

  SemiringTag tag() const noexcept { return tag_; }
  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  // Throws ContractError on an infinite weight.
  const Natural& value() const;

  bool is_zero() const;
  bool is_one() const;

  // Decimal digits or "inf".
  std::string to_string() const;

  bool operator==(const Weight&) const = default;

 private:
  Weight(SemiringTag tag, bool infinite, Natural value)
      : tag_(tag), infinite_(infinite), value_(std::move(value)) {}

  SemiringTag tag_;
  bool infinite_;
  Natural value_;
};

Weight sr_add(const Weight& a, const Weight& b);
Weight sr_mul(const Weight& a, const Weight& b);

// h1 (MinPlus -> Bool), h2 (MaxPlus -> Bool), h3 (PlusTimes -> BoolInf).
Weight sr_abstract(const Weight& a);

// Natural order, +inf maximal under MinPlus/PlusTimes, -inf minimal under
// MaxPlus. Boolean tags are rejected.
bool sr_leq(const Weight& a, const Weight& b);

// Three-way version of sr_leq.
std::strong_ordering sr_compare(const Weight& a, const Weight& b);

// Same number (or both infinite), ignoring the tags. Used to compare functions
// realised over different semirings.
bool same_value(const Weight& a, const Weight& b);

// Textual weight syntax: decimal digits or the literal "inf".
Weight parse_weight(SemiringTag tag, std::string_view text);

inline Weight operator+(const Weight& a, const Weight& b) { return sr_add(a, b); }
inline Weight operator*(const Weight& a, const Weight& b) { return sr_mul(a, b); }

}  // namespace wa
