#include "wa/semiring.hpp"

#include <algorithm>
#include <cctype>

namespace wa {

std::string_view to_string(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::MinPlus:
      return "min-plus";
    case SemiringTag::MaxPlus:
      return "max-plus";
    case SemiringTag::PlusTimes:
      return "plus-times";
    case SemiringTag::Bool:
      return "bool";
    case SemiringTag::BoolInf:
      return "bool-inf";
  }
  return "?";
}

std::optional<SemiringTag> parse_semiring(std::string_view name) {
  if (name == "min-plus") return SemiringTag::MinPlus;
  if (name == "max-plus") return SemiringTag::MaxPlus;
  if (name == "plus-times") return SemiringTag::PlusTimes;
  if (name == "bool") return SemiringTag::Bool;
  if (name == "bool-inf") return SemiringTag::BoolInf;
  return std::nullopt;
}

bool is_boolean(SemiringTag tag) { return tag == SemiringTag::Bool || tag == SemiringTag::BoolInf; }

SemiringTag abstraction_of(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::MinPlus:
    case SemiringTag::MaxPlus:
      return SemiringTag::Bool;
    case SemiringTag::PlusTimes:
      return SemiringTag::BoolInf;
    default:
      throw SemiringMismatch("semiring " + std::string(to_string(tag)) + " is already boolean");
  }
}

Weight Weight::finite(SemiringTag tag, Natural value) {
  if (value < 0) throw SemiringMismatch("negative weight");
  if (is_boolean(tag) && value > 1)
    throw SemiringMismatch("value " + value.str() + " is not an element of " + std::string(wa::to_string(tag)));
  return Weight(tag, false, std::move(value));
}

Weight Weight::infinity(SemiringTag tag) {
  if (tag == SemiringTag::Bool) throw SemiringMismatch("bool has no infinity");
  return Weight(tag, true, 0);
}

Weight Weight::zero(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::MinPlus:
    case SemiringTag::MaxPlus:
      return infinity(tag);
    default:
      return finite(tag, 0);
  }
}

Weight Weight::one(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::MinPlus:
    case SemiringTag::MaxPlus:
      return finite(tag, 0);
    default:
      return finite(tag, 1);
  }
}

const Natural& Weight::value() const {
  if (infinite_) throw ContractError("infinite weight has no finite value");
  return value_;
}

bool Weight::is_zero() const { return *this == zero(tag_); }

bool Weight::is_one() const { return *this == one(tag_); }

std::string Weight::to_string() const { return infinite_ ? "inf" : value_.str(); }

namespace {

void require_same_tag(const Weight& a, const Weight& b) {
  if (a.tag() != b.tag())
    throw SemiringMismatch("cannot combine " + std::string(to_string(a.tag())) + " and " +
                           std::string(to_string(b.tag())) + " weights");
}

}  // namespace

Weight sr_add(const Weight& a, const Weight& b) {
  require_same_tag(a, b);
  const SemiringTag tag = a.tag();
  switch (tag) {
    case SemiringTag::MinPlus:
      if (a.is_infinite()) return b;
      if (b.is_infinite()) return a;
      return Weight::finite(tag, std::min(a.value(), b.value()));
    case SemiringTag::MaxPlus:
      if (a.is_infinite()) return b;
      if (b.is_infinite()) return a;
      return Weight::finite(tag, std::max(a.value(), b.value()));
    case SemiringTag::PlusTimes:
    case SemiringTag::BoolInf:
      if (a.is_infinite() || b.is_infinite()) return Weight::infinity(tag);
      if (tag == SemiringTag::BoolInf) return Weight::finite(tag, std::max(a.value(), b.value()));
      return Weight::finite(tag, a.value() + b.value());
    case SemiringTag::Bool:
      return Weight::finite(tag, std::max(a.value(), b.value()));
  }
  return a;
}

Weight sr_mul(const Weight& a, const Weight& b) {
  require_same_tag(a, b);
  const SemiringTag tag = a.tag();
  switch (tag) {
    case SemiringTag::MinPlus:
    case SemiringTag::MaxPlus:
      if (a.is_infinite() || b.is_infinite()) return Weight::infinity(tag);
      return Weight::finite(tag, a.value() + b.value());
    case SemiringTag::PlusTimes:
    case SemiringTag::BoolInf:
      // inf * n = inf if n != 0 and 0 otherwise
      if (a.is_zero() || b.is_zero()) return Weight::zero(tag);
      if (a.is_infinite() || b.is_infinite()) return Weight::infinity(tag);
      if (tag == SemiringTag::BoolInf) return Weight::one(tag);
      return Weight::finite(tag, a.value() * b.value());
    case SemiringTag::Bool:
      return Weight::finite(tag, std::min(a.value(), b.value()));
  }
  return a;
}

Weight sr_abstract(const Weight& a) {
  switch (a.tag()) {
    case SemiringTag::MinPlus:
    case SemiringTag::MaxPlus:
      return Weight::finite(SemiringTag::Bool, a.is_infinite() ? 0 : 1);
    case SemiringTag::PlusTimes:
      if (a.is_infinite()) return Weight::infinity(SemiringTag::BoolInf);
      return Weight::finite(SemiringTag::BoolInf, a.value() == 0 ? 0 : 1);
    default:
      throw SemiringMismatch("cannot abstract a " + std::string(to_string(a.tag())) + " weight");
  }
}

std::strong_ordering sr_compare(const Weight& a, const Weight& b) {
  require_same_tag(a, b);
  if (is_boolean(a.tag())) throw SemiringMismatch("boolean semirings are not ordered");
  const bool inf_is_top = a.tag() != SemiringTag::MaxPlus;
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return inf_is_top ? std::strong_ordering::greater : std::strong_ordering::less;
  if (b.is_infinite()) return inf_is_top ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.value() < b.value()) return std::strong_ordering::less;
  if (b.value() < a.value()) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool sr_leq(const Weight& a, const Weight& b) { return sr_compare(a, b) != std::strong_ordering::greater; }

bool same_value(const Weight& a, const Weight& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return a.value() == b.value();
}

Weight parse_weight(SemiringTag tag, std::string_view text) {
  if (text == "inf") return Weight::infinity(tag);
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ContractError("invalid weight '" + std::string(text) + "': expected decimal digits or 'inf'");
  return Weight::finite(tag, Natural(std::string(text)));
}

}  // namespace wa
