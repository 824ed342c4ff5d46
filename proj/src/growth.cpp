#include "wa/growth.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace wa {

std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::Equal: return "Equal";
    case Trend::StrictIncrease: return "StrictIncrease";
    case Trend::NotStabilized: return "NotStabilized";
  }
  return "?";
}

namespace {

using Signed = boost::multiprecision::cpp_int;

EventualBehavior unstable(EventualBehavior b, std::string reason) {
  b.trend = Trend::NotStabilized;
  b.slope.reset();
  b.reason = std::move(reason);
  return b;
}

}  // namespace

EventualBehavior classify_tail(std::vector<Weight> values, std::size_t window, TailMode mode) {
  EventualBehavior b;
  if (values.size() < 2 || window < 1) throw ContractError("need at least two values and a positive window");
  b.horizon = values.size() - 1;
  const std::size_t h = b.horizon;
  if (window > h) throw ContractError("window exceeds the horizon");
  b.values = std::move(values);
  const auto& v = b.values;
  const std::size_t tail = h - window;

  // A tail involving an infinity is only readable when it is constant.
  bool any_infinite = false, all_infinite = true;
  for (std::size_t i = tail; i <= h; ++i) {
    any_infinite = any_infinite || v[i].is_infinite();
    all_infinite = all_infinite && v[i].is_infinite();
  }
  if (any_infinite) {
    if (!all_infinite) return unstable(std::move(b), "tail mixes finite values and infinity");
    std::size_t onset = tail;
    while (onset > 0 && v[onset - 1].is_infinite()) --onset;
    b.trend = Trend::Equal;
    b.slope = 0;
    b.onset = onset;
    return b;
  }

  auto diff = [&](std::size_t i) { return Signed(v[i + 1].value()) - Signed(v[i].value()); };
  auto finite_at = [&](std::size_t i) { return v[i].is_finite() && v[i + 1].is_finite(); };

  if (mode == TailMode::Slope) {
    const Signed k = diff(h - 1);
    for (std::size_t i = tail; i < h; ++i)
      if (diff(i) != k) return unstable(std::move(b), "differences are not constant over the window");
    if (k < 0) return unstable(std::move(b), "values decrease over the window");
    std::size_t onset = tail;
    while (onset > 0 && finite_at(onset - 1) && diff(onset - 1) == k) --onset;
    b.trend = k == 0 ? Trend::Equal : Trend::StrictIncrease;
    b.slope = Natural(k);
    b.onset = onset;
    return b;
  }

  bool equal = true, strict = true;
  for (std::size_t i = tail; i < h; ++i) {
    equal = equal && diff(i) == 0;
    strict = strict && diff(i) > 0;
  }
  if (!equal && !strict) return unstable(std::move(b), "values neither constant nor strictly increasing");
  std::size_t onset = tail;
  while (onset > 0 && finite_at(onset - 1) && (equal ? diff(onset - 1) == 0 : diff(onset - 1) > 0)) --onset;
  b.trend = equal ? Trend::Equal : Trend::StrictIncrease;
  if (equal) b.slope = 0;
  b.onset = onset;
  return b;
}

EventualBehavior eventual_behavior(const FunctionHandle& f, const RefinedRepresentation& r, const PumpSet& s,
                                   std::size_t horizon, std::size_t window, TailMode mode) {
  if (window < 2 || horizon < window) throw ContractError("require horizon >= window >= 2");
  return classify_tail(f.pumped_values(r, s, horizon), window, mode);
}

EventualBehavior idempotent_growth(const Vec& x, const Matrix& d, const Vec& y, std::size_t window) {
  if (d.tag() != SemiringTag::PlusTimes) throw ContractError("idempotent_growth expects a plus-times matrix");
  if (!is_idempotent(d)) throw ContractError("matrix is not idempotent");
  for (std::size_t p = 0; p < d.dim(); ++p) {
    if (x[p].is_infinite()) throw ContractError("x contains infinity");
    for (std::size_t q = 0; q < d.dim(); ++q)
      if (d.at(p, q).is_infinite()) throw ContractError("D contains infinity");
  }
  const std::size_t h = d.dim() + window;
  std::vector<Weight> values;
  Vec row = x;
  for (std::size_t i = 0; i <= h; ++i) {
    values.push_back(dot(row, y));
    row = row_times(row, d);
  }
  auto b = classify_tail(std::move(values), window, TailMode::Comparison);
  if (b.trend == Trend::NotStabilized) throw NotStabilized("idempotent power sequence left the dichotomy: " + b.reason);
  return b;
}

LinearBehavior linear_constants(const Matrix& d, StateId p, StateId q, std::size_t budget) {
  if (d.tag() != SemiringTag::MinPlus && d.tag() != SemiringTag::MaxPlus)
    throw ContractError("linear_constants expects a tropical matrix");
  if (!is_idempotent(d)) throw ContractError("matrix is not idempotent");
  if (p >= d.dim() || q >= d.dim()) throw ContractError("state index out of range");
  const std::size_t need = d.dim() * d.dim() + 2;
  if (budget < need + 2) budget = need + 2;

  std::vector<Weight> entry;
  Matrix power = Matrix::identity(d.tag(), d.dim());
  for (std::size_t k = 0; k <= budget; ++k) {
    entry.push_back(power.at(p, q));
    power = mat_mul(power, d);
  }
  const Weight zero = Weight::zero(d.tag());

  LinearBehavior out{0, zero, zero};
  // An idempotent entry is zero on one positive power iff on all of them.
  bool zero_from_one = true;
  for (std::size_t k = 1; k <= budget; ++k) zero_from_one = zero_from_one && entry[k].is_zero();
  if (zero_from_one) {
    out.b = entry[0].is_zero() ? 0 : 1;
  } else {
    auto diff = [&](std::size_t k) { return Signed(entry[k + 1].value()) - Signed(entry[k].value()); };
    std::optional<std::size_t> start;
    for (std::size_t b = 0; b + need <= budget; ++b) {
      bool ok = true;
      for (std::size_t k = b; k <= budget && ok; ++k) ok = entry[k].is_finite();
      if (!ok) continue;
      const Signed c = diff(b);
      if (c < 0) continue;
      for (std::size_t k = b; k < budget && ok; ++k) ok = diff(k) == c;
      if (ok) {
        start = b;
        break;
      }
    }
    if (!start) throw NotStabilized("powers do not become affine within " + std::to_string(budget) + " steps");
    out.b = *start;
    out.c = Weight::finite(d.tag(), Natural(diff(*start)));
    out.d = entry[*start];
  }

  // Verify D^{b+i}(p,q) = c*i + d for i in [0, 50].
  Matrix check = mat_pow(d, out.b);
  for (std::size_t i = 0; i <= 50; ++i) {
    Weight expected = out.d;
    for (std::size_t t = 0; t < i; ++t) expected = sr_mul(expected, out.c);
    if (!(check.at(p, q) == expected))
      throw NotStabilized("affine law fails at i = " + std::to_string(i) + " for entry (" + std::to_string(p) + "," +
                          std::to_string(q) + ")");
    check = mat_mul(check, d);
  }
  return out;
}

Natural delta(const FunctionHandle& f, const RefinedRepresentation& r, const PumpSet& s, std::size_t horizon,
              std::size_t window) {
  auto b = eventual_behavior(f, r, s, horizon, window, TailMode::Slope);
  if (b.trend == Trend::NotStabilized || !b.slope) throw NotStabilized("set " + to_string(s) + ": " + b.reason);
  return *b.slope;
}

bool is_decomposable(const FunctionHandle& f, const RefinedRepresentation& r, const PumpSet& s, std::size_t horizon,
                     std::size_t window) {
  Natural sum = 0;
  for (std::size_t k : s) sum += delta(f, r, {k}, horizon, window);
  return delta(f, r, s, horizon, window) == sum;
}

Natural ramsey_bound(std::size_t monoid_size) {
  if (monoid_size < 1) throw ContractError("monoid size must be positive");
  Natural fact = 1;
  for (std::size_t i = 2; i <= monoid_size; ++i) fact *= i;
  return 3 * fact;
}

PhiBound phi_unbounded() {
  return [](std::size_t) -> std::size_t { return 1; };
}

PhiBound phi_from_polynomial(std::vector<Natural> coefficients) {
  return [coefficients = std::move(coefficients)](std::size_t l) -> std::size_t {
    if (l <= 1) return 1;
    auto poly = [&](const Natural& x) {
      Natural acc = 0;
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
      return acc;
    };
    Natural lhs = 1, rhs = 1;
    for (std::size_t m = 1;; ++m) {
      lhs *= l;
      rhs *= (l - 1);
      if (lhs > rhs * poly(Natural(l) * m)) return m;
      if (m > 100000) throw LimitExceeded("phi does not settle below 100000");
    }
  };
}

}  // namespace wa
