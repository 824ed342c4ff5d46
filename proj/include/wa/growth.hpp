#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wa/function.hpp"

namespace wa {

enum class Trend { Equal, StrictIncrease, NotStabilized };

std::string_view to_string(Trend t);

// How a finite tail is read. Slope: constant additive differences (tropical
// functions are eventually affine). Comparison: all equal or all strictly
// increasing, which also covers geometric growth under plus-times.
enum class TailMode { Slope, Comparison };

struct EventualBehavior {
  Trend trend = Trend::NotStabilized;
  // 0 for Equal, K for StrictIncrease in slope mode. Unset otherwise.
  std::optional<Natural> slope;
  // First index from which the tail pattern holds up to the horizon.
  std::size_t onset = 0;
  std::size_t horizon = 0;
  std::string reason;
  std::vector<Weight> values;  // indices 0..horizon
};

// Reads the last `window` differences of `values`. A tail that is constantly
// the semiring zero reads as Equal.
EventualBehavior classify_tail(std::vector<Weight> values, std::size_t window, TailMode mode);

EventualBehavior eventual_behavior(const FunctionHandle& f, const RefinedRepresentation& r, const PumpSet& s,
                                   std::size_t horizon = 64, std::size_t window = 8,
                                   TailMode mode = TailMode::Slope);

// x^T D^i y for an idempotent plus-times D; the comparison is made on
// [dim, dim + window]. Throws ContractError on infinite entries in D or x.
EventualBehavior idempotent_growth(const Vec& x, const Matrix& d, const Vec& y, std::size_t window = 8);

// D^{b+i}(p,q) = c*i + d; c = d = zero for an entry that is zero on every
// positive power.
struct LinearBehavior {
  std::size_t b = 0;
  Weight c;
  Weight d;
};

LinearBehavior linear_constants(const Matrix& d, StateId p, StateId q, std::size_t budget = 256);

// Slope of i -> f(w(S,i)); throws NotStabilized when the tail is unreadable.
Natural delta(const FunctionHandle& f, const RefinedRepresentation& r, const PumpSet& s, std::size_t horizon = 64,
              std::size_t window = 8);
bool is_decomposable(const FunctionHandle& f, const RefinedRepresentation& r, const PumpSet& s,
                     std::size_t horizon = 64, std::size_t window = 8);

// Length guaranteeing an idempotent infix for a monoid of the given size:
// 3 * size!. Reported only, never used as a search bound.
Natural ramsey_bound(std::size_t monoid_size);

// Lower bound on the number of blocks of a partition whose largest block has
// the given size.
using PhiBound = std::function<std::size_t(std::size_t)>;

PhiBound phi_unbounded();
// Smallest m with L^m > (L-1)^m * P(L*m), P given by its coefficients
// (constant first); phi(1) = 1.
PhiBound phi_from_polynomial(std::vector<Natural> coefficients);

}  // namespace wa
