#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wa/growth.hpp"

namespace wa {

struct CheckOptions {
  std::size_t horizon = 64;
  std::size_t window = 8;
  // The constant N of the pumping lemmas: lower bound on |v_k|, on the number
  // of sets, and on i for the plus-times lemma.
  std::size_t N = 1;
  // Quantify over every idempotent infix of every factor, not only the
  // canonical one.
  bool all_refinements = false;
  std::size_t max_refinements = 10000;
  std::size_t max_witnesses = 8;
  // Overrides the tail reading of the finite-min and min-plus partition checks.
  std::optional<TailMode> mode;
  PhiBound phi = phi_unbounded();
};

enum class VerdictKind {
  HoldsEqual,
  HoldsStrict,
  HoldsStrictSingle,
  HoldsEqualUnion,
  HoldsEqualBlock,
  HoldsStrictSelection,
  HoldsNonDecomposable,
  HoldsCrossDecomposable,
  HoldsDecomposableBlock,
  HoldsNonDecompSelection,
  Violated,
  NotStabilized,
};

std::string_view to_string(VerdictKind k);
bool holds(VerdictKind k);

// Evidence about one queried set under one refinement: the clause it was
// tested for, an index i with the values f(w(S,i)) and f(w(S,i+1)), and the
// slopes involved when decomposability is at stake.
struct ClauseWitness {
  std::string clause;
  PumpSet set;
  std::optional<std::size_t> index;
  std::vector<Weight> values;
  std::optional<Natural> delta;
  std::optional<Natural> delta_sum;
  std::string note;
};

struct RefinementReport {
  std::vector<FactorSplit> splits;
  std::string refined;
  std::vector<ClauseWitness> evidence;
};

struct ValueTable {
  PumpSet set;
  std::vector<Weight> values;
};

struct Verdict {
  std::string lemma;
  VerdictKind kind = VerdictKind::NotStabilized;
  // 1-based j, or (j1, j2).
  std::vector<std::size_t> indices;
  PumpSet selection;
  // The satisfying refinement, or the undetermined one.
  std::optional<RefinementReport> refinement;
  // Sample of refuted refinements (Violated).
  std::vector<RefinementReport> witnesses;
  // f(w(S,i)) for i = 0..horizon, for the sets of the first reported refinement.
  std::vector<ValueTable> tables;
  std::size_t refinements_checked = 0;
  Natural refinements_total = 0;
  bool exhaustive = false;
  std::string reason;
};

// Plus-times lemma on u [v] w: equal for all i >= N, or strictly increasing.
Verdict check_nat_plus_times(const FunctionHandle& f, const Word& u, const Word& v, const Word& w,
                             const CheckOptions& opt = {});

// Finite-min lemma over the sets S_1..S_k.
Verdict check_finite_min(const FunctionHandle& f, const PumpingRepresentation& rep, const std::vector<PumpSet>& sets,
                         const CheckOptions& opt = {});

// Polynomially ambiguous min-plus lemma over a partition.
Verdict check_pa_minplus(const FunctionHandle& f, const PumpingRepresentation& rep,
                         const std::vector<PumpSet>& partition, const CheckOptions& opt = {});

// Finitely ambiguous max-plus lemma over the sets S_1..S_k.
Verdict check_fa_maxplus(const FunctionHandle& f, const PumpingRepresentation& rep, const std::vector<PumpSet>& sets,
                         const CheckOptions& opt = {});

// Polynomially ambiguous max-plus lemma over a partition.
Verdict check_pa_maxplus(const FunctionHandle& f, const PumpingRepresentation& rep,
                         const std::vector<PumpSet>& partition, const CheckOptions& opt = {});

// Per-factor refinement options: idempotent infixes, deduplicated by the word
// v_k with y_k doubled (equal keys give equal pumped words for every i).
std::vector<std::vector<FactorSplit>> refinement_options(const LetterMonoid& m, const PumpingRepresentation& rep,
                                                         bool all);

}  // namespace wa
