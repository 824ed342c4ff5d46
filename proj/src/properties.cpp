#include "wa/properties.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "wa/pumping.hpp"

namespace wa {
namespace {

using Rng = std::mt19937_64;

const SemiringTag kAllTags[] = {SemiringTag::MinPlus, SemiringTag::MaxPlus, SemiringTag::PlusTimes, SemiringTag::Bool,
                                SemiringTag::BoolInf};
const SemiringTag kWeighted[] = {SemiringTag::MinPlus, SemiringTag::MaxPlus, SemiringTag::PlusTimes};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Values in 0..50 plus the infinity, or the whole carrier for boolean tags.
Weight random_weight(Rng& rng, SemiringTag tag, std::size_t max = 50) {
  switch (tag) {
    case SemiringTag::Bool: return Weight::finite(tag, pick(rng, 0, 1));
    case SemiringTag::BoolInf: {
      std::size_t k = pick(rng, 0, 2);
      return k == 2 ? Weight::infinity(tag) : Weight::finite(tag, k);
    }
    default: return coin(rng, 0.15) ? Weight::infinity(tag) : Weight::finite(tag, pick(rng, 0, max));
  }
}

Matrix random_matrix(Rng& rng, SemiringTag tag, std::size_t dim, std::size_t max = 5) {
  Matrix m(tag, dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) m.set(p, q, random_weight(rng, tag, max));
  return m;
}

Vec random_vec(Rng& rng, SemiringTag tag, std::size_t dim, std::size_t max = 5) {
  Vec v(tag, dim);
  for (std::size_t p = 0; p < dim; ++p) v.set(p, random_weight(rng, tag, max));
  return v;
}

Word random_word(Rng& rng, const std::string& alphabet, std::size_t max_len) {
  Word w;
  const std::size_t len = pick(rng, 0, max_len);
  for (std::size_t i = 0; i < len; ++i) w += alphabet[pick(rng, 0, alphabet.size() - 1)];
  return w;
}

WeightedAutomaton random_automaton(Rng& rng) {
  const SemiringTag tag = kWeighted[pick(rng, 0, 2)];
  const std::size_t n = pick(rng, 1, 4);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  WeightedAutomaton a(tag, names, "ab");
  auto nonzero = [&] { return Weight::finite(tag, pick(rng, tag == SemiringTag::PlusTimes ? 1 : 0, 4)); };
  for (StateId p = 0; p < n; ++p) {
    if (coin(rng, 0.4)) a.set_initial(p, nonzero());
    if (coin(rng, 0.4)) a.set_final(p, nonzero());
    for (char c : a.alphabet())
      for (StateId q = 0; q < n; ++q)
        if (coin(rng, 0.35)) a.set_transition(p, c, nonzero(), q);
  }
  return a;
}

PumpingRepresentation random_rep(Rng& rng, const std::string& alphabet, std::size_t max_n) {
  const std::size_t n = pick(rng, 1, max_n);
  std::vector<Word> u, v;
  for (std::size_t k = 0; k <= n; ++k) u.push_back(random_word(rng, alphabet, 2));
  for (std::size_t k = 0; k < n; ++k) {
    Word w = random_word(rng, alphabet, 3);
    if (w.empty()) w = alphabet.substr(pick(rng, 0, alphabet.size() - 1), 1);
    v.push_back(w);
  }
  return PumpingRepresentation(u, v);
}

PumpSet random_set(Rng& rng, std::size_t n) {
  std::vector<std::size_t> members;
  for (std::size_t k = 1; k <= n; ++k)
    if (coin(rng, 0.5)) members.push_back(k);
  if (members.empty()) members.push_back(pick(rng, 1, n));
  return members;
}

std::string show(const Weight& w) { return w.to_string(); }

// Each check returns an empty string on success, otherwise a description.
using Check = std::function<std::string(Rng&)>;

std::string semiring_laws(Rng& rng) {
  const SemiringTag tag = kAllTags[pick(rng, 0, 4)];
  const Weight a = random_weight(rng, tag), b = random_weight(rng, tag), c = random_weight(rng, tag);
  const Weight zero = Weight::zero(tag), one = Weight::one(tag);
  std::ostringstream why;
  why << to_string(tag) << " a=" << show(a) << " b=" << show(b) << " c=" << show(c) << ": ";
  if (!((a + b) + c == a + (b + c))) return why.str() + "addition not associative";
  if (!(a + b == b + a)) return why.str() + "addition not commutative";
  if (!((a * b) * c == a * (b * c))) return why.str() + "multiplication not associative";
  if (!(a * (b + c) == a * b + a * c)) return why.str() + "left distributivity fails";
  if (!((a + b) * c == a * c + b * c)) return why.str() + "right distributivity fails";
  if (!(a * zero == zero && zero * a == zero)) return why.str() + "zero does not annihilate";
  if (!(a * one == a && one * a == a)) return why.str() + "one is not neutral";
  if (!(a + zero == a)) return why.str() + "zero is not neutral for addition";
  return "";
}

std::string abstraction_homomorphism(Rng& rng) {
  const SemiringTag tag = kWeighted[pick(rng, 0, 2)];
  const Weight a = random_weight(rng, tag), b = random_weight(rng, tag);
  if (!(sr_abstract(a + b) == sr_abstract(a) + sr_abstract(b)))
    return std::string(to_string(tag)) + " " + show(a) + "," + show(b) + ": abstraction does not preserve addition";
  if (!(sr_abstract(a * b) == sr_abstract(a) * sr_abstract(b)))
    return std::string(to_string(tag)) + " " + show(a) + "," + show(b) + ": abstraction does not preserve product";
  const std::size_t dim = pick(rng, 1, 3);
  const Matrix m = random_matrix(rng, tag, dim), n = random_matrix(rng, tag, dim);
  if (!(abstract_matrix(m * n) == abstract_matrix(m) * abstract_matrix(n)))
    return std::string(to_string(tag)) + ": matrix abstraction does not preserve product\n" + to_table(m) + "\n" +
           to_table(n);
  return "";
}

std::string matrix_associativity(Rng& rng) {
  const SemiringTag tag = kAllTags[pick(rng, 0, 4)];
  const std::size_t dim = pick(rng, 1, 3);
  const Matrix m = random_matrix(rng, tag, dim), n = random_matrix(rng, tag, dim), p = random_matrix(rng, tag, dim);
  if (!((m * n) * p == m * (n * p))) return std::string(to_string(tag)) + ": matrix product not associative";
  return "";
}

// Positivity of x^T M y depends only on the abstraction of M.
std::string positivity_equivalence(Rng& rng) {
  const auto tag = SemiringTag::PlusTimes;
  const std::size_t dim = pick(rng, 1, 3);
  const Matrix m = random_matrix(rng, tag, dim, 3);
  Matrix n(tag, dim);
  for (std::size_t p = 0; p < dim; ++p)
    for (std::size_t q = 0; q < dim; ++q) {
      const Weight& w = m.at(p, q);
      n.set(p, q, w.is_infinite() || w.is_zero() ? w : Weight::finite(tag, pick(rng, 1, 9)));
    }
  const Vec x = random_vec(rng, tag, dim, 3), y = random_vec(rng, tag, dim, 3);
  const bool pm = !bilinear(x, m, y).is_zero(), pn = !bilinear(x, n, y).is_zero();
  if (pm != pn) return "positivity differs for matrices with equal abstraction\n" + to_table(m) + "\n" + to_table(n);
  return "";
}

// Random idempotent plus-times matrix without infinity, by rejection.
Matrix random_idempotent(Rng& rng, std::size_t dim) {
  const auto tag = SemiringTag::PlusTimes;
  while (true) {
    Matrix m(tag, dim);
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q) m.set(p, q, Weight::finite(tag, coin(rng, 0.5) ? pick(rng, 1, 3) : 0));
    if (is_idempotent(m)) return m;
  }
}

std::string idempotent_dichotomy(Rng& rng) {
  const auto tag = SemiringTag::PlusTimes;
  const std::size_t dim = pick(rng, 1, 3);
  const Matrix d = random_idempotent(rng, dim);
  Vec x(tag, dim), y(tag, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    x.set(p, Weight::finite(tag, pick(rng, 0, 3)));
    y.set(p, coin(rng, 0.2) ? Weight::infinity(tag) : Weight::finite(tag, pick(rng, 0, 3)));
  }
  try {
    idempotent_growth(x, d, y, 20);
  } catch (const NotStabilized& e) {
    return std::string(e.what()) + "\n" + to_table(d);
  }
  return "";
}

std::string idempotent_powers(Rng& rng) {
  const SemiringTag tag = kWeighted[pick(rng, 0, 2)];
  const std::size_t dim = pick(rng, 1, 3);
  Matrix d = random_matrix(rng, tag, dim, 3);
  // Some power of any matrix is idempotent; reach it by squaring.
  for (int t = 0; t < 6 && !is_idempotent(d); ++t) d = d * d;
  if (!is_idempotent(d)) return "";
  for (std::size_t k = 1; k <= 8; ++k)
    if (!(abstract_matrix(mat_pow(d, k)) == abstract_matrix(d)))
      return "abstraction of D^" + std::to_string(k) + " differs from D\n" + to_table(d);
  return "";
}

std::string refinement_invariance(Rng& rng) {
  const WeightedAutomaton a = random_automaton(rng);
  WeightedAutomaton b = a;
  auto same_support = [&](const Weight& w) {
    if (w.is_zero() || w.is_infinite()) return w;
    return Weight::finite(w.tag(), pick(rng, a.tag() == SemiringTag::PlusTimes ? 1 : 0, 9));
  };
  for (StateId q = 0; q < a.size(); ++q) {
    b.set_initial(q, same_support(a.initial()[q]));
    b.set_final(q, same_support(a.final_weights()[q]));
  }
  const auto rep = random_rep(rng, "ab", 3);
  std::optional<std::vector<FactorSplit>> ra, rb;
  try {
    ra = refine_rep(a, rep).splits();
  } catch (const NoIdempotentInfix&) {
  }
  try {
    rb = refine_rep(b, rep).splits();
  } catch (const NoIdempotentInfix&) {
  }
  if (ra != rb) return "refinement of " + rep.to_string() + " changed with the initial and final vectors";
  return "";
}

std::string pump_identity(Rng& rng) {
  const auto rep = random_rep(rng, "ab#", 4);
  std::vector<FactorSplit> splits;
  for (std::size_t k = 1; k <= rep.n(); ++k) {
    const std::size_t len = rep.v(k).size();
    const std::size_t offset = pick(rng, 0, len - 1);
    splits.push_back(FactorSplit{offset, pick(rng, 1, len - offset)});
  }
  const RefinedRepresentation r(rep, splits);
  const PumpSet s = random_set(rng, rep.n());
  if (pump_word(r, s, 1) != rep.word())
    return "w(" + to_string(s) + ",1) differs from " + rep.word() + " for " + r.to_string();
  return "";
}

std::string trim_preserves(Rng& rng) {
  const WeightedAutomaton a = random_automaton(rng);
  const WeightedAutomaton t = trim(a);
  for (int i = 0; i < 8; ++i) {
    const Word w = random_word(rng, "ab", 6);
    if (!(evaluate(a, w) == evaluate(t, w)))
      return "trim changed the value on '" + w + "'\n" + to_text(a);
  }
  return "";
}

const std::vector<std::pair<std::string, Check>>& checks() {
  static const std::vector<std::pair<std::string, Check>> c = {
      {"semiring-laws", semiring_laws},
      {"abstraction-homomorphism", abstraction_homomorphism},
      {"matrix-associativity", matrix_associativity},
      {"positivity-equivalence", positivity_equivalence},
      {"idempotent-dichotomy", idempotent_dichotomy},
      {"idempotent-powers", idempotent_powers},
      {"refinement-invariance", refinement_invariance},
      {"pump-identity", pump_identity},
      {"trim-preserves-evaluation", trim_preserves},
  };
  return c;
}

std::uint64_t mix(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return seed ^ h;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [name, check] : checks()) out.push_back(name);
  return out;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t cases) {
  for (const auto& [n, check] : checks()) {
    if (n != name) continue;
    Rng rng(mix(seed, name));
    PropertyResult r{name, cases, 0, ""};
    for (std::size_t i = 0; i < cases; ++i) {
      std::string failure;
      try {
        failure = check(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (!failure.empty() && r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + failure;
    }
    return r;
  }
  throw ContractError("unknown property '" + name + "'");
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases) {
  std::vector<PropertyResult> out;
  for (const auto& name : property_names()) out.push_back(run_property(name, seed, cases));
  return out;
}

}  // namespace wa
